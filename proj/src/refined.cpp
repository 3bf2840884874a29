#include "pairorbits/refined.hpp"

#include <algorithm>

#include "pairorbits/errors.hpp"

namespace pairorbits {

QPolynomial ValuationProfile::total() const {
    QPolynomial sum;
    for (const auto& c : per_valuation) sum += c;
    return sum;
}

ValuationProfile coset_count(long k, long a, long b, std::optional<long> vy) {
    a = std::clamp(a, 0L, k);
    b = std::clamp(b, 0L, k);
    ValuationProfile out{k, std::vector<QPolynomial>(static_cast<std::size_t>(k) + 1)};
    const bool y_zero = !vy || *vy >= k;
    if (y_zero || *vy >= b) {
        // The condition on x - y collapses to v(x) >= b.
        const long level = std::max(a, b);
        for (long w = level; w < k; ++w) {
            out.per_valuation[static_cast<std::size_t>(w)] =
                QPolynomial::q_power(static_cast<std::size_t>(k - w)) - QPolynomial::q_power(static_cast<std::size_t>(k - w - 1));
        }
        out.per_valuation[static_cast<std::size_t>(k)] = QPolynomial{1};
    } else if (*vy >= a) {
        // x ranges over the coset y + P^b, all of valuation vy.
        out.per_valuation[static_cast<std::size_t>(*vy)] = QPolynomial::q_power(static_cast<std::size_t>(k - b));
    }
    return out;
}

QPolynomial s_count(const CanonicalSplit& split, const OrderIdeal& l, const OrderIdeal& j) {
    const auto& pp = split.prime_parts;
    if (pp.empty()) return QPolynomial{1};
    if (!in_context(j, split.quotient)) {
        throw ContextMismatch("J = {" + to_string(j) + "} is not an ideal for (" + to_string(split.quotient) + ")");
    }
    const std::size_t s = pp.size();
    auto lower = [&](std::size_t c) { return l.clamped_boundary(pp[c].k); };
    auto quotient_bound = [&](std::size_t c) {
        const long row = split.quotient_rows[c];
        return row > 0 ? j.clamped_boundary(row) : 0L;
    };

    ValuationProfile state = coset_count(pp[s - 1].k, lower(s - 1), quotient_bound(s - 1), std::nullopt);
    for (std::size_t c = s - 1; c-- > 0;) {
        const long shift = pp[c].v - pp[c + 1].v;
        const long prev_k = pp[c + 1].k;
        ValuationProfile next{pp[c].k, std::vector<QPolynomial>(static_cast<std::size_t>(pp[c].k) + 1)};
        for (long w = 0; w <= prev_k; ++w) {
            const auto& weight = state.per_valuation[static_cast<std::size_t>(w)];
            if (weight.is_zero()) continue;
            std::optional<long> vy;
            if (w < prev_k) vy = w + shift;
            const auto profile = coset_count(pp[c].k, lower(c), quotient_bound(c), vy);
            for (std::size_t x = 0; x < profile.per_valuation.size(); ++x) {
                if (!profile.per_valuation[x].is_zero()) next.per_valuation[x] += weight * profile.per_valuation[x];
            }
        }
        state = std::move(next);
    }
    return state.total();
}

QPolynomial exact_fiber_count(const CanonicalSplit& split, const OrderIdeal& l, const OrderIdeal& j) {
    const auto quotient = lattice_for(split.quotient);
    const std::size_t top = quotient->index_of(j);
    QPolynomial sum;
    for (std::size_t c : quotient->lower_interval(top)) {
        const long mu = quotient->mobius(c, top);
        if (mu != 0) sum += s_count(split, l, (*quotient)[c]) * Rational(mu);
    }
    return sum;
}

QPolynomial y_count(const Partition& lambda, const OrderIdeal& i, const OrderIdeal& j, const OrderIdeal& k,
                    const OrderIdeal& l) {
    const CanonicalSplit split = canonical_split(lambda, i);
    if (!in_context(k, split.lambda_dprime)) {
        throw ContextMismatch("K = {" + to_string(k) + "} is not an ideal for (" + to_string(split.lambda_dprime) + ")");
    }
    if (!in_context(l, lambda)) throw IdealOutOfContext("L = {" + to_string(l) + "} is not in context");
    if (!is_subset(k, l)) return {};
    return exact_fiber_count(split, l, j) * orbit_size(split.lambda_dprime, k);
}

namespace {

Census group_and_divide(const std::vector<std::pair<QPolynomial, QPolynomial>>& alpha_mass) {
    std::map<QPolynomial, QPolynomial> mass;
    for (const auto& [a, x] : alpha_mass) {
        if (!x.is_zero()) mass[a] += x;
    }
    Census out;
    for (auto& [a, x] : mass) {
        if (x.is_zero()) continue;
        out.emplace(a, exact_div(x, a));
    }
    return out;
}

}  // namespace

RefinedCounter::RefinedCounter(Partition lambda) : lambda_(std::move(lambda)), lattice_(lattice_for(lambda_)) {}

std::vector<RefinedCounter::Cell> RefinedCounter::cells(std::size_t i) const {
    const auto& lat = *lattice_;
    const std::size_t n = lat.size();
    const CanonicalSplit split = canonical_split(lambda_, lat[i]);
    const auto quotient = lattice_for(split.quotient);

    // fiber[a][l] = #{m' in M'_L : I(image of m') = J_a}
    std::vector<std::vector<QPolynomial>> fiber(quotient->size(), std::vector<QPolynomial>(n));
    for (std::size_t l = 0; l < n; ++l) {
        std::vector<QPolynomial> s(quotient->size());
        for (std::size_t a = 0; a < quotient->size(); ++a) s[a] = s_count(split, lat[l], (*quotient)[a]);
        for (std::size_t a = 0; a < quotient->size(); ++a) {
            QPolynomial sum;
            for (std::size_t c : quotient->lower_interval(a)) {
                const long mu = quotient->mobius(c, a);
                if (mu != 0) sum += s[c] * Rational(mu);
            }
            fiber[a][l] = std::move(sum);
        }
    }

    std::vector<Cell> out;
    for (auto& base : OrbitCounter(lambda_).cells(lat[i])) {
        Cell cell{base.j, base.k, base.alpha, base.x, std::vector<QPolynomial>(n)};
        const std::size_t a = quotient->index_of(base.j);
        const QPolynomial k_orbit = orbit_size(split.lambda_dprime, base.k);
        std::vector<QPolynomial> y(n);
        for (std::size_t l = 0; l < n; ++l) {
            if (is_subset(base.k, lat[l])) y[l] = fiber[a][l] * k_orbit;
        }
        for (std::size_t l = 0; l < n; ++l) {
            QPolynomial sum;
            for (std::size_t lp : lat.lower_interval(l)) {
                const long mu = lat.mobius(lp, l);
                if (mu != 0 && !y[lp].is_zero()) sum += y[lp] * Rational(mu);
            }
            cell.x_in[l] = std::move(sum);
        }
        out.push_back(std::move(cell));
    }
    return out;
}

std::vector<Census> RefinedCounter::censuses(std::size_t i) const {
    const std::size_t n = lattice_->size();
    std::vector<std::vector<std::pair<QPolynomial, QPolynomial>>> mass(n);
    for (auto& cell : cells(i)) {
        for (std::size_t l = 0; l < n; ++l) mass[l].emplace_back(cell.alpha, cell.x_in[l]);
    }
    std::vector<Census> out;
    out.reserve(n);
    for (auto& m : mass) out.push_back(group_and_divide(m));
    return out;
}

std::vector<std::vector<QPolynomial>> RefinedCounter::matrix() const {
    const std::size_t n = lattice_->size();
    std::vector<std::vector<QPolynomial>> out(n, std::vector<QPolynomial>(n));
    for (std::size_t i = 0; i < n; ++i) {
        auto per_l = censuses(i);
        for (std::size_t l = 0; l < n; ++l) {
            for (const auto& [a, count] : per_l[l]) out[i][l] += count;
        }
    }
    return out;
}

Census refined_census(const Partition& lambda, const OrderIdeal& i, const OrderIdeal& l) {
    RefinedCounter counter(lambda);
    const std::size_t li = counter.lattice().index_of(l);
    return counter.censuses(counter.lattice().index_of(i))[li];
}

}  // namespace pairorbits
