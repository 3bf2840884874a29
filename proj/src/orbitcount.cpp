#include "pairorbits/orbitcount.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <thread>

#include "pairorbits/errors.hpp"

namespace pairorbits {

std::shared_ptr<const IdealLattice> lattice_for(const Partition& lambda) {
    static std::mutex mutex;
    static std::map<Partition, std::shared_ptr<const IdealLattice>> cache;
    {
        std::lock_guard lock(mutex);
        if (auto it = cache.find(lambda); it != cache.end()) return it->second;
    }
    auto built = std::make_shared<const IdealLattice>(lambda);
    std::lock_guard lock(mutex);
    return cache.try_emplace(lambda, std::move(built)).first->second;
}

namespace {

void require_context(const Partition& lambda, const OrderIdeal& ideal) {
    if (!in_context(ideal, lambda)) {
        throw IdealOutOfContext("ideal {" + to_string(ideal) + "} has maximal points off the rows of (" +
                                to_string(lambda) + ")");
    }
}

void require_member(const Partition& lambda, const OrderIdeal& ideal, const char* what) {
    if (!in_context(ideal, lambda)) {
        throw ContextMismatch(std::string(what) + " = {" + to_string(ideal) + "} is not an ideal of J(P) for (" +
                              to_string(lambda) + ")");
    }
}

bool contains_all(const std::vector<Point>& haystack, const std::vector<Point>& needles) {
    return std::all_of(needles.begin(), needles.end(), [&](const Point& p) {
        return std::find(haystack.begin(), haystack.end(), p) != haystack.end();
    });
}

// Maximal points of `base` that are not members of `other`.
std::vector<Point> max_minus(const OrderIdeal& base, const OrderIdeal& other) {
    std::vector<Point> out;
    for (const auto& p : base.max_points()) {
        if (!other.contains(p)) out.push_back(p);
    }
    return out;
}

std::vector<OrderIdeal> filter_sum(const Partition& lambda, const OrderIdeal& bound,
                                   const std::vector<Point>& required) {
    std::vector<OrderIdeal> out;
    for (const auto& k : lattice_for(lambda)->ideals()) {
        if (is_subset(k, bound) && contains_all(k.max_points(), required)) out.push_back(k);
    }
    return out;
}

// alpha once the orbit sizes over lambda'' are known.
QPolynomial alpha_from_parts(const CanonicalSplit& split, const IdealLattice& dprime,
                             const std::vector<QPolynomial>& dprime_orbit_sizes, const OrderIdeal& j,
                             const OrderIdeal& k) {
    const OrderIdeal u = ideal_union(j, k);
    const std::vector<Point> required = max_minus(k, j);
    QPolynomial sum;
    for (std::size_t c = 0; c < dprime.size(); ++c) {
        const auto& kp = dprime[c];
        if (is_subset(kp, u) && contains_all(kp.max_points(), required)) sum += dprime_orbit_sizes[c];
    }
    QPolynomial result = QPolynomial::q_power(static_cast<std::size_t>(weighted_size(split.lambda_prime, u))) * sum;
    const long expected = weighted_size(split.source, u);
    if (!result.is_monic() || result.degree() != expected) {
        throw DegreeMismatch("alpha for I={" + to_string(split.ideal) + "}, J={" + to_string(j) + "}, K={" +
                             to_string(k) + "} is " + to_string(result) + ", expected monic of degree " +
                             std::to_string(expected));
    }
    return result;
}

std::vector<QPolynomial> orbit_sizes(const IdealLattice& lattice) {
    std::vector<QPolynomial> out;
    out.reserve(lattice.size());
    for (const auto& k : lattice.ideals()) out.push_back(orbit_size(lattice.shape(), k));
    return out;
}

}  // namespace

QPolynomial orbit_size(const Partition& lambda, const OrderIdeal& ideal) {
    require_context(lambda, ideal);
    std::vector<long> factors;
    for (const auto& p : ideal.max_points()) factors.push_back(lambda.multiplicity(p.k));
    return laurent_product(weighted_size(lambda, ideal), factors);
}

QPolynomial submodule_size(const Partition& lambda, const OrderIdeal& ideal) {
    return QPolynomial::q_power(static_cast<std::size_t>(weighted_size(lambda, ideal)));
}

CanonicalSplit canonical_split(const Partition& lambda, const OrderIdeal& ideal) {
    require_context(lambda, ideal);
    CanonicalSplit split;
    split.source = lambda;
    split.ideal = ideal;
    split.prime_parts = ideal.max_points();
    std::vector<long> ks;
    for (const auto& p : split.prime_parts) ks.push_back(p.k);
    split.lambda_prime = Partition::from_parts(ks);
    split.lambda_dprime = remove_parts(lambda, ks);
    std::vector<long> quotient_parts;
    const auto& pp = split.prime_parts;
    for (std::size_t j = 0; j < pp.size(); ++j) {
        long row = j + 1 < pp.size() ? pp[j].v + pp[j + 1].k - pp[j + 1].v : pp[j].v;
        split.quotient_rows.push_back(row);
        if (row > 0) quotient_parts.push_back(row);
    }
    split.quotient = Partition::from_parts(quotient_parts);
    return split;
}

std::vector<OrderIdeal> sum_orbit_orbit(const Partition& lambda, const OrderIdeal& i, const OrderIdeal& j) {
    require_context(lambda, i);
    require_context(lambda, j);
    std::vector<Point> required = max_minus(i, j);
    for (const auto& p : max_minus(j, i)) required.push_back(p);
    return filter_sum(lambda, ideal_union(i, j), required);
}

std::vector<OrderIdeal> sum_orbit_submodule(const Partition& lambda, const OrderIdeal& i, const OrderIdeal& j) {
    require_context(lambda, i);
    require_context(lambda, j);
    return filter_sum(lambda, ideal_union(i, j), max_minus(i, j));
}

QPolynomial alpha(const Partition& lambda, const OrderIdeal& i, const OrderIdeal& j, const OrderIdeal& k) {
    const CanonicalSplit split = canonical_split(lambda, i);
    require_member(split.quotient, j, "J");
    require_member(split.lambda_dprime, k, "K");
    const auto dprime = lattice_for(split.lambda_dprime);
    return alpha_from_parts(split, *dprime, orbit_sizes(*dprime), j, k);
}

QPolynomial x_count(const Partition& lambda, const OrderIdeal& i, const OrderIdeal& j, const OrderIdeal& k) {
    const CanonicalSplit split = canonical_split(lambda, i);
    require_member(split.quotient, j, "J");
    require_member(split.lambda_dprime, k, "K");
    return QPolynomial::q_power(static_cast<std::size_t>(split.fiber_exponent())) * orbit_size(split.quotient, j) *
           orbit_size(split.lambda_dprime, k);
}

OrbitCounter::OrbitCounter(Partition lambda) : lambda_(std::move(lambda)), lattice_(lattice_for(lambda_)) {}

std::vector<CensusCell> OrbitCounter::cells(const OrderIdeal& i) const {
    const CanonicalSplit split = canonical_split(lambda_, i);
    const auto quotient = lattice_for(split.quotient);
    const auto dprime = lattice_for(split.lambda_dprime);
    const auto quotient_sizes = orbit_sizes(*quotient);
    const auto dprime_sizes = orbit_sizes(*dprime);
    const QPolynomial fiber = QPolynomial::q_power(static_cast<std::size_t>(split.fiber_exponent()));

    std::vector<CensusCell> out;
    out.reserve(quotient->size() * dprime->size());
    for (std::size_t a = 0; a < quotient->size(); ++a) {
        const QPolynomial fiber_j = fiber * quotient_sizes[a];
        for (std::size_t b = 0; b < dprime->size(); ++b) {
            const auto& j = (*quotient)[a];
            const auto& k = (*dprime)[b];
            out.push_back({j, k, alpha_from_parts(split, *dprime, dprime_sizes, j, k), fiber_j * dprime_sizes[b]});
        }
    }
    return out;
}

Census OrbitCounter::census(const OrderIdeal& i) const {
    std::map<QPolynomial, QPolynomial> mass;
    QPolynomial total_mass;
    for (auto& cell : cells(i)) {
        total_mass += cell.x;
        mass[cell.alpha] += cell.x;
    }
    const QPolynomial whole = QPolynomial::q_power(static_cast<std::size_t>(lambda_.weight()));
    if (total_mass != whole) {
        throw ConsistencyError("cells for I={" + to_string(i) + "} cover " + to_string(total_mass) + " elements, not " +
                               to_string(whole));
    }
    Census out;
    for (auto& [a, x] : mass) out.emplace(a, exact_div(x, a));
    return out;
}

QPolynomial OrbitCounter::per_ideal_total(const OrderIdeal& i) const {
    QPolynomial sum;
    for (const auto& [a, n] : census(i)) sum += n;
    return sum;
}

QPolynomial OrbitCounter::total() const {
    QPolynomial sum;
    for (const auto& i : lattice_->ideals()) sum += per_ideal_total(i);
    return sum;
}

Census orbit_census(const Partition& lambda, const OrderIdeal& ideal) { return OrbitCounter(lambda).census(ideal); }

QPolynomial per_ideal_total(const Partition& lambda, const OrderIdeal& ideal) {
    return OrbitCounter(lambda).per_ideal_total(ideal);
}

std::optional<QPolynomial> NLambdaTable::find(const Partition& lambda) const {
    std::shared_lock lock(mutex_);
    auto it = entries_.find(lambda);
    if (it == entries_.end()) return std::nullopt;
    return it->second;
}

void NLambdaTable::insert(const Partition& lambda, QPolynomial value) {
    std::unique_lock lock(mutex_);
    entries_.insert_or_assign(lambda, std::move(value));
}

std::map<Partition, QPolynomial> NLambdaTable::snapshot() const {
    std::shared_lock lock(mutex_);
    return entries_;
}

std::size_t NLambdaTable::size() const {
    std::shared_lock lock(mutex_);
    return entries_.size();
}

namespace {

void check_degree(const Partition& lambda, const QPolynomial& n) {
    if (!n.is_monic() || n.degree() != lambda.largest() || !n.is_integer_coefficients()) {
        throw DegreeMismatch("n_lambda for (" + to_string(lambda) + ") = " + to_string(n) +
                             " is not a monic integer polynomial of degree " + std::to_string(lambda.largest()));
    }
}

}  // namespace

QPolynomial n_lambda(const Partition& lambda, NLambdaTable* cache) {
    const Partition capped = cap_multiplicities(lambda, 2);
    if (cache) {
        if (auto hit = cache->find(capped)) return *hit;
    }
    QPolynomial n = OrbitCounter(capped).total();
    check_degree(capped, n);
    if (cache) cache->insert(capped, n);
    return n;
}

QPolynomial n_lambda_uncapped(const Partition& lambda) {
    QPolynomial n = OrbitCounter(lambda).total();
    check_degree(lambda, n);
    return n;
}

std::vector<std::pair<Partition, QPolynomial>> n_lambda_rows(long n, NLambdaTable* cache, unsigned threads) {
    const auto shapes = partitions_of(n);
    std::vector<std::pair<Partition, QPolynomial>> rows(shapes.size());
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = std::min<unsigned>(threads, static_cast<unsigned>(shapes.size()));

    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto work = [&] {
        for (std::size_t i = next++; i < shapes.size(); i = next++) {
            try {
                rows[i] = {shapes[i], n_lambda(shapes[i], cache)};
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
            }
        }
    };
    if (threads <= 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work);
        for (auto& t : pool) t.join();
    }
    if (failure) std::rethrow_exception(failure);
    return rows;
}

}  // namespace pairorbits
