#include "pairorbits/ideal.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <sstream>

#include "pairorbits/errors.hpp"

namespace pairorbits {

bool point_leq(const Point& a, const Point& b) { return a.v >= b.v && a.k - a.v <= b.k - b.v; }

Boundary OrderIdeal::boundary(long k) const {
    Boundary best;
    for (const auto& g : max_points_) {
        long v = std::max(g.v, k - g.k + g.v);
        if (v < k && (!best || v < *best)) best = v;
    }
    return best;
}

long OrderIdeal::clamped_boundary(long k) const { return boundary(k).value_or(k); }

bool OrderIdeal::contains(const Point& p) const {
    auto b = boundary(p.k);
    return b && p.v >= *b && p.v < p.k;
}

OrderIdeal ideal_from_generators(std::vector<Point> gens) {
    for (const auto& g : gens) {
        if (g.k <= 0 || g.v < 0 || g.v >= g.k) {
            throw InputError("point " + std::to_string(g.v) + ":" + std::to_string(g.k) + " is not in the poset");
        }
    }
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    OrderIdeal out;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        bool dominated = false;
        for (std::size_t j = 0; j < gens.size() && !dominated; ++j) {
            dominated = j != i && point_leq(gens[i], gens[j]);
        }
        if (!dominated) out.max_points_.push_back(gens[i]);
    }
    std::sort(out.max_points_.begin(), out.max_points_.end(), [](const Point& a, const Point& b) {
        return a.k != b.k ? a.k > b.k : a.v < b.v;
    });
    return out;
}

bool is_subset(const OrderIdeal& a, const OrderIdeal& b) {
    return std::all_of(a.max_points().begin(), a.max_points().end(),
                       [&](const Point& p) { return b.contains(p); });
}

OrderIdeal ideal_union(const OrderIdeal& a, const OrderIdeal& b) {
    std::vector<Point> gens = a.max_points();
    gens.insert(gens.end(), b.max_points().begin(), b.max_points().end());
    return ideal_from_generators(std::move(gens));
}

OrderIdeal ideal_intersect(const OrderIdeal& a, const OrderIdeal& b, const std::optional<std::vector<long>>& rows) {
    if (!rows) throw MissingContext("intersection of ideals needs a row set");
    std::vector<Point> gens;
    for (long k : *rows) {
        auto ba = a.boundary(k);
        auto bb = b.boundary(k);
        if (ba && bb) gens.push_back({std::max(*ba, *bb), k});
    }
    return ideal_from_generators(std::move(gens));
}

OrderIdeal restrict_to(const OrderIdeal& ideal, const Partition& lambda) {
    std::vector<Point> gens;
    for (long k : lambda.distinct_parts()) {
        if (auto b = ideal.boundary(k)) gens.push_back({*b, k});
    }
    return ideal_from_generators(std::move(gens));
}

bool in_context(const OrderIdeal& ideal, const Partition& lambda) {
    return std::all_of(ideal.max_points().begin(), ideal.max_points().end(),
                       [&](const Point& p) { return lambda.has_part(p.k); });
}

long weighted_size(const Partition& lambda, const OrderIdeal& ideal) {
    long total = 0;
    for (auto [k, m] : lambda.pairs()) {
        if (auto b = ideal.boundary(k)) total += m * (k - *b);
    }
    return total;
}

std::string to_string(const OrderIdeal& ideal) {
    std::ostringstream os;
    bool first = true;
    for (const auto& p : ideal.max_points()) {
        if (!first) os << ",";
        first = false;
        os << p.v << ":" << p.k;
    }
    return os.str();
}

namespace {

long parse_number(std::string_view tok, std::string_view whole) {
    long v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
        throw ParseError("bad ideal \"" + std::string(whole) + "\": expected v:k pairs");
    }
    return v;
}

}  // namespace

OrderIdeal parse_ideal(std::string_view text) {
    std::string cleaned;
    for (char c : text) {
        if (c != ' ' && c != '\t' && c != '{' && c != '}') cleaned.push_back(c);
    }
    std::vector<Point> gens;
    std::string_view rest = cleaned;
    while (!rest.empty()) {
        auto comma = rest.find(',');
        std::string_view tok = rest.substr(0, comma);
        auto colon = tok.find(':');
        if (colon == std::string_view::npos) throw ParseError("bad ideal \"" + std::string(text) + "\": expected v:k pairs");
        Point p{parse_number(tok.substr(0, colon), text), parse_number(tok.substr(colon + 1), text)};
        if (p.k <= 0 || p.v < 0 || p.v >= p.k) {
            throw ParseError("bad ideal \"" + std::string(text) + "\": need 0 <= v < k");
        }
        gens.push_back(p);
        if (comma == std::string_view::npos) break;
        rest = rest.substr(comma + 1);
    }
    return ideal_from_generators(std::move(gens));
}

std::vector<OrderIdeal> enumerate_ideals(const Partition& lambda) {
    const std::vector<long> rows = lambda.distinct_parts();
    std::vector<long> bounds(rows.size());
    std::vector<OrderIdeal> out;

    // rows[i] > rows[j] for i < j; bounds hold the clamped boundary.
    auto compatible = [&](std::size_t j) {
        const long kj = rows[j];
        const long bj = bounds[j];
        for (std::size_t i = 0; i < j; ++i) {
            const long ki = rows[i];
            const long bi = bounds[i];
            if (bi < kj && bj > bi) return false;
            if (bj < kj && bi > ki - kj + bj) return false;
        }
        return true;
    };

    std::function<void(std::size_t)> rec = [&](std::size_t j) {
        if (j == rows.size()) {
            std::vector<Point> gens;
            for (std::size_t i = 0; i < rows.size(); ++i) {
                if (bounds[i] < rows[i]) gens.push_back({bounds[i], rows[i]});
            }
            out.push_back(ideal_from_generators(std::move(gens)));
            return;
        }
        for (long b = rows[j]; b >= 0; --b) {
            bounds[j] = b;
            if (compatible(j)) rec(j + 1);
        }
    };
    rec(0);

    std::vector<std::pair<long, OrderIdeal>> keyed;
    keyed.reserve(out.size());
    for (auto& ideal : out) keyed.emplace_back(weighted_size(lambda, ideal), std::move(ideal));
    std::sort(keyed.begin(), keyed.end());
    out.clear();
    for (auto& [w, ideal] : keyed) out.push_back(std::move(ideal));
    return out;
}

OrderIdeal maximal_ideal(const Partition& lambda) {
    std::vector<Point> gens;
    for (long k : lambda.distinct_parts()) gens.push_back({0, k});
    return ideal_from_generators(std::move(gens));
}

IdealLattice::IdealLattice(Partition lambda) : lambda_(std::move(lambda)), ideals_(enumerate_ideals(lambda_)) {
    const std::size_t n = ideals_.size();
    for (std::size_t i = 0; i < n; ++i) index_.emplace(ideals_[i], i);
    subset_.assign(n, std::vector<bool>(n, false));
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) subset_[a][b] = is_subset(ideals_[a], ideals_[b]);
    }
    mobius_rows_.resize(n);
}

IdealLattice::IdealLattice(const IdealLattice& other)
    : lambda_(other.lambda_), ideals_(other.ideals_), index_(other.index_), subset_(other.subset_) {
    std::lock_guard lock(other.memo_mutex_);
    mobius_rows_ = other.mobius_rows_;
}

std::optional<std::size_t> IdealLattice::find(const OrderIdeal& ideal) const {
    auto it = index_.find(ideal);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::size_t IdealLattice::index_of(const OrderIdeal& ideal) const {
    auto i = find(ideal);
    if (!i) throw IdealOutOfContext("ideal {" + to_string(ideal) + "} is not in J(P) for (" + to_string(lambda_) + ")");
    return *i;
}

std::vector<std::size_t> IdealLattice::lower_interval(std::size_t b) const {
    std::vector<std::size_t> out;
    for (std::size_t c = 0; c < ideals_.size(); ++c) {
        if (subset_[c][b]) out.push_back(c);
    }
    return out;
}

long IdealLattice::mobius(std::size_t a, std::size_t b) const {
    if (!subset_[a][b]) {
        throw NotComparable("{" + to_string(ideals_[a]) + "} is not contained in {" + to_string(ideals_[b]) + "}");
    }
    std::lock_guard lock(memo_mutex_);
    auto& row = mobius_rows_[a];
    if (row.empty()) {
        // Ideals are sorted by weighted size, and a strict inclusion strictly
        // increases it, so every c < x in the lattice comes before x.
        const std::size_t n = ideals_.size();
        row.assign(n, 0);
        row[a] = 1;
        for (std::size_t x = a + 1; x < n; ++x) {
            if (!subset_[a][x]) continue;
            long sum = 0;
            for (std::size_t c = a; c < x; ++c) {
                if (subset_[a][c] && subset_[c][x]) sum += row[c];
            }
            row[x] = -sum;
        }
    }
    return row[b];
}

}  // namespace pairorbits
