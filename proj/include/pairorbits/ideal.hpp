#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pairorbits/partition.hpp"

namespace pairorbits {

// A point (v, k) of the fundamental poset: valuation v in row k, 0 <= v < k.
struct Point {
    long v;
    long k;
    friend auto operator<=>(const Point&, const Point&) = default;
};

// a <= b iff a.v >= b.v and a.k - a.v <= b.k - b.v, i.e. an element of
// valuation a.v in R/P^{a.k} is a homomorphic image of one of valuation b.v
// in R/P^{b.k}.
bool point_leq(const Point& a, const Point& b);

// Least valuation in row k, or nullopt when the row misses the ideal.
using Boundary = std::optional<long>;

// An order ideal of the fundamental poset, stored as the antichain of its
// maximal points sorted by descending row. Row membership is computed from the
// generators, so ideals from different partitions combine freely.
class OrderIdeal {
public:
    OrderIdeal() = default;

    const std::vector<Point>& max_points() const { return max_points_; }
    bool empty() const { return max_points_.empty(); }

    Boundary boundary(long k) const;
    // The boundary with EMPTY read as k ("coordinate must vanish").
    long clamped_boundary(long k) const;
    bool contains(const Point& p) const;

    friend bool operator==(const OrderIdeal&, const OrderIdeal&) = default;
    friend auto operator<=>(const OrderIdeal&, const OrderIdeal&) = default;

private:
    friend OrderIdeal ideal_from_generators(std::vector<Point> gens);
    std::vector<Point> max_points_;
};

OrderIdeal ideal_from_generators(std::vector<Point> gens);

bool is_subset(const OrderIdeal& a, const OrderIdeal& b);
OrderIdeal ideal_union(const OrderIdeal& a, const OrderIdeal& b);
// Intersection is only determined on a finite set of rows; rows outside the
// context are dropped. Throws MissingContext when no rows are given.
OrderIdeal ideal_intersect(const OrderIdeal& a, const OrderIdeal& b, const std::optional<std::vector<long>>& rows);

// The ideal generated by the points of `ideal` lying on rows of lambda.
OrderIdeal restrict_to(const OrderIdeal& ideal, const Partition& lambda);

// max points all lie on rows of lambda.
bool in_context(const OrderIdeal& ideal, const Partition& lambda);

// [I]_lambda: points of I on lambda's rows, counted with multiplicity.
long weighted_size(const Partition& lambda, const OrderIdeal& ideal);

// "1:4,0:1" (v:k pairs); "" is the empty ideal.
std::string to_string(const OrderIdeal& ideal);
OrderIdeal parse_ideal(std::string_view text);

// The distributive lattice J(P)_lambda of ideals whose maximal points lie on
// rows of lambda, with a memoized Moebius function.
class IdealLattice {
public:
    explicit IdealLattice(Partition lambda);
    IdealLattice(const IdealLattice& other);
    IdealLattice& operator=(const IdealLattice&) = delete;

    const Partition& shape() const { return lambda_; }
    const std::vector<OrderIdeal>& ideals() const { return ideals_; }
    std::size_t size() const { return ideals_.size(); }
    const OrderIdeal& operator[](std::size_t i) const { return ideals_[i]; }

    std::optional<std::size_t> find(const OrderIdeal& ideal) const;
    // Throws IdealOutOfContext.
    std::size_t index_of(const OrderIdeal& ideal) const;

    bool leq(std::size_t a, std::size_t b) const { return subset_[a][b]; }
    // Indices c with c <= b.
    std::vector<std::size_t> lower_interval(std::size_t b) const;

    // Throws NotComparable unless a <= b.
    long mobius(std::size_t a, std::size_t b) const;
    long mobius(const OrderIdeal& a, const OrderIdeal& b) const { return mobius(index_of(a), index_of(b)); }

private:
    Partition lambda_;
    std::vector<OrderIdeal> ideals_;
    std::map<OrderIdeal, std::size_t> index_;
    std::vector<std::vector<bool>> subset_;

    // Row a holds mu(a, x) for every x; filled on first use.
    mutable std::mutex memo_mutex_;
    mutable std::vector<std::vector<long>> mobius_rows_;
};

// Ideals of J(P)_lambda ordered by weighted size, then antichain.
std::vector<OrderIdeal> enumerate_ideals(const Partition& lambda);

// The maximal ideal of J(P)_lambda (generated by all of P_lambda).
OrderIdeal maximal_ideal(const Partition& lambda);

}  // namespace pairorbits
