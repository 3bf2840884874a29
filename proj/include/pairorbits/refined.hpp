#pragma once

#include <optional>
#include <vector>

#include "pairorbits/orbitcount.hpp"

namespace pairorbits {

// Counts of x in R/P^k by exact valuation w (w = k stands for x = 0).
struct ValuationProfile {
    long k = 0;
    std::vector<QPolynomial> per_valuation;  // size k + 1

    QPolynomial total() const;
};

// x in R/P^k with v(x) >= a and v(x - y) >= b, for any y of valuation vy
// (nullopt, or vy >= k, means y = 0). The answer depends only on these four
// numbers, which is what makes the coordinate-by-coordinate count below work.
ValuationProfile coset_count(long k, long a, long b, std::optional<long> vy);

// #{m' in M'_L : image of m' in M'/R m(I) lies in the submodule for J}.
QPolynomial s_count(const CanonicalSplit& split, const OrderIdeal& l, const OrderIdeal& j);
// #{m' in M'_L : I(image of m') = J}, by Moebius inversion of s_count over J.
QPolynomial exact_fiber_count(const CanonicalSplit& split, const OrderIdeal& l, const OrderIdeal& j);
// #{m in X_{I,J,K} : m in M_L}.
QPolynomial y_count(const Partition& lambda, const OrderIdeal& i, const OrderIdeal& j, const OrderIdeal& k,
                    const OrderIdeal& l);

// Orbit cardinality -> number of G-orbits in M*_I x M*_L of that cardinality.
Census refined_census(const Partition& lambda, const OrderIdeal& i, const OrderIdeal& l);

// All refined counts for one shape. Rows and columns follow the lattice order.
class RefinedCounter {
public:
    explicit RefinedCounter(Partition lambda);

    const IdealLattice& lattice() const { return *lattice_; }

    struct Cell {
        OrderIdeal j;
        OrderIdeal k;
        QPolynomial alpha;
        QPolynomial x;
        std::vector<QPolynomial> x_in;  // indexed by L
    };

    // Cells for a fixed I with the X_{I,J,K} mass split over every L.
    std::vector<Cell> cells(std::size_t i) const;
    // Census for every L at once.
    std::vector<Census> censuses(std::size_t i) const;
    // totals[i][l] = number of orbits in M*_I x M*_L.
    std::vector<std::vector<QPolynomial>> matrix() const;

private:
    Partition lambda_;
    std::shared_ptr<const IdealLattice> lattice_;
};

}  // namespace pairorbits
