#pragma once

#include <map>
#include <memory>
#include <optional>
#include <shared_mutex>
#include <vector>

#include "pairorbits/ideal.hpp"
#include "pairorbits/partition.hpp"
#include "pairorbits/polynomial.hpp"

namespace pairorbits {

// Shared, lazily built lattices J(P)_lambda. Safe to call concurrently.
std::shared_ptr<const IdealLattice> lattice_for(const Partition& lambda);

// |M*_I| = q^{[I]} prod over max points (1 - q^{-m_i}).
QPolynomial orbit_size(const Partition& lambda, const OrderIdeal& ideal);
// |M_I| = q^{[I]}; the ideal may come from another context.
QPolynomial submodule_size(const Partition& lambda, const OrderIdeal& ideal);

// M = M' + M'' relative to the canonical representative m(I): M' holds one
// cyclic summand R/P^{k_j} per maximal point (v_j, k_j) of I.
struct CanonicalSplit {
    Partition source;
    OrderIdeal ideal;
    std::vector<Point> prime_parts;  // max I, descending k
    Partition lambda_prime;
    Partition lambda_dprime;
    Partition quotient;              // shape of M'/R m(I)
    // Row of the quotient module that coordinate j of M' maps to (v_j + k_{j+1} - v_{j+1},
    // and v_s for the last one); 0 when that quotient part vanishes.
    std::vector<long> quotient_rows;

    // log_q |R m(I)| = k_1 - v_1 (0 for the empty ideal).
    long fiber_exponent() const { return prime_parts.empty() ? 0 : prime_parts.front().k - prime_parts.front().v; }
};

CanonicalSplit canonical_split(const Partition& lambda, const OrderIdeal& ideal);

// Ideals K with M*_I + M*_J = union of M*_K. Only valid for q >= 3.
std::vector<OrderIdeal> sum_orbit_orbit(const Partition& lambda, const OrderIdeal& i, const OrderIdeal& j);
// Ideals K with M*_I + M_J = union of M*_K. Valid for every q.
std::vector<OrderIdeal> sum_orbit_submodule(const Partition& lambda, const OrderIdeal& i, const OrderIdeal& j);

// Size of the stabilizer orbit of any element with invariants (J, K), where J
// lives in J(P) of the quotient shape and K in J(P) of lambda''.
QPolynomial alpha(const Partition& lambda, const OrderIdeal& i, const OrderIdeal& j, const OrderIdeal& k);
// Number of elements m = (m', m'') with I(m' mod R m(I)) = J and I(m'') = K.
QPolynomial x_count(const Partition& lambda, const OrderIdeal& i, const OrderIdeal& j, const OrderIdeal& k);

// Orbit cardinality -> number of stabilizer orbits of that cardinality.
using Census = std::map<QPolynomial, QPolynomial>;

struct CensusCell {
    OrderIdeal j;
    OrderIdeal k;
    QPolynomial alpha;
    QPolynomial x;
};

// Per-lambda engine; caches lattices and orbit sizes for the shapes that a
// fixed I produces. Thread-compatible (one instance per worker).
class OrbitCounter {
public:
    explicit OrbitCounter(Partition lambda);

    const Partition& shape() const { return lambda_; }
    const IdealLattice& lattice() const { return *lattice_; }

    std::vector<CensusCell> cells(const OrderIdeal& i) const;
    Census census(const OrderIdeal& i) const;
    QPolynomial per_ideal_total(const OrderIdeal& i) const;
    // Sum over all I, without multiplicity capping.
    QPolynomial total() const;

private:
    Partition lambda_;
    std::shared_ptr<const IdealLattice> lattice_;
};

Census orbit_census(const Partition& lambda, const OrderIdeal& ideal);
QPolynomial per_ideal_total(const Partition& lambda, const OrderIdeal& ideal);

// Memo of n_lambda keyed by capped partition; concurrent reads, serialized inserts.
class NLambdaTable {
public:
    std::optional<QPolynomial> find(const Partition& lambda) const;
    void insert(const Partition& lambda, QPolynomial value);
    std::map<Partition, QPolynomial> snapshot() const;
    std::size_t size() const;

private:
    mutable std::shared_mutex mutex_;
    std::map<Partition, QPolynomial> entries_;
};

// Number of automorphism orbits on pairs, computed on the multiplicity-capped
// shape. Throws DegreeMismatch unless monic of degree lambda_1 with integer
// coefficients.
QPolynomial n_lambda(const Partition& lambda, NLambdaTable* cache = nullptr);
// Same sum taken directly over lambda, without capping.
QPolynomial n_lambda_uncapped(const Partition& lambda);

// (lambda, n_lambda) for every partition of n, in partitions_of order. Work is
// spread over `threads` workers (0 picks the hardware concurrency).
std::vector<std::pair<Partition, QPolynomial>> n_lambda_rows(long n, NLambdaTable* cache = nullptr,
                                                            unsigned threads = 0);

}  // namespace pairorbits
