#pragma once

#include <compare>
#include <string>
#include <vector>

#include "pairorbits/orbitcount.hpp"

namespace pairorbits {

// One (partition, degree) pair of a similarity-class type, with multiplicity.
struct TypeEntry {
    Partition partition;
    long degree;
    long mult;
    friend auto operator<=>(const TypeEntry&, const TypeEntry&) = default;
};

// A similarity-class type: a multiset of (partition, degree) pairs, kept
// sorted by degree and then partition.
class MatrixType {
public:
    MatrixType() = default;
    explicit MatrixType(std::vector<TypeEntry> entries);

    const std::vector<TypeEntry>& entries() const { return entries_; }
    // sum of mult * degree * |partition|
    long weight() const;
    // Number of pairs of degree d, counted with multiplicity.
    long pairs_of_degree(long d) const;

    friend auto operator<=>(const MatrixType&, const MatrixType&) = default;

private:
    std::vector<TypeEntry> entries_;
};

std::string to_string(const MatrixType& type);

std::vector<MatrixType> enumerate_types(long n);

// Classical number-theoretic Moebius function.
long number_mobius(long n);

// Number of monic irreducible polynomials of degree d over F_q.
QPolynomial phi_d(long d);

// Number of similarity classes of type tau.
QPolynomial c_tau(const MatrixType& tau);

// Orbits of the centralizer of a matrix of type tau on pairs of vectors.
QPolynomial n_tau(const MatrixType& tau, NLambdaTable* table = nullptr);

struct TypeContribution {
    MatrixType type;
    QPolynomial classes;  // c_tau
    QPolynomial orbits;   // n_tau
};

std::vector<TypeContribution> quiver_breakdown(long n, NLambdaTable* table = nullptr);

// Isomorphism classes of representations with dimension vector (n, 1) of the
// quiver with one loop at vertex 1 and two arrows 2 -> 1. Throws
// NonIntegerResult unless the coefficients are non-negative integers.
QPolynomial r_n1(long n, NLambdaTable* table = nullptr);

// Coefficients of x^0..x^{n_max} in prod_d (sum_lambda n_lambda(q^d) x^{d|lambda|})^{Phi_d(q)}.
std::vector<QPolynomial> genfunc_series(long n_max, NLambdaTable* table = nullptr);

// True when the product expansion agrees with r_n1 through x^{n_max}.
bool genfunc_check(long n_max, NLambdaTable* table = nullptr);

}  // namespace pairorbits
