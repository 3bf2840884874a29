#pragma once

#include <cstddef>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "pairorbits/errors.hpp"

namespace pairorbits {

using Rational = mpq_class;
using Integer = mpz_class;

// Polynomial in one formal variable q with exact rational coefficients.
// coeffs()[i] is the coefficient of q^i; the representation never carries a
// trailing zero, so the zero polynomial has no coefficients at all.
class QPolynomial {
public:
    static constexpr long kMinusInfinity = -1;

    QPolynomial() = default;
    explicit QPolynomial(std::vector<Rational> coeffs);
    QPolynomial(std::initializer_list<long> coeffs);

    static QPolynomial constant(const Rational& c);
    static QPolynomial monomial(const Rational& c, std::size_t power);
    static QPolynomial q() { return monomial(1, 1); }
    static QPolynomial q_power(std::size_t power) { return monomial(1, power); }

    const std::vector<Rational>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    // kMinusInfinity for the zero polynomial.
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    Rational coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }
    Rational leading() const { return coeffs_.empty() ? Rational(0) : coeffs_.back(); }

    bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }
    bool is_integer_coefficients() const;
    bool has_nonnegative_coefficients() const;

    QPolynomial& operator+=(const QPolynomial& r);
    QPolynomial& operator-=(const QPolynomial& r);
    QPolynomial& operator*=(const QPolynomial& r);
    QPolynomial& operator*=(const Rational& c);

    friend QPolynomial operator+(QPolynomial a, const QPolynomial& b) { return a += b; }
    friend QPolynomial operator-(QPolynomial a, const QPolynomial& b) { return a -= b; }
    friend QPolynomial operator*(const QPolynomial& a, const QPolynomial& b);
    friend QPolynomial operator*(QPolynomial a, const Rational& c) { return a *= c; }
    friend QPolynomial operator*(const Rational& c, QPolynomial a) { return a *= c; }
    QPolynomial operator-() const;

    friend bool operator==(const QPolynomial& a, const QPolynomial& b) { return a.coeffs_ == b.coeffs_; }
    // Total order (degree first, then coefficients from the top); used only for
    // deterministic grouping.
    friend bool operator<(const QPolynomial& a, const QPolynomial& b);

    Rational eval(const Rational& x) const;

private:
    void normalize();
    std::vector<Rational> coeffs_;
};

enum class ArithOp { add, sub, mul };

QPolynomial arith(const QPolynomial& p, const QPolynomial& r, ArithOp op);

// Quotient and remainder of polynomial long division. den must be nonzero.
std::pair<QPolynomial, QPolynomial> divmod(const QPolynomial& num, const QPolynomial& den);

// num / den, throwing NonExactDivision when den does not divide num.
QPolynomial exact_div(const QPolynomial& num, const QPolynomial& den);

// p(q^d).
QPolynomial compose_power(const QPolynomial& p, unsigned d);

// Exact value at an integer point q0 >= 2.
Rational eval_int(const QPolynomial& p, long q0);
Integer eval_integer(const QPolynomial& p, long q0);

// Expands q^exponent * prod (1 - q^{-m}) into an ordinary polynomial.
QPolynomial laurent_product(long exponent, const std::vector<long>& factors);

// Falling factorial p (p-1) ... (p-j+1); the empty product is 1.
QPolynomial falling_factorial(const QPolynomial& p, unsigned j);

// Descending-power rendering, e.g. "q^3 + 5q^2 + 7q + 4".
std::string to_string(const QPolynomial& p);
// Same ordering with LaTeX exponents and fractions.
std::string to_latex(const QPolynomial& p);
// Renders p as (q - 1)^a q^b * rest when such factors divide it.
std::string to_factored_string(const QPolynomial& p);

std::size_t hash_value(const QPolynomial& p);

}  // namespace pairorbits

template <>
struct std::hash<pairorbits::QPolynomial> {
    std::size_t operator()(const pairorbits::QPolynomial& p) const { return pairorbits::hash_value(p); }
};
