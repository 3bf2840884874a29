#include "pairorbits/polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace pairorbits {

QPolynomial::QPolynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    for (auto& c : coeffs_) c.canonicalize();
    normalize();
}

QPolynomial::QPolynomial(std::initializer_list<long> coeffs) {
    coeffs_.reserve(coeffs.size());
    for (long c : coeffs) coeffs_.emplace_back(c);
    normalize();
}

QPolynomial QPolynomial::constant(const Rational& c) { return QPolynomial(std::vector<Rational>{c}); }

QPolynomial QPolynomial::monomial(const Rational& c, std::size_t power) {
    std::vector<Rational> v(power + 1);
    v[power] = c;
    return QPolynomial(std::move(v));
}

void QPolynomial::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

bool QPolynomial::is_integer_coefficients() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(),
                       [](const Rational& c) { return c.get_den() == 1; });
}

bool QPolynomial::has_nonnegative_coefficients() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return sgn(c) >= 0; });
}

QPolynomial& QPolynomial::operator+=(const QPolynomial& r) {
    if (r.coeffs_.size() > coeffs_.size()) coeffs_.resize(r.coeffs_.size());
    for (std::size_t i = 0; i < r.coeffs_.size(); ++i) coeffs_[i] += r.coeffs_[i];
    normalize();
    return *this;
}

QPolynomial& QPolynomial::operator-=(const QPolynomial& r) {
    if (r.coeffs_.size() > coeffs_.size()) coeffs_.resize(r.coeffs_.size());
    for (std::size_t i = 0; i < r.coeffs_.size(); ++i) coeffs_[i] -= r.coeffs_[i];
    normalize();
    return *this;
}

QPolynomial operator*(const QPolynomial& a, const QPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    QPolynomial r;
    r.coeffs_ = std::move(out);
    r.normalize();
    return r;
}

QPolynomial& QPolynomial::operator*=(const QPolynomial& r) { return *this = *this * r; }

QPolynomial& QPolynomial::operator*=(const Rational& c) {
    if (c == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& x : coeffs_) x *= c;
    return *this;
}

QPolynomial QPolynomial::operator-() const {
    QPolynomial r = *this;
    for (auto& x : r.coeffs_) x = -x;
    return r;
}

bool operator<(const QPolynomial& a, const QPolynomial& b) {
    if (a.coeffs_.size() != b.coeffs_.size()) return a.coeffs_.size() < b.coeffs_.size();
    for (std::size_t i = a.coeffs_.size(); i-- > 0;) {
        if (a.coeffs_[i] != b.coeffs_[i]) return a.coeffs_[i] < b.coeffs_[i];
    }
    return false;
}

Rational QPolynomial::eval(const Rational& x) const {
    Rational acc = 0;
    for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
    return acc;
}

QPolynomial arith(const QPolynomial& p, const QPolynomial& r, ArithOp op) {
    switch (op) {
        case ArithOp::add: return p + r;
        case ArithOp::sub: return p - r;
        case ArithOp::mul: return p * r;
    }
    return {};
}

std::pair<QPolynomial, QPolynomial> divmod(const QPolynomial& num, const QPolynomial& den) {
    if (den.is_zero()) throw NonExactDivision("division by the zero polynomial");
    std::vector<Rational> rem = num.coeffs();
    const auto& d = den.coeffs();
    const std::size_t dn = d.size();
    if (rem.size() < dn) return {QPolynomial{}, num};
    std::vector<Rational> quot(rem.size() - dn + 1);
    for (std::size_t i = quot.size(); i-- > 0;) {
        Rational c = rem[i + dn - 1] / d.back();
        quot[i] = c;
        if (c == 0) continue;
        for (std::size_t j = 0; j < dn; ++j) rem[i + j] -= c * d[j];
    }
    return {QPolynomial(std::move(quot)), QPolynomial(std::move(rem))};
}

QPolynomial exact_div(const QPolynomial& num, const QPolynomial& den) {
    auto [quot, rem] = divmod(num, den);
    if (!rem.is_zero()) {
        throw NonExactDivision("(" + to_string(num) + ") / (" + to_string(den) + ") leaves remainder " +
                               to_string(rem));
    }
    return quot;
}

QPolynomial compose_power(const QPolynomial& p, unsigned d) {
    if (d == 0) throw InputError("compose_power needs d >= 1");
    if (d == 1 || p.is_zero()) return p;
    std::vector<Rational> out((p.coeffs().size() - 1) * d + 1);
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) out[i * d] = p.coeffs()[i];
    return QPolynomial(std::move(out));
}

Rational eval_int(const QPolynomial& p, long q0) { return p.eval(Rational(q0)); }

Integer eval_integer(const QPolynomial& p, long q0) {
    Rational v = eval_int(p, q0);
    if (v.get_den() != 1) throw NonIntegerResult(to_string(p) + " is not integral at q=" + std::to_string(q0));
    return v.get_num();
}

QPolynomial laurent_product(long exponent, const std::vector<long>& factors) {
    // Work with exponents shifted by -exponent: start from 1 (i.e. q^0) and
    // multiply by (1 - q^{-m}); the lowest power reached is -(sum of m).
    long lowest = 0;
    for (long m : factors) lowest -= m;
    if (exponent + lowest < 0) {
        throw NegativeExponent("q^" + std::to_string(exponent) + " cannot absorb the factors");
    }
    // coeffs indexed by (power - lowest)
    std::vector<Integer> acc(static_cast<std::size_t>(-lowest) + 1);
    acc[static_cast<std::size_t>(-lowest)] = 1;
    for (long m : factors) {
        std::vector<Integer> next = acc;
        for (std::size_t i = static_cast<std::size_t>(m); i < acc.size(); ++i) next[i - m] -= acc[i];
        acc = std::move(next);
    }
    std::vector<Rational> out(static_cast<std::size_t>(exponent) + 1);
    for (std::size_t i = 0; i < acc.size(); ++i) {
        long power = static_cast<long>(i) + lowest + exponent;
        out[static_cast<std::size_t>(power)] = Rational(acc[i]);
    }
    return QPolynomial(std::move(out));
}

QPolynomial falling_factorial(const QPolynomial& p, unsigned j) {
    QPolynomial acc{1};
    for (unsigned i = 0; i < j; ++i) acc *= p - QPolynomial::constant(i);
    return acc;
}

namespace {

std::string render(const QPolynomial& p, bool latex) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    const auto& c = p.coeffs();
    for (std::size_t i = c.size(); i-- > 0;) {
        if (c[i] == 0) continue;
        Rational mag = abs(c[i]);
        if (first) {
            if (sgn(c[i]) < 0) os << "-";
        } else {
            os << (sgn(c[i]) < 0 ? " - " : " + ");
        }
        first = false;
        bool unit = (mag == 1);
        if (!unit || i == 0) {
            if (mag.get_den() == 1) {
                os << mag.get_num().get_str();
            } else if (latex) {
                os << "\\frac{" << mag.get_num().get_str() << "}{" << mag.get_den().get_str() << "}";
            } else {
                os << "(" << mag.get_str() << ")";
            }
        }
        if (i >= 1) os << "q";
        if (i >= 2) {
            if (latex && i >= 10) {
                os << "^{" << i << "}";
            } else {
                os << "^" << i;
            }
        }
    }
    return os.str();
}

}  // namespace

std::string to_string(const QPolynomial& p) { return render(p, false); }
std::string to_latex(const QPolynomial& p) { return render(p, true); }

std::string to_factored_string(const QPolynomial& p) {
    if (p.is_zero()) return "0";
    QPolynomial rest = p;
    const QPolynomial qm1{-1, 1};
    unsigned a = 0;
    unsigned b = 0;
    for (;;) {
        auto [quot, rem] = divmod(rest, qm1);
        if (!rem.is_zero() || rest.degree() < 1) break;
        rest = quot;
        ++a;
    }
    while (rest.degree() >= 1 && rest.coeff(0) == 0) {
        rest = exact_div(rest, QPolynomial::q());
        ++b;
    }
    std::ostringstream os;
    const bool one = rest == QPolynomial{1};
    const bool scalar = rest.degree() == 0;
    if (rest == QPolynomial{-1} && (a || b)) {
        os << "-";
    } else if (!one) {
        os << ((a || b) && !scalar ? "(" + to_string(rest) + ")" : to_string(rest));
    }
    if (a) {
        if (!one && !scalar) os << " ";
        os << "(q - 1)";
        if (a > 1) os << "^" << a;
    }
    if (b) {
        if ((!one && !scalar) || a) os << " ";
        os << "q";
        if (b > 1) os << "^" << b;
    }
    if (one && !a && !b) os << "1";
    return os.str();
}

std::size_t hash_value(const QPolynomial& p) {
    std::size_t h = p.coeffs().size();
    for (const auto& c : p.coeffs()) {
        std::size_t x = std::hash<long>{}(mpz_get_si(c.get_num_mpz_t())) ^
                        (std::hash<long>{}(mpz_get_si(c.get_den_mpz_t())) << 1);
        h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
}

}  // namespace pairorbits
