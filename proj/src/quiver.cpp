#include "pairorbits/quiver.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "pairorbits/errors.hpp"

namespace pairorbits {

MatrixType::MatrixType(std::vector<TypeEntry> entries) : entries_(std::move(entries)) {
    std::sort(entries_.begin(), entries_.end(), [](const TypeEntry& a, const TypeEntry& b) {
        return a.degree != b.degree ? a.degree < b.degree : a.partition < b.partition;
    });
    // merge repeated pairs
    std::vector<TypeEntry> merged;
    for (auto& e : entries_) {
        if (e.mult <= 0 || e.degree <= 0 || e.partition.empty()) throw InputError("invalid type entry");
        if (!merged.empty() && merged.back().degree == e.degree && merged.back().partition == e.partition) {
            merged.back().mult += e.mult;
        } else {
            merged.push_back(std::move(e));
        }
    }
    entries_ = std::move(merged);
}

long MatrixType::weight() const {
    long w = 0;
    for (const auto& e : entries_) w += e.mult * e.degree * e.partition.weight();
    return w;
}

long MatrixType::pairs_of_degree(long d) const {
    long m = 0;
    for (const auto& e : entries_) {
        if (e.degree == d) m += e.mult;
    }
    return m;
}

std::string to_string(const MatrixType& type) {
    std::ostringstream os;
    os << "{";
    bool first = true;
    for (const auto& e : type.entries()) {
        if (!first) os << ", ";
        first = false;
        os << "(" << to_display_string(e.partition) << ", " << e.degree << ")";
        if (e.mult > 1) os << "^" << e.mult;
    }
    os << "}";
    return os.str();
}

std::vector<MatrixType> enumerate_types(long n) {
    if (n < 1) throw InputError("types need n >= 1");
    // Candidate pairs in canonical order.
    std::vector<std::pair<long, Partition>> atoms;
    for (long d = 1; d <= n; ++d) {
        for (long w = 1; w * d <= n; ++w) {
            for (auto& p : partitions_of(w)) atoms.emplace_back(d, std::move(p));
        }
    }
    std::sort(atoms.begin(), atoms.end());

    std::vector<MatrixType> out;
    std::vector<TypeEntry> chosen;
    std::function<void(std::size_t, long)> rec = [&](std::size_t idx, long remaining) {
        if (remaining == 0) {
            out.emplace_back(chosen);
            return;
        }
        if (idx == atoms.size()) return;
        const auto& [d, part] = atoms[idx];
        const long size = d * part.weight();
        for (long a = remaining / size; a >= 1; --a) {
            chosen.push_back({part, d, a});
            rec(idx + 1, remaining - a * size);
            chosen.pop_back();
        }
        rec(idx + 1, remaining);
    };
    rec(0, n);
    return out;
}

long number_mobius(long n) {
    long result = 1;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        n /= p;
        if (n % p == 0) return 0;
        result = -result;
    }
    if (n > 1) result = -result;
    return result;
}

QPolynomial phi_d(long d) {
    if (d < 1) throw InputError("phi_d needs d >= 1");
    QPolynomial sum;
    for (long e = 1; e <= d; ++e) {
        if (d % e == 0) sum += QPolynomial::monomial(number_mobius(d / e), static_cast<std::size_t>(e));
    }
    return sum * Rational(1, d);
}

QPolynomial c_tau(const MatrixType& tau) {
    Integer denom = 1;
    for (const auto& e : tau.entries()) {
        Integer f;
        mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(e.mult));
        denom *= f;
    }
    std::vector<long> degrees;
    for (const auto& e : tau.entries()) degrees.push_back(e.degree);
    degrees.erase(std::unique(degrees.begin(), degrees.end()), degrees.end());
    QPolynomial acc{1};
    for (long d : degrees) acc *= falling_factorial(phi_d(d), static_cast<unsigned>(tau.pairs_of_degree(d)));
    return acc * Rational(Integer(1), denom);
}

QPolynomial n_tau(const MatrixType& tau, NLambdaTable* table) {
    QPolynomial acc{1};
    for (const auto& e : tau.entries()) {
        const QPolynomial factor = compose_power(n_lambda(e.partition, table), static_cast<unsigned>(e.degree));
        for (long a = 0; a < e.mult; ++a) acc *= factor;
    }
    return acc;
}

std::vector<TypeContribution> quiver_breakdown(long n, NLambdaTable* table) {
    std::vector<TypeContribution> out;
    for (auto& tau : enumerate_types(n)) {
        QPolynomial c = c_tau(tau);
        QPolynomial orbits = n_tau(tau, table);
        out.push_back({std::move(tau), std::move(c), std::move(orbits)});
    }
    return out;
}

QPolynomial r_n1(long n, NLambdaTable* table) {
    QPolynomial sum;
    for (const auto& t : quiver_breakdown(n, table)) sum += t.classes * t.orbits;
    if (!sum.is_integer_coefficients() || !sum.has_nonnegative_coefficients()) {
        throw NonIntegerResult("R_{" + std::to_string(n) + ",1} = " + to_string(sum) +
                               " does not have non-negative integer coefficients");
    }
    return sum;
}

namespace {

using Series = std::vector<QPolynomial>;

Series truncated_mul(const Series& a, const Series& b, std::size_t len) {
    Series out(len);
    for (std::size_t i = 0; i < a.size() && i < len; ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.size() && i + j < len; ++j) {
            if (!b[j].is_zero()) out[i + j] += a[i] * b[j];
        }
    }
    return out;
}

}  // namespace

std::vector<QPolynomial> genfunc_series(long n_max, NLambdaTable* table) {
    const std::size_t len = static_cast<std::size_t>(std::max(n_max, 0L)) + 1;
    Series product(len);
    product[0] = QPolynomial{1};
    for (long d = 1; d <= n_max; ++d) {
        // G(x) = sum over nonempty lambda of n_lambda(q^d) x^{d|lambda|}
        Series g(len);
        for (long w = 1; w * d <= n_max; ++w) {
            for (const auto& lambda : partitions_of(w)) {
                g[static_cast<std::size_t>(w * d)] += compose_power(n_lambda(lambda, table), static_cast<unsigned>(d));
            }
        }
        // (1 + G)^Phi = sum_j binom(Phi, j) G^j, with G^j = O(x^{dj}).
        const QPolynomial phi = phi_d(d);
        Series factor(len);
        Series g_power(len);
        g_power[0] = QPolynomial{1};
        Integer j_factorial = 1;
        for (long j = 0; j * d <= n_max; ++j) {
            if (j > 0) {
                g_power = truncated_mul(g_power, g, len);
                j_factorial *= j;
            }
            const QPolynomial binom = falling_factorial(phi, static_cast<unsigned>(j)) * Rational(Integer(1), j_factorial);
            for (std::size_t i = 0; i < len; ++i) {
                if (!g_power[i].is_zero()) factor[i] += binom * g_power[i];
            }
        }
        product = truncated_mul(product, factor, len);
    }
    return product;
}

bool genfunc_check(long n_max, NLambdaTable* table) {
    if (n_max < 0) return false;
    const auto series = genfunc_series(n_max, table);
    if (series[0] != QPolynomial{1}) return false;
    for (long n = 1; n <= n_max; ++n) {
        if (series[static_cast<std::size_t>(n)] != r_n1(n, table)) return false;
    }
    return true;
}

}  // namespace pairorbits
