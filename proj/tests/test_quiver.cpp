#include <doctest.h>

#include <set>

#include "pairorbits/errors.hpp"
#include "pairorbits/oracle.hpp"
#include "pairorbits/quiver.hpp"

using namespace pairorbits;

namespace {

Partition part(const char* text) { return parse_partition(text); }

// Number of multisets of (degree, partition) atoms of total weight n, via the
// Euler transform of the atom counts.
std::vector<long> type_counts(long n_max) {
    std::vector<long> atoms(static_cast<std::size_t>(n_max) + 1, 0);
    for (long w = 1; w <= n_max; ++w) {
        for (long d = 1; d <= w; ++d) {
            if (w % d == 0) atoms[static_cast<std::size_t>(w)] += static_cast<long>(partitions_of(w / d).size());
        }
    }
    std::vector<long> out(static_cast<std::size_t>(n_max) + 1, 0);
    out[0] = 1;
    for (long w = 1; w <= n_max; ++w) {
        for (long c = 0; c < atoms[static_cast<std::size_t>(w)]; ++c) {
            for (long t = w; t <= n_max; ++t) out[static_cast<std::size_t>(t)] += out[static_cast<std::size_t>(t - w)];
        }
    }
    return out;
}

}  // namespace

TEST_CASE("enumerate_types") {
    const auto one = enumerate_types(1);
    REQUIRE(one.size() == 1);
    CHECK(one[0] == MatrixType({{part("1"), 1, 1}}));

    const auto two = enumerate_types(2);
    const std::set<MatrixType> expected{MatrixType({{part("1,1"), 1, 1}}), MatrixType({{part("2"), 1, 1}}),
                                        MatrixType({{part("1"), 2, 1}}), MatrixType({{part("1"), 1, 2}})};
    CHECK(std::set<MatrixType>(two.begin(), two.end()) == expected);
    CHECK(two.size() == 4);

    const auto counts = type_counts(6);
    for (long n = 1; n <= 6; ++n) {
        const auto types = enumerate_types(n);
        CHECK(static_cast<long>(types.size()) == counts[static_cast<std::size_t>(n)]);
        CHECK(std::set<MatrixType>(types.begin(), types.end()).size() == types.size());
        for (const auto& t : types) CHECK(t.weight() == n);
    }
    CHECK_THROWS_AS(enumerate_types(0), InputError);
}

TEST_CASE("MatrixType canonical form") {
    const MatrixType a({{part("1"), 1, 1}, {part("1"), 1, 1}});
    CHECK(a == MatrixType({{part("1"), 1, 2}}));
    CHECK(a.pairs_of_degree(1) == 2);
    CHECK(to_string(a) == "{((1), 1)^2}");
    CHECK(to_string(MatrixType({{part("1"), 2, 1}, {part("2,1"), 1, 1}})) == "{((2, 1), 1), ((1), 2)}");
    CHECK_THROWS_AS(MatrixType({{part("1"), 0, 1}}), InputError);
}

TEST_CASE("number_mobius") {
    const long expected[] = {0, 1, -1, -1, 0, -1, 1, -1, 0, 0, 1, -1, 0};
    for (long n = 1; n <= 12; ++n) CHECK(number_mobius(n) == expected[n]);
}

TEST_CASE("phi_d") {
    CHECK(phi_d(1) == QPolynomial{0, 1});
    CHECK(phi_d(2) == QPolynomial(std::vector<Rational>{0, Rational(-1, 2), Rational(1, 2)}));
    CHECK(phi_d(3) == QPolynomial(std::vector<Rational>{0, Rational(-1, 3), 0, Rational(1, 3)}));
    CHECK(eval_int(phi_d(2), 2) == 1);
    CHECK(eval_int(phi_d(2), 3) == 3);
    CHECK(eval_int(phi_d(3), 2) == 2);
    // every monic polynomial of degree n factors uniquely into irreducibles
    for (long n = 1; n <= 8; ++n) {
        QPolynomial sum;
        for (long d = 1; d <= n; ++d) {
            if (n % d == 0) sum += phi_d(d) * Rational(d);
        }
        CHECK(sum == QPolynomial::q_power(static_cast<std::size_t>(n)));
    }
}

TEST_CASE("c_tau and n_tau examples") {
    CHECK(c_tau(MatrixType({{part("1,1"), 1, 1}})) == QPolynomial{0, 1});
    CHECK(c_tau(MatrixType({{part("1"), 1, 2}})) == QPolynomial(std::vector<Rational>{0, Rational(-1, 2), Rational(1, 2)}));
    CHECK(c_tau(MatrixType({{part("1"), 2, 1}})) == phi_d(2));

    CHECK(n_tau(MatrixType({{part("1"), 2, 1}})) == QPolynomial{2, 0, 1});
    CHECK(n_tau(MatrixType({{part("1"), 1, 2}})) == QPolynomial{2, 1} * QPolynomial{2, 1});
    CHECK(n_tau(MatrixType({{part("2"), 1, 1}})) == QPolynomial{2, 2, 1});
}

TEST_CASE("class counts match conjugacy classes") {
    const std::vector<std::pair<long, long>> cases = {{1, 2}, {1, 3}, {2, 2}, {2, 3}, {3, 2}};
    for (const auto& [n, q] : cases) {
        QPolynomial classes;
        for (const auto& t : enumerate_types(n)) classes += c_tau(t);
        CHECK(eval_integer(classes, q) == Integer(std::to_string(oracle::count_similarity_classes(n, q))));
    }
}

TEST_CASE("r_n1") {
    CHECK(r_n1(1) == QPolynomial{0, 2, 1});
    CHECK(r_n1(2) == QPolynomial{0, 2, 4, 2, 1});
    NLambdaTable table;
    for (long n = 1; n <= 6; ++n) {
        const QPolynomial r = r_n1(n, &table);
        CHECK(r.is_integer_coefficients());
        CHECK(r.has_nonnegative_coefficients());
        CHECK(r.is_monic());
        CHECK(r.degree() == 2 * n);
    }
}

TEST_CASE("r_n1 against brute force") {
    const std::vector<std::pair<long, long>> cases = {{1, 2}, {1, 3}, {2, 2}, {2, 3}, {3, 2}};
    for (const auto& [n, q] : cases) {
        CHECK(eval_integer(r_n1(n), q) == Integer(std::to_string(oracle::count_quiver_representations(n, q))));
    }
}

TEST_CASE("generating function") {
    CHECK(genfunc_check(0));
    const auto series = genfunc_series(1);
    CHECK(series[1] == QPolynomial{0, 2, 1});
    for (long n = 1; n <= 3; ++n) CHECK(genfunc_check(n));
}
