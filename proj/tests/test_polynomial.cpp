#include <doctest.h>

#include <random>

#include "pairorbits/errors.hpp"
#include "pairorbits/polynomial.hpp"

using namespace pairorbits;

namespace {

QPolynomial random_poly(std::mt19937& rng, int max_degree) {
    std::uniform_int_distribution<int> deg(0, max_degree);
    std::uniform_int_distribution<long> coef(-6, 6);
    std::vector<Rational> c(static_cast<std::size_t>(deg(rng)) + 1);
    for (auto& x : c) x = Rational(coef(rng), 1 + std::abs(coef(rng)) % 3);
    return QPolynomial(c);
}

}  // namespace

TEST_CASE("normal form") {
    CHECK(QPolynomial(std::vector<Rational>{1, 2, 0, 0}) == QPolynomial{1, 2});
    CHECK(QPolynomial(std::vector<Rational>{0, 0}).is_zero());
    CHECK(QPolynomial().degree() == QPolynomial::kMinusInfinity);
    CHECK(QPolynomial{0, 0, 3}.degree() == 2);
    CHECK(QPolynomial{1, 1}.is_monic());
    CHECK_FALSE(QPolynomial{1, 2}.is_monic());
    CHECK(hash_value(QPolynomial{1, 2, 3}) == hash_value(QPolynomial(std::vector<Rational>{1, 2, 3, 0})));
}

TEST_CASE("arith") {
    CHECK(arith({1, 1}, {-1, 1}, ArithOp::mul) == QPolynomial{-1, 0, 1});
    const QPolynomial p{2, 2, 1};
    CHECK(arith(p, {}, ArithOp::add) == p);
    CHECK(arith(p, p, ArithOp::sub).is_zero());
    CHECK(-p + p == QPolynomial{});
    CHECK(p * Rational(1, 2) == QPolynomial(std::vector<Rational>{1, 1, Rational(1, 2)}));
}

TEST_CASE("exact_div") {
    CHECK(exact_div({-1, 0, 1}, {-1, 1}) == QPolynomial{1, 1});
    CHECK(exact_div(QPolynomial::q_power(3), QPolynomial::q()) == QPolynomial::q_power(2));
    CHECK_THROWS_AS(exact_div({1, 0, 1}, QPolynomial::q()), NonExactDivision);
    auto [quot, rem] = divmod({1, 0, 1}, {0, 1});
    CHECK(quot == QPolynomial{0, 1});
    CHECK(rem == QPolynomial{1});
}

TEST_CASE("compose_power") {
    CHECK(compose_power({2, 1}, 2) == QPolynomial{2, 0, 1});
    const QPolynomial p{2, 2, 1};
    CHECK(compose_power(p, 1) == p);
    CHECK(compose_power(p, 3) == QPolynomial{2, 0, 0, 2, 0, 0, 1});
}

TEST_CASE("eval_int") {
    CHECK(eval_int({2, 1}, 3) == 5);
    CHECK(eval_int({5, 5, 1}, 2) == 19);
    CHECK(eval_int({}, 7) == 0);
    CHECK(eval_integer({7, 10, 5, 1}, 3) == 109);
    const QPolynomial half(std::vector<Rational>{0, Rational(1, 2)});
    CHECK(eval_int(half, 3) == Rational(3, 2));
    CHECK_THROWS_AS(eval_integer(half, 3), NonIntegerResult);
}

TEST_CASE("laurent_product") {
    CHECK(laurent_product(1, {1}) == QPolynomial{-1, 1});
    CHECK(laurent_product(3, {1}) == QPolynomial{0, 0, -1, 1});
    CHECK(laurent_product(4, {}) == QPolynomial::q_power(4));
    CHECK(laurent_product(3, {1, 2}) == QPolynomial{1, -1, -1, 1});
    CHECK_THROWS_AS(laurent_product(1, {2}), NegativeExponent);
    CHECK_THROWS_AS(laurent_product(-1, {}), NegativeExponent);
}

TEST_CASE("falling_factorial") {
    const QPolynomial q = QPolynomial::q();
    CHECK(falling_factorial(q, 0) == QPolynomial{1});
    CHECK(falling_factorial(q, 1) == q);
    CHECK(falling_factorial(q, 3) == QPolynomial{0, 2, -3, 1});
}

TEST_CASE("rendering") {
    CHECK(to_string({4, 7, 5, 1}) == "q^3 + 5q^2 + 7q + 4");
    CHECK(to_string({3, 1}) == "q + 3");
    CHECK(to_string({}) == "0");
    CHECK(to_string({1}) == "1");
    CHECK(to_string({-1, 0, 1}) == "q^2 - 1");
    CHECK(to_string({0, -1, 1}) == "q^2 - q");
    CHECK(to_string(QPolynomial(std::vector<Rational>{0, Rational(-1, 2), Rational(1, 2)})) == "(1/2)q^2 - (1/2)q");
    CHECK(to_latex(QPolynomial::q_power(15)) == "q^{15}");
    CHECK(to_latex({2, 2, 1}) == "q^2 + 2q + 2");

    CHECK(to_factored_string({1}) == "1");
    CHECK(to_factored_string({-1, 1}) == "(q - 1)");
    CHECK(to_factored_string(QPolynomial{0, 0, 0, 0, -1, 1}) == "(q - 1) q^4");
    CHECK(to_factored_string(QPolynomial{0, 0, 2}) == "2q^2");
    CHECK(to_factored_string(QPolynomial{0, 0, 1, -2, 1}) == "(q - 1)^2 q^2");
    CHECK(to_factored_string(QPolynomial{0, 1, 0, 1}) == "(q^2 + 1) q");
}

TEST_CASE("ordering is total and strict") {
    const QPolynomial a{1, 1};
    const QPolynomial b{2, 1};
    const QPolynomial c{0, 0, 1};
    CHECK(a < b);
    CHECK(b < c);
    CHECK_FALSE(b < a);
    CHECK_FALSE(a < a);
}

TEST_CASE("random ring identities") {
    std::mt19937 rng(20240611);
    for (int trial = 0; trial < 200; ++trial) {
        const QPolynomial p = random_poly(rng, 6);
        QPolynomial r = random_poly(rng, 4);
        if (r.is_zero()) r = QPolynomial{1, 1};
        CHECK(exact_div(p * r, r) == p);
        const unsigned d = 1 + static_cast<unsigned>(trial % 3);
        CHECK(compose_power(p * r, d) == compose_power(p, d) * compose_power(r, d));
        CHECK(eval_int(compose_power(p, d), 2) == eval_int(p, 1L << d));
        CHECK(eval_int(p * r, 3) == eval_int(p, 3) * eval_int(r, 3));
        CHECK((p + r) - r == p);
    }
}

TEST_CASE("laurent_product is monic of the stated degree") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<long> m(1, 3);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<long> factors(static_cast<std::size_t>(trial % 4));
        long total = 0;
        for (auto& f : factors) total += f = m(rng);
        const long e = total + trial % 5;
        const QPolynomial p = laurent_product(e, factors);
        CHECK(p.degree() == e);
        CHECK(p.is_monic());
        CHECK(p.is_integer_coefficients());
        Rational direct = 1;
        for (long f : factors) direct *= 1 - Rational(1, 1L << f);
        CHECK(eval_int(p, 2) == direct * Rational(Integer(1) << static_cast<unsigned>(e)));
    }
}
