#include <doctest.h>

#include "pairorbits/errors.hpp"
#include "pairorbits/refined.hpp"

using namespace pairorbits;

namespace {

OrderIdeal ideal(const char* text) { return parse_ideal(text); }
Partition part(const char* text) { return parse_partition(text); }
QPolynomial qpow(long e) { return QPolynomial::q_power(static_cast<std::size_t>(e)); }

long ipow(long b, long e) {
    long r = 1;
    while (e-- > 0) r *= b;
    return r;
}

long val(long x, long k, long p) {
    x %= ipow(p, k);
    if (x < 0) x += ipow(p, k);
    if (x == 0) return k;
    long v = 0;
    while (x % p == 0) {
        x /= p;
        ++v;
    }
    return v;
}

std::vector<Partition> partitions_up_to(long n) {
    std::vector<Partition> out;
    for (long w = 0; w <= n; ++w) {
        for (auto& p : partitions_of(w)) out.push_back(std::move(p));
    }
    return out;
}

// Walks every m' in M' = sum_j Z/p^{k_j}, with its image in the quotient by
// R m(I): coordinate j goes to m'_j - p^{v_j - v_{j+1}} m'_{j+1} mod p^{mu_j}.
template <typename Visit>
void for_each_prime_element(const CanonicalSplit& s, long p, Visit visit) {
    const auto& pp = s.prime_parts;
    const std::size_t n = pp.size();
    std::vector<long> m(n, 0);
    std::vector<long> image(n, 0);
    for (;;) {
        for (std::size_t j = 0; j < n; ++j) {
            const long mu = s.quotient_rows[j];
            const long shifted = j + 1 < n ? ipow(p, pp[j].v - pp[j + 1].v) * m[j + 1] : 0;
            image[j] = mu > 0 ? ((m[j] - shifted) % ipow(p, mu) + ipow(p, mu)) % ipow(p, mu) : 0;
        }
        visit(m, image);
        std::size_t j = 0;
        while (j < n && ++m[j] == ipow(p, pp[j].k)) m[j++] = 0;
        if (j == n) return;
    }
}

bool in_submodule(const CanonicalSplit& s, const std::vector<long>& m, const OrderIdeal& l, long p) {
    for (std::size_t j = 0; j < m.size(); ++j) {
        const long k = s.prime_parts[j].k;
        if (val(m[j], k, p) < l.clamped_boundary(k)) return false;
    }
    return true;
}

OrderIdeal image_ideal(const CanonicalSplit& s, const std::vector<long>& image, long p) {
    std::vector<Point> gens;
    for (std::size_t j = 0; j < image.size(); ++j) {
        const long mu = s.quotient_rows[j];
        if (mu > 0 && image[j] != 0) gens.push_back({val(image[j], mu, p), mu});
    }
    return ideal_from_generators(gens);
}

}  // namespace

TEST_CASE("coset_count examples") {
    const auto a = coset_count(3, 1, 2, 1);
    CHECK(a.per_valuation[1] == qpow(1));
    CHECK(a.total() == qpow(1));

    const auto b = coset_count(2, 0, 1, std::nullopt);
    CHECK(b.per_valuation[1] == QPolynomial{-1, 1});
    CHECK(b.per_valuation[2] == QPolynomial{1});
    CHECK(b.total() == qpow(1));

    CHECK(coset_count(3, 1, 2, 0).total().is_zero());
}

TEST_CASE("coset_count against Z/8, Z/16, Z/9 and Z/27") {
    for (long p : {2L, 3L}) {
        for (long k = 1; ipow(p, k) <= 27; ++k) {
            const long mod = ipow(p, k);
            for (long a = 0; a <= k; ++a) {
                for (long b = 0; b <= k; ++b) {
                    for (long y = 0; y < mod; ++y) {
                        std::vector<long> counts(static_cast<std::size_t>(k) + 1, 0);
                        for (long x = 0; x < mod; ++x) {
                            if (val(x, k, p) >= a && val(x - y, k, p) >= b) ++counts[static_cast<std::size_t>(val(x, k, p))];
                        }
                        const std::optional<long> vy = y == 0 ? std::nullopt : std::optional<long>(val(y, k, p));
                        const auto profile = coset_count(k, a, b, vy);
                        for (long w = 0; w <= k; ++w) {
                            CHECK(eval_int(profile.per_valuation[static_cast<std::size_t>(w)], p) == counts[static_cast<std::size_t>(w)]);
                        }
                        // closed-form totals
                        const long level = std::max(a, b);
                        QPolynomial total;
                        if (!vy || *vy >= b) {
                            total = qpow(k - level);
                        } else if (*vy >= a) {
                            total = qpow(k - b);
                        }
                        CHECK(profile.total() == total);
                    }
                }
            }
        }
    }
}

TEST_CASE("s_count examples") {
    const auto s = canonical_split(part("3,1"), ideal("1:3,0:1"));
    REQUIRE(s.quotient == part("2"));
    CHECK(s_count(s, ideal("1:3,0:1"), OrderIdeal()) == qpow(2));
    CHECK(s_count(s, ideal("1:3,0:1"), ideal("0:2")) == qpow(3));
    CHECK(s_count(s, OrderIdeal(), OrderIdeal()) == QPolynomial{1});
    CHECK_THROWS_AS(s_count(s, OrderIdeal(), ideal("0:3")), ContextMismatch);
}

TEST_CASE("s_count and exact_fiber_count by enumeration") {
    for (long p : {2L, 3L}) {
        for (const auto& lambda : partitions_up_to(5)) {
            const auto lattice = lattice_for(lambda);
            for (const auto& i : lattice->ideals()) {
                const auto s = canonical_split(lambda, i);
                if (ipow(p, s.lambda_prime.weight()) > 729) continue;
                const auto quotient = lattice_for(s.quotient);
                for (const auto& l : lattice->ideals()) {
                    std::vector<long> within(quotient->size(), 0);
                    std::vector<long> exact(quotient->size(), 0);
                    for_each_prime_element(s, p, [&](const std::vector<long>& m, const std::vector<long>& image) {
                        if (!in_submodule(s, m, l, p)) return;
                        const OrderIdeal got = image_ideal(s, image, p);
                        for (std::size_t a = 0; a < quotient->size(); ++a) {
                            if (is_subset(got, (*quotient)[a])) ++within[a];
                        }
                        ++exact[quotient->index_of(got)];
                    });
                    for (std::size_t a = 0; a < quotient->size(); ++a) {
                        const QPolynomial sc = s_count(s, l, (*quotient)[a]);
                        CHECK(sc.is_integer_coefficients());
                        CHECK(sc.has_nonnegative_coefficients());
                        CHECK(eval_int(sc, p) == within[a]);
                        CHECK(eval_int(exact_fiber_count(s, l, (*quotient)[a]), p) == exact[a]);
                    }
                }
            }
        }
    }
}

TEST_CASE("exact_fiber_count examples") {
    const Partition lambda = part("5,4,4,2,1");
    const auto s = canonical_split(lambda, ideal("1:4,0:1"));
    CHECK(exact_fiber_count(s, maximal_ideal(lambda), OrderIdeal()) == qpow(s.fiber_exponent()));
    CHECK(exact_fiber_count(s, OrderIdeal(), OrderIdeal()) == QPolynomial{1});

    const auto t = canonical_split(part("2"), ideal("1:2"));
    CHECK(exact_fiber_count(t, ideal("0:2"), ideal("0:1")) == QPolynomial{0, -1, 1});
    CHECK(exact_fiber_count(t, ideal("0:2"), OrderIdeal()) == qpow(1));
}

TEST_CASE("y_count") {
    const Partition lambda = part("3,2,1");
    const OrderIdeal full = maximal_ideal(lambda);
    for (const auto& i : lattice_for(lambda)->ideals()) {
        const auto s = canonical_split(lambda, i);
        for (const auto& j : lattice_for(s.quotient)->ideals()) {
            for (const auto& k : lattice_for(s.lambda_dprime)->ideals()) {
                CHECK(y_count(lambda, i, j, k, full) == x_count(lambda, i, j, k));
                for (const auto& l : lattice_for(lambda)->ideals()) {
                    if (!is_subset(k, l)) CHECK(y_count(lambda, i, j, k, l).is_zero());
                }
            }
        }
    }
    CHECK(y_count(part("1"), ideal("0:1"), OrderIdeal(), OrderIdeal(), OrderIdeal()) == QPolynomial{1});
}

TEST_CASE("refined matrices") {
    const auto one = RefinedCounter(part("1")).matrix();
    CHECK(one == std::vector<std::vector<QPolynomial>>{{QPolynomial{1}, QPolynomial{1}}, {QPolynomial{1}, QPolynomial{-1, 1}}});

    const auto empty = RefinedCounter(Partition()).matrix();
    CHECK(empty == std::vector<std::vector<QPolynomial>>{{QPolynomial{1}}});

    QPolynomial total;
    for (const auto& row : RefinedCounter(part("2,1")).matrix()) {
        for (const auto& v : row) total += v;
    }
    CHECK(total == QPolynomial{5, 5, 1});

    // the stabilizer of x = 1 is trivial, so every nonzero y is its own class
    CHECK(refined_census(part("1"), ideal("0:1"), ideal("0:1")) == Census{{QPolynomial{1}, QPolynomial{-1, 1}}});
    CHECK(refined_census(part("1"), ideal("0:1"), OrderIdeal()) == Census{{QPolynomial{1}, QPolynomial{1}}});
}

TEST_CASE("refined censuses split the plain census") {
    for (const auto& lambda : partitions_up_to(5)) {
        RefinedCounter refined(lambda);
        OrbitCounter plain(lambda);
        const auto& lat = refined.lattice();
        for (std::size_t i = 0; i < lat.size(); ++i) {
            Census merged;
            for (const auto& per_l : refined.censuses(i)) {
                for (const auto& [a, n] : per_l) {
                    CHECK(n.is_integer_coefficients());
                    merged[a] += n;
                }
            }
            for (auto it = merged.begin(); it != merged.end();) {
                it = it->second.is_zero() ? merged.erase(it) : std::next(it);
            }
            CHECK(merged == plain.census(lat[i]));

            for (const auto& cell : refined.cells(i)) {
                QPolynomial sum;
                for (const auto& x : cell.x_in) sum += x;
                CHECK(sum == cell.x);
            }
        }
    }
}
