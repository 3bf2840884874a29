#include "pairorbits/oracle.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <tuple>

#include "pairorbits/errors.hpp"
#include "pairorbits/orbitcount.hpp"
#include "pairorbits/refined.hpp"

namespace pairorbits::oracle {

namespace {

long ipow(long base, long exp) {
    long r = 1;
    while (exp-- > 0) r *= base;
    return r;
}

long mod(long a, long m) {
    long r = a % m;
    return r < 0 ? r + m : r;
}

class DisjointSets {
public:
    explicit DisjointSets(std::uint64_t n) : parent_(n), size_(n, 1) { std::iota(parent_.begin(), parent_.end(), 0); }

    std::uint64_t find(std::uint64_t x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    void unite(std::uint64_t a, std::uint64_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (size_[a] < size_[b]) std::swap(a, b);
        parent_[b] = a;
        size_[a] += size_[b];
    }

    std::uint64_t size_of(std::uint64_t x) { return size_[find(x)]; }

private:
    std::vector<std::uint64_t> parent_;
    std::vector<std::uint64_t> size_;
};

bool is_prime(long p) {
    if (p < 2) return false;
    for (long d = 2; d * d <= p; ++d) {
        if (p % d == 0) return false;
    }
    return true;
}

long multiplicative_order(long g, long m) {
    long x = g % m;
    long order = 1;
    while (x != 1) {
        x = x * g % m;
        ++order;
    }
    return order;
}

// Generators of (Z/p^k)^*, identity excluded.
std::vector<long> unit_generators(long p, long k) {
    const long m = ipow(p, k);
    std::vector<long> gens;
    if (p == 2) {
        if (k >= 2) gens.push_back(m - 1);
        if (k >= 3) gens.push_back(5);
        return gens;
    }
    long g = 2;
    while (multiplicative_order(g, p) != p - 1) ++g;
    if (k >= 2 && multiplicative_order(g, p * p) != p * (p - 1)) g += p;
    if (g % m != 1) gens.push_back(g % m);
    return gens;
}

Endomorphism identity(std::size_t n) {
    Endomorphism f{std::vector<std::vector<long>>(n, std::vector<long>(n, 0))};
    for (std::size_t i = 0; i < n; ++i) f.entries[i][i] = 1;
    return f;
}

// Element indices of the p-torsion subgroup.
std::vector<Element> socle(const ExplicitModule& m) {
    std::vector<Element> out{Element(m.rank(), 0)};
    for (std::size_t r = 0; r < m.rank(); ++r) {
        const long step = ipow(m.p(), m.exponents()[r] - 1);
        std::vector<Element> next;
        for (const auto& x : out) {
            for (long t = 0; t < m.p(); ++t) {
                Element y = x;
                y[r] = t * step;
                next.push_back(std::move(y));
            }
        }
        out = std::move(next);
    }
    return out;
}

bool is_zero(const Element& x) {
    return std::all_of(x.begin(), x.end(), [](long c) { return c == 0; });
}

}  // namespace

ExplicitModule::ExplicitModule(long p, std::vector<long> exponents, std::uint64_t budget)
    : p_(p), exponents_(std::move(exponents)) {
    if (!is_prime(p)) throw InputError("p = " + std::to_string(p) + " is not prime");
    std::sort(exponents_.begin(), exponents_.end(), std::greater<>());
    for (long k : exponents_) {
        if (k <= 0) throw InputError("exponents must be positive");
        moduli_.push_back(ipow(p, k));
        if (size_ > budget / static_cast<std::uint64_t>(moduli_.back())) {
            throw BudgetExceeded("module has more than " + std::to_string(budget) + " elements");
        }
        size_ *= static_cast<std::uint64_t>(moduli_.back());
    }
}

ExplicitModule ExplicitModule::from_partition(const Partition& lambda, long p, std::uint64_t budget) {
    return ExplicitModule(p, lambda.parts(), budget);
}

Element ExplicitModule::decode(std::uint64_t index) const {
    Element x(rank());
    for (std::size_t i = rank(); i-- > 0;) {
        const auto m = static_cast<std::uint64_t>(moduli_[i]);
        x[i] = static_cast<long>(index % m);
        index /= m;
    }
    return x;
}

std::uint64_t ExplicitModule::encode(const Element& x) const {
    std::uint64_t index = 0;
    for (std::size_t i = 0; i < rank(); ++i) index = index * static_cast<std::uint64_t>(moduli_[i]) + static_cast<std::uint64_t>(x[i]);
    return index;
}

long valuation(long x, long k, long p) {
    if (x == 0) return k;
    long v = 0;
    while (v < k && x % p == 0) {
        x /= p;
        ++v;
    }
    return v;
}

OrderIdeal ideal_of(const ExplicitModule& m, const Element& x) {
    std::vector<Point> gens;
    for (std::size_t i = 0; i < m.rank(); ++i) {
        if (x[i] != 0) gens.push_back({valuation(x[i], m.exponents()[i], m.p()), m.exponents()[i]});
    }
    return ideal_from_generators(std::move(gens));
}

Element canonical_element(const ExplicitModule& m, const OrderIdeal& ideal) {
    Element x(m.rank(), 0);
    for (const auto& pt : ideal.max_points()) {
        auto it = std::find(m.exponents().begin(), m.exponents().end(), pt.k);
        if (it == m.exponents().end()) throw IdealOutOfContext("no summand of exponent " + std::to_string(pt.k));
        x[static_cast<std::size_t>(it - m.exponents().begin())] = ipow(m.p(), pt.v);
    }
    return x;
}

Element apply(const ExplicitModule& m, const Endomorphism& f, const Element& x) {
    Element y(m.rank(), 0);
    for (std::size_t r = 0; r < m.rank(); ++r) {
        long acc = 0;
        for (std::size_t s = 0; s < m.rank(); ++s) acc = mod(acc + f.entries[r][s] * x[s], m.moduli()[r]);
        y[r] = acc;
    }
    return y;
}

std::vector<Endomorphism> aut_generators(const ExplicitModule& m) {
    const std::size_t n = m.rank();
    std::vector<Endomorphism> gens;
    for (std::size_t r = 0; r < n; ++r) {
        for (long u : unit_generators(m.p(), m.exponents()[r])) {
            Endomorphism f = identity(n);
            f.entries[r][r] = u;
            gens.push_back(std::move(f));
        }
    }
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t s = 0; s < n; ++s) {
            if (r == s) continue;
            Endomorphism f = identity(n);
            f.entries[r][s] = ipow(m.p(), std::max(0L, m.exponents()[r] - m.exponents()[s]));
            gens.push_back(std::move(f));
        }
    }
    return gens;
}

std::vector<Endomorphism> all_automorphisms(const ExplicitModule& m, std::uint64_t budget) {
    const std::size_t n = m.rank();
    const auto& ks = m.exponents();
    // entry (r, s) = c * p^{max(0, k_r - k_s)} with c < p^{min(k_r, k_s)}
    std::vector<long> choices;
    std::vector<long> scale;
    std::uint64_t total = 1;
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t s = 0; s < n; ++s) {
            choices.push_back(ipow(m.p(), std::min(ks[r], ks[s])));
            scale.push_back(ipow(m.p(), std::max(0L, ks[r] - ks[s])));
            if (total > budget / static_cast<std::uint64_t>(choices.back())) {
                throw BudgetExceeded("more than " + std::to_string(budget) + " endomorphisms");
            }
            total *= static_cast<std::uint64_t>(choices.back());
        }
    }
    const auto torsion = socle(m);
    std::vector<Endomorphism> out;
    std::vector<long> digits(n * n, 0);
    Endomorphism f = identity(n);
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        std::uint64_t rest = idx;
        for (std::size_t e = 0; e < n * n; ++e) {
            digits[e] = static_cast<long>(rest % static_cast<std::uint64_t>(choices[e]));
            rest /= static_cast<std::uint64_t>(choices[e]);
            f.entries[e / n][e % n] = digits[e] * scale[e];
        }
        bool injective = true;
        for (const auto& x : torsion) {
            if (!is_zero(x) && is_zero(apply(m, f, x))) {
                injective = false;
                break;
            }
        }
        if (injective) out.push_back(f);
    }
    return out;
}

std::uint64_t automorphism_group_order(const ExplicitModule& m) {
    // Exponents ascending e_1 <= ... <= e_n; d_k = max{l : e_l = e_k},
    // c_k = min{l : e_l = e_k} (1-based).
    std::vector<long> e = m.exponents();
    std::sort(e.begin(), e.end());
    const long n = static_cast<long>(e.size());
    const long p = m.p();
    std::uint64_t order = 1;
    for (long k = 1; k <= n; ++k) {
        long d = k;
        while (d < n && e[static_cast<std::size_t>(d)] == e[static_cast<std::size_t>(k - 1)]) ++d;
        long c = k;
        while (c > 1 && e[static_cast<std::size_t>(c - 2)] == e[static_cast<std::size_t>(k - 1)]) --c;
        const long ek = e[static_cast<std::size_t>(k - 1)];
        order *= static_cast<std::uint64_t>(ipow(p, d) - ipow(p, k - 1));
        for (long j = 0; j < n - d; ++j) order *= static_cast<std::uint64_t>(ipow(p, ek));
        for (long j = 0; j < n - c + 1; ++j) order *= static_cast<std::uint64_t>(ipow(p, ek - 1));
    }
    return order;
}

namespace {

// Orbit partition of [0, n) under a set of permutations given pointwise.
// Returns the root label of every point.
template <typename Step>
std::vector<std::uint64_t> closure_quick(std::uint64_t n, std::size_t generator_count, Step step) {
    DisjointSets sets(n);
    for (std::uint64_t x = 0; x < n; ++x) {
        for (std::size_t g = 0; g < generator_count; ++g) sets.unite(x, step(g, x));
    }
    std::vector<std::uint64_t> label(n);
    for (std::uint64_t x = 0; x < n; ++x) label[x] = sets.find(x);
    return label;
}

// Orbit partition when the full group is listed: each orbit is swept once.
template <typename Step>
std::vector<std::uint64_t> closure_group(std::uint64_t n, std::size_t group_size, Step step) {
    constexpr std::uint64_t unset = ~std::uint64_t{0};
    std::vector<std::uint64_t> label(n, unset);
    for (std::uint64_t x = 0; x < n; ++x) {
        if (label[x] != unset) continue;
        for (std::size_t g = 0; g < group_size; ++g) label[step(g, x)] = x;
        label[x] = x;
    }
    return label;
}

}  // namespace

std::vector<ElementOrbit> element_orbits(const ExplicitModule& m, OrbitMode mode, std::uint64_t endo_budget) {
    const auto maps = mode == OrbitMode::quick ? aut_generators(m) : all_automorphisms(m, endo_budget);
    const std::uint64_t n = m.size();
    auto step = [&](std::size_t g, std::uint64_t x) { return m.encode(apply(m, maps[g], m.decode(x))); };
    const auto label = mode == OrbitMode::quick ? closure_quick(n, maps.size(), step) : closure_group(n, maps.size(), step);

    std::map<std::uint64_t, ElementOrbit> by_root;
    for (std::uint64_t x = 0; x < n; ++x) {
        auto [it, fresh] = by_root.try_emplace(label[x], ElementOrbit{0, m.decode(x), {}});
        if (fresh) it->second.ideal = ideal_of(m, it->second.representative);
        ++it->second.size;
    }
    std::vector<ElementOrbit> out;
    for (auto& [root, orbit] : by_root) out.push_back(std::move(orbit));
    std::sort(out.begin(), out.end(), [](const ElementOrbit& a, const ElementOrbit& b) {
        return std::tie(a.ideal, a.representative) < std::tie(b.ideal, b.representative);
    });
    return out;
}

std::vector<PairOrbit> pair_orbits(const ExplicitModule& m, OrbitMode mode, std::uint64_t pair_budget,
                                   std::uint64_t endo_budget) {
    const std::uint64_t n = m.size();
    if (n > pair_budget / n) throw BudgetExceeded("pair space exceeds " + std::to_string(pair_budget));
    const auto maps = mode == OrbitMode::quick ? aut_generators(m) : all_automorphisms(m, endo_budget);

    // Precompute each map as a permutation of elements.
    std::vector<std::vector<std::uint64_t>> perm(maps.size(), std::vector<std::uint64_t>(n));
    for (std::size_t g = 0; g < maps.size(); ++g) {
        for (std::uint64_t x = 0; x < n; ++x) perm[g][x] = m.encode(apply(m, maps[g], m.decode(x)));
    }
    auto step = [&](std::size_t g, std::uint64_t xy) { return perm[g][xy / n] * n + perm[g][xy % n]; };
    const std::uint64_t total = n * n;
    const auto label = mode == OrbitMode::quick ? closure_quick(total, maps.size(), step)
                                                : closure_group(total, maps.size(), step);

    std::vector<OrderIdeal> ideals(n);
    for (std::uint64_t x = 0; x < n; ++x) ideals[x] = ideal_of(m, m.decode(x));

    std::map<std::uint64_t, PairOrbit> by_root;
    for (std::uint64_t xy = 0; xy < total; ++xy) {
        const std::uint64_t x = xy / n;
        const std::uint64_t y = xy % n;
        auto [it, fresh] = by_root.try_emplace(label[xy], PairOrbit{0, m.decode(x), m.decode(y), ideals[x], ideals[y]});
        auto& orbit = it->second;
        ++orbit.size;
        if (!fresh && (orbit.first_ideal != ideals[x] || orbit.second_ideal != ideals[y])) orbit.invariants_constant = false;
    }
    std::vector<PairOrbit> out;
    for (auto& [root, orbit] : by_root) out.push_back(std::move(orbit));
    std::sort(out.begin(), out.end(), [](const PairOrbit& a, const PairOrbit& b) {
        return std::tie(a.first_ideal, a.second_ideal, a.first, a.second) <
               std::tie(b.first_ideal, b.second_ideal, b.first, b.second);
    });
    return out;
}

bool VerifyReport::all_pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

namespace {

std::string render_multiset(const std::map<std::pair<std::size_t, std::string>, std::string>& ms) {
    std::string out;
    for (const auto& [key, count] : ms) {
        if (!out.empty()) out += "; ";
        out += "I#" + std::to_string(key.first) + " size " + key.second + " x" + count;
    }
    return out;
}

}  // namespace

VerifyReport verify(const Partition& lambda, long p, const VerifyOptions& options) {
    const ExplicitModule m = ExplicitModule::from_partition(lambda, p, options.element_budget);
    VerifyReport report{lambda, p, options.mode, {}};
    auto add = [&](std::string name, const std::string& expected, const std::string& actual) {
        const bool pass = expected == actual;
        report.checks.push_back({std::move(name), expected, actual, pass});
    };

    const auto lattice = lattice_for(lambda);
    const auto elems = element_orbits(m, options.mode, options.endo_budget);

    // (a) element orbits against J(P)_lambda
    add("element orbit count", std::to_string(lattice->size()), std::to_string(elems.size()));
    {
        std::vector<OrderIdeal> seen;
        bool bijective = true;
        for (const auto& o : elems) {
            if (!lattice->find(o.ideal) || std::find(seen.begin(), seen.end(), o.ideal) != seen.end()) bijective = false;
            seen.push_back(o.ideal);
        }
        add("element orbits biject with ideals", "true", bijective ? "true" : "false");
    }

    // (b) orbit sizes, plus Lagrange against |Aut(M)|
    {
        std::string expected;
        std::string actual;
        bool divides = true;
        const std::uint64_t group_order = automorphism_group_order(m);
        std::map<OrderIdeal, std::uint64_t> sizes;
        for (const auto& o : elems) {
            sizes[o.ideal] += o.size;
            if (group_order % o.size != 0) divides = false;
        }
        for (const auto& ideal : lattice->ideals()) {
            const auto it = sizes.find(ideal);
            expected += "{" + to_string(ideal) + "}:" + eval_integer(orbit_size(lambda, ideal), p).get_str() + " ";
            actual += "{" + to_string(ideal) + "}:" + (it == sizes.end() ? "0" : std::to_string(it->second)) + " ";
        }
        if (!expected.empty()) expected.pop_back();
        if (!actual.empty()) actual.pop_back();
        add("element orbit sizes", expected, actual);
        add("orbit sizes divide |Aut(M)|", "true", divides ? "true" : "false");
    }

    const auto pairs = pair_orbits(m, options.mode, options.pair_budget, options.endo_budget);

    // (c) number of pair orbits
    add("pair orbit count", eval_integer(n_lambda(lambda), p).get_str(), std::to_string(pairs.size()));

    {
        bool constant = std::all_of(pairs.begin(), pairs.end(), [](const PairOrbit& o) { return o.invariants_constant; });
        add("pair orbits refine (I(x), I(y))", "true", constant ? "true" : "false");
    }

    // (d) pair orbit sizes, keyed by the ideal of the first member
    {
        std::map<std::pair<std::size_t, std::string>, Integer> expected_ms;
        OrbitCounter counter(lambda);
        for (std::size_t i = 0; i < lattice->size(); ++i) {
            const Integer first = eval_integer(orbit_size(lambda, (*lattice)[i]), p);
            for (const auto& [card, count] : counter.census((*lattice)[i])) {
                const Integer size = first * eval_integer(card, p);
                expected_ms[{i, size.get_str()}] += eval_integer(count, p);
            }
        }
        std::map<std::pair<std::size_t, std::string>, Integer> actual_ms;
        for (const auto& o : pairs) actual_ms[{lattice->index_of(o.first_ideal), std::to_string(o.size)}] += 1;
        auto render = [](const std::map<std::pair<std::size_t, std::string>, Integer>& ms) {
            std::map<std::pair<std::size_t, std::string>, std::string> out;
            for (const auto& [k, v] : ms) {
                if (v != 0) out[k] = v.get_str();
            }
            return render_multiset(out);
        };
        add("pair orbit size multiset", render(expected_ms), render(actual_ms));
    }

    // (e) refined matrix
    {
        const auto matrix = RefinedCounter(lambda).matrix();
        const std::size_t n = lattice->size();
        std::vector<std::vector<long>> counts(n, std::vector<long>(n, 0));
        for (const auto& o : pairs) ++counts[lattice->index_of(o.first_ideal)][lattice->index_of(o.second_ideal)];
        std::string expected;
        std::string actual;
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t l = 0; l < n; ++l) {
                expected += eval_integer(matrix[i][l], p).get_str() + (l + 1 < n ? "," : "");
                actual += std::to_string(counts[i][l]) + (l + 1 < n ? "," : "");
            }
            if (i + 1 < n) {
                expected += "; ";
                actual += "; ";
            }
        }
        add("refined (I, L) matrix", expected, actual);
    }
    return report;
}

namespace {

using Matrix = std::vector<long>;  // row-major n x n over F_p

Matrix mat_mul(const Matrix& a, const Matrix& b, long n, long p) {
    Matrix c(static_cast<std::size_t>(n * n), 0);
    for (long i = 0; i < n; ++i) {
        for (long k = 0; k < n; ++k) {
            const long aik = a[static_cast<std::size_t>(i * n + k)];
            if (!aik) continue;
            for (long j = 0; j < n; ++j) {
                auto& cij = c[static_cast<std::size_t>(i * n + j)];
                cij = (cij + aik * b[static_cast<std::size_t>(k * n + j)]) % p;
            }
        }
    }
    return c;
}

long determinant(Matrix a, long n, long p) {
    long det = 1;
    for (long col = 0; col < n; ++col) {
        long pivot = -1;
        for (long r = col; r < n; ++r) {
            if (a[static_cast<std::size_t>(r * n + col)] % p) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) return 0;
        if (pivot != col) {
            for (long j = 0; j < n; ++j) std::swap(a[static_cast<std::size_t>(pivot * n + j)], a[static_cast<std::size_t>(col * n + j)]);
            det = mod(-det, p);
        }
        const long pv = a[static_cast<std::size_t>(col * n + col)];
        det = det * pv % p;
        long inv = 1;
        for (long t = 1; t < p; ++t) {
            if (pv * t % p == 1) inv = t;
        }
        for (long r = col + 1; r < n; ++r) {
            const long f = a[static_cast<std::size_t>(r * n + col)] * inv % p;
            for (long j = col; j < n; ++j) {
                auto& x = a[static_cast<std::size_t>(r * n + j)];
                x = mod(x - f * a[static_cast<std::size_t>(col * n + j)], p);
            }
        }
    }
    return det;
}

// All (matrix, inverse) pairs of GL_n(F_p).
std::vector<std::pair<Matrix, Matrix>> general_linear_group(long n, long p) {
    const auto entries = static_cast<std::size_t>(n * n);
    const long count = ipow(p, n * n);
    std::vector<Matrix> invertible;
    for (long idx = 0; idx < count; ++idx) {
        Matrix g(entries);
        long rest = idx;
        for (auto& e : g) {
            e = rest % p;
            rest /= p;
        }
        if (determinant(g, n, p) != 0) invertible.push_back(std::move(g));
    }
    Matrix id(entries, 0);
    for (long i = 0; i < n; ++i) id[static_cast<std::size_t>(i * n + i)] = 1;
    std::vector<std::pair<Matrix, Matrix>> out;
    for (const auto& g : invertible) {
        for (const auto& h : invertible) {
            if (mat_mul(g, h, n, p) == id) {
                out.emplace_back(g, h);
                break;
            }
        }
    }
    return out;
}

// Orbits of GL_n(F_p) on (A, x_1, ..., x_vectors) with A -> g A g^{-1}, x -> g x.
std::uint64_t count_conjugation_orbits(long n, long p, long vectors) {
    const auto group = general_linear_group(n, p);
    const long entries = n * n + vectors * n;
    const auto total = static_cast<std::uint64_t>(ipow(p, entries));
    auto decode = [&](std::uint64_t idx) {
        std::vector<long> v(static_cast<std::size_t>(entries));
        for (auto& e : v) {
            e = static_cast<long>(idx % static_cast<std::uint64_t>(p));
            idx /= static_cast<std::uint64_t>(p);
        }
        return v;
    };
    auto encode = [&](const std::vector<long>& v) {
        std::uint64_t idx = 0;
        for (std::size_t i = v.size(); i-- > 0;) idx = idx * static_cast<std::uint64_t>(p) + static_cast<std::uint64_t>(v[i]);
        return idx;
    };
    auto act = [&](std::size_t gi, std::uint64_t idx) {
        const auto& [g, ginv] = group[gi];
        auto v = decode(idx);
        Matrix a(v.begin(), v.begin() + n * n);
        Matrix conj = mat_mul(mat_mul(g, a, n, p), ginv, n, p);
        std::vector<long> out(conj.begin(), conj.end());
        for (long t = 0; t < vectors; ++t) {
            for (long i = 0; i < n; ++i) {
                long acc = 0;
                for (long j = 0; j < n; ++j) acc += g[static_cast<std::size_t>(i * n + j)] * v[static_cast<std::size_t>(n * n + t * n + j)];
                out.push_back(acc % p);
            }
        }
        return encode(out);
    };
    const auto label = closure_group(total, group.size(), act);
    std::uint64_t orbits = 0;
    for (std::uint64_t x = 0; x < total; ++x) {
        if (label[x] == x) ++orbits;
    }
    return orbits;
}

}  // namespace

std::uint64_t count_quiver_representations(long n, long p) {
    if (!is_prime(p) || n < 1) throw InputError("need n >= 1 and p prime");
    if (ipow(p, n * n + 2 * n) > (1L << 22)) throw BudgetExceeded("too many triples");
    return count_conjugation_orbits(n, p, 2);
}

std::uint64_t count_similarity_classes(long n, long p) {
    if (!is_prime(p) || n < 1) throw InputError("need n >= 1 and p prime");
    if (ipow(p, n * n) > (1L << 22)) throw BudgetExceeded("too many matrices");
    return count_conjugation_orbits(n, p, 0);
}

}  // namespace pairorbits::oracle
