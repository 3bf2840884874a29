#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pairorbits/ideal.hpp"
#include "pairorbits/partition.hpp"

namespace pairorbits::oracle {

// Brute-force ground truth on explicit finite abelian p-groups
// Z/p^{k_1} + ... + Z/p^{k_n}. Everything here works on concrete residues and
// never calls the polynomial counting engine.

inline constexpr std::uint64_t kDefaultElementBudget = std::uint64_t{1} << 12;
inline constexpr std::uint64_t kDefaultPairBudget = std::uint64_t{1} << 20;
inline constexpr std::uint64_t kDefaultEndomorphismBudget = std::uint64_t{1} << 24;

using Element = std::vector<long>;

class ExplicitModule {
public:
    // exponents are sorted into weakly decreasing order.
    ExplicitModule(long p, std::vector<long> exponents, std::uint64_t budget = kDefaultElementBudget);
    static ExplicitModule from_partition(const Partition& lambda, long p,
                                         std::uint64_t budget = kDefaultElementBudget);

    long p() const { return p_; }
    const std::vector<long>& exponents() const { return exponents_; }
    const std::vector<long>& moduli() const { return moduli_; }
    std::size_t rank() const { return exponents_.size(); }
    std::uint64_t size() const { return size_; }

    Element decode(std::uint64_t index) const;
    std::uint64_t encode(const Element& x) const;

private:
    long p_;
    std::vector<long> exponents_;
    std::vector<long> moduli_;
    std::uint64_t size_ = 1;
};

// Largest e <= k with p^e | x (k for x = 0).
long valuation(long x, long k, long p);

// The ideal generated by (v(x_i), k_i) over nonzero coordinates.
OrderIdeal ideal_of(const ExplicitModule& m, const Element& x);

// Canonical representative m(I): p^{v_j} in the first coordinate of each row
// k_j of a maximal point, zero elsewhere.
Element canonical_element(const ExplicitModule& m, const OrderIdeal& ideal);

// y_r = sum_s entries[r][s] * x_s mod p^{k_r}.
struct Endomorphism {
    std::vector<std::vector<long>> entries;
};

Element apply(const ExplicitModule& m, const Endomorphism& f, const Element& x);

// Unit scalings per coordinate plus elementary transvections between
// coordinates; together they generate Aut(M).
std::vector<Endomorphism> aut_generators(const ExplicitModule& m);

// Every invertible endomorphism. Throws BudgetExceeded when the number of
// endomorphisms p^{sum min(k_r, k_s)} exceeds the budget.
std::vector<Endomorphism> all_automorphisms(const ExplicitModule& m,
                                            std::uint64_t budget = kDefaultEndomorphismBudget);

// |Aut(M)| from the closed formula for finite abelian p-groups.
std::uint64_t automorphism_group_order(const ExplicitModule& m);

enum class OrbitMode { quick, full_endos };

struct ElementOrbit {
    std::uint64_t size;
    Element representative;
    OrderIdeal ideal;
};

struct PairOrbit {
    std::uint64_t size;
    Element first;
    Element second;
    OrderIdeal first_ideal;
    OrderIdeal second_ideal;
    // False if members of the orbit disagreed on (I(first), I(second)).
    bool invariants_constant = true;
};

std::vector<ElementOrbit> element_orbits(const ExplicitModule& m, OrbitMode mode = OrbitMode::quick,
                                         std::uint64_t endo_budget = kDefaultEndomorphismBudget);
std::vector<PairOrbit> pair_orbits(const ExplicitModule& m, OrbitMode mode = OrbitMode::quick,
                                   std::uint64_t pair_budget = kDefaultPairBudget,
                                   std::uint64_t endo_budget = kDefaultEndomorphismBudget);

struct Check {
    std::string name;
    std::string expected;
    std::string actual;
    bool pass;
};

struct VerifyReport {
    Partition lambda;
    long p = 0;
    OrbitMode mode = OrbitMode::quick;
    std::vector<Check> checks;

    bool all_pass() const;
};

struct VerifyOptions {
    OrbitMode mode = OrbitMode::quick;
    std::uint64_t element_budget = kDefaultElementBudget;
    std::uint64_t pair_budget = kDefaultPairBudget;
    std::uint64_t endo_budget = kDefaultEndomorphismBudget;
};

// Compares orbit enumeration on M_lambda over Z/p^k against every counting
// formula evaluated at q = p.
VerifyReport verify(const Partition& lambda, long p, const VerifyOptions& options = {});

// Isomorphism classes of triples (A, x, y) over F_p modulo simultaneous
// change of basis, by direct orbit enumeration.
std::uint64_t count_quiver_representations(long n, long p);
// Conjugacy classes of n x n matrices over F_p.
std::uint64_t count_similarity_classes(long n, long p);

}  // namespace pairorbits::oracle
