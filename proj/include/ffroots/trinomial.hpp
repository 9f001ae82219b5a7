#pragma once

#include "ffroots/field.hpp"

#include <cstdint>
#include <vector>

namespace ffroots {

/// lead * x^n + a * x^s + b over a shared field, with 0 < s < n and all three
/// coefficients nonzero. Monic trinomials (lead = 1) are the usual case; the
/// C(n, s) family members are the non-monic ones.
struct Trinomial {
    FieldPtr field;
    std::uint64_t n = 0;
    std::uint64_t s = 0;
    Element lead;
    Element a;
    Element b;

    /// x^n + a x^s + b; throws InvalidExponent / InvalidCoefficient when the
    /// shape is not a genuine trinomial.
    static Trinomial monic(FieldPtr field, std::uint64_t n, std::uint64_t s, Element a, Element b);
    static Trinomial general(FieldPtr field, std::uint64_t n, std::uint64_t s, Element lead, Element a, Element b);

    Element evaluate(const Element& x) const;
    /// Divide through by the leading coefficient.
    Trinomial normalized_monic() const;
    /// Divide through by the constant term: (lead/b) x^n + (a/b) x^s + 1.
    Trinomial normalized_constant_one() const;

    bool operator==(const Trinomial& other) const;
};

/// gcd(n, s, q - 1).
std::uint64_t delta(const Trinomial& f);

struct DeltaBound {
    std::uint64_t delta;
    /// delta * floor(1/2 + sqrt((q-1)/delta))
    std::uint64_t new_bound;
    /// floor(2 sqrt(delta (q-1)))
    std::uint64_t old_bound;
};

DeltaBound delta_bound(std::uint64_t q, std::uint64_t delta);
DeltaBound bounds(const Trinomial& f);

struct RootReport {
    std::uint64_t delta = 1;
    /// Distinct roots, sorted by field index.
    std::vector<Element> roots;
    /// Partition of `roots` (as indices) into cosets xH of the order-delta
    /// subgroup H, in order of first appearance.
    std::vector<std::vector<std::size_t>> cosets;
    /// y = x^delta for each coset, in coset order. These lie in the subgroup
    /// of order (q-1)/delta.
    std::vector<Element> reduced_roots;

    std::size_t count() const noexcept { return roots.size(); }
};

enum class EvalPath {
    automatic, // log tables when the field has them, generic pow otherwise
    log_table,
    generic,
};

/// Exhaustive evaluation over F_q^* (0 is never a root since b != 0).
RootReport count_roots(const Trinomial& f, EvalPath path = EvalPath::automatic);

/// c x^n - (c+1) x^s + 1, for c not in {0, -1}.
Trinomial family_C(FieldPtr field, std::uint64_t n, std::uint64_t s, const Element& c);

struct SharedRootReport {
    std::uint64_t subgroup_order = 0;
    std::uint64_t family_size = 0;
    /// Elements of the subgroup that are roots of at least two members.
    std::vector<Element> shared_roots;
    bool pass = false; // shared_roots is a subset of {1}
};

/// Exhaustive check of which elements of the order-N subgroup are shared
/// roots of distinct members of C(n, s). Requires gcd(n, s, N) = 1, N | q-1.
SharedRootReport shared_root_check(FieldPtr field, std::uint64_t n, std::uint64_t s, std::uint64_t N);

/// Number of roots of f inside the order-N subgroup. f is rescaled to
/// constant term 1 first; requires gcd(n, s, N) = 1 and N | q-1.
std::uint64_t subgroup_root_count(const Trinomial& f, std::uint64_t N);

struct ExtremalResult {
    Trinomial trinomial;
    RootReport report;
    std::uint64_t expected_roots = 0;
};

/// x^(p^k) + x - 2 over F_(p^(2k)); verifies exactly p^k roots, delta = 1
/// and that 1 is a root, throwing InvariantViolation otherwise.
ExtremalResult extremal_trinomial(std::uint64_t p, unsigned k, std::uint64_t seed = Field::kDefaultSeed);

struct KernelDimension {
    std::uint64_t kernel_size = 0;
    unsigned dimension = 0;
};

/// Kernel of T(x) = x^(p^k) + x on F_(p^(2k)), viewed as an F_(p^k)-linear
/// map, by exhaustive scan. Throws InvariantViolation unless the dimension
/// is 1.
KernelDimension frobenius_map_rank(std::uint64_t p, unsigned k, std::uint64_t seed = Field::kDefaultSeed);

struct CubeResult {
    Trinomial trinomial;
    RootReport report;
    std::uint64_t expected_roots = 0;
    bool matches = false;
};

/// x^(1 + p^m) + x + 1 over F_(p^(3m)). The count is compared against
/// p^m + 1 and reported; a mismatch is not an error.
CubeResult cube_example(std::uint64_t p, unsigned m, std::uint64_t seed = Field::kDefaultSeed);

/// gamma^(-n) f(gamma x^e) with exponents reduced mod q-1 and made monic in
/// the larger exponent. Requires gamma != 0 and gcd(e, q-1) = 1. The roots of
/// f are the images of the roots of the result under x -> gamma x^e.
Trinomial equivalent_transform(const Trinomial& f, const Element& gamma, std::uint64_t e);

} // namespace ffroots
