#pragma once

#include "ffroots/number_theory.hpp"

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace ffroots {

/// Field element in the power basis of the field's modulus; coeffs[0] is the
/// constant term. Always fully reduced, so equality is coefficient-wise.
struct Element {
    std::vector<std::uint32_t> coeffs;

    auto operator<=>(const Element&) const = default;
};

/// Discrete log / antilog tables of a prime field under its generator.
struct LogTable {
    std::vector<std::uint32_t> exp; // exp[i] = g^i, i in [0, p-1)
    std::vector<std::uint32_t> log; // log[exp[i]] = i; log[0] is unused
};

/// F_q with q = p^k, k >= 1. Immutable once built; share it through FieldPtr.
class Field {
public:
    static constexpr std::uint64_t kExtensionCap = std::uint64_t{1} << 24;
    static constexpr std::uint64_t kLogTableCap = std::uint64_t{1} << 20;
    static constexpr std::uint64_t kDefaultSeed = 1;

    std::uint32_t p() const noexcept { return p_; }
    unsigned k() const noexcept { return k_; }
    std::uint64_t q() const noexcept { return q_; }
    std::uint64_t group_order() const noexcept { return q_ - 1; }

    /// Monic modulus, constant term first; empty for prime fields.
    const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }
    const Element& generator() const noexcept { return generator_; }
    const std::vector<PrimePower>& group_order_factors() const noexcept { return factors_; }
    /// Seed used by the modulus search (extension fields only).
    std::optional<std::uint64_t> seed() const noexcept { return seed_; }
    const LogTable* log_table() const noexcept { return logs_ ? &*logs_ : nullptr; }

    Element zero() const;
    Element one() const;
    /// Image of an integer under Z -> F_p -> F_q.
    Element from_int(std::int64_t v) const;
    /// Base-p digits of index in [0, q) as coefficients.
    Element from_index(std::uint64_t index) const;
    std::uint64_t index_of(const Element& x) const;
    /// Parse either a single integer (prime subfield) or a comma separated
    /// coefficient list "c0,c1,..." with at most k entries.
    Element parse(const std::string& text) const;
    std::string to_string(const Element& x) const;

    bool is_zero(const Element& x) const noexcept;
    bool is_valid(const Element& x) const noexcept;

    Element add(const Element& x, const Element& y) const;
    Element sub(const Element& x, const Element& y) const;
    Element neg(const Element& x) const;
    Element mul(const Element& x, const Element& y) const;
    /// Square-and-multiply; the exponent is reduced mod q-1 for nonzero x.
    Element pow(const Element& x, std::uint64_t e) const;
    Element inv(const Element& x) const;
    Element div(const Element& x, const Element& y) const;
    std::uint64_t multiplicative_order(const Element& x) const;

private:
    friend std::shared_ptr<const Field> make_prime_field(std::uint64_t p);
    friend std::shared_ptr<const Field> make_extension_field(std::uint64_t p, unsigned k, std::uint64_t seed);

    Field() = default;
    void find_generator();

    std::uint32_t p_ = 0;
    unsigned k_ = 1;
    std::uint64_t q_ = 0;
    std::vector<std::uint32_t> modulus_;
    Element generator_;
    std::vector<PrimePower> factors_;
    std::optional<std::uint64_t> seed_;
    std::optional<LogTable> logs_;
};

using FieldPtr = std::shared_ptr<const Field>;

/// Prime field F_p for an odd prime 3 <= p < 2^31. The generator is the
/// smallest integer >= 2 of full order. Log tables are built for p <= 2^20.
FieldPtr make_prime_field(std::uint64_t p);

/// F_{p^k} for k >= 2 and p^k <= 2^24. The modulus is the first monic
/// irreducible found by a random search driven by `seed`.
FieldPtr make_extension_field(std::uint64_t p, unsigned k, std::uint64_t seed = Field::kDefaultSeed);

/// make_prime_field for k = 1, make_extension_field otherwise.
FieldPtr make_field(std::uint64_t p, unsigned k, std::uint64_t seed = Field::kDefaultSeed);

/// The unique subgroup of F_q^* of order d.
struct SubgroupSpec {
    std::uint64_t order;
    Element generator;

    std::vector<Element> elements(const Field& field) const;
};

SubgroupSpec subgroup(const Field& field, std::uint64_t d);

} // namespace ffroots
