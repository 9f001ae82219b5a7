#pragma once

#include <cstdint>
#include <span>
#include <string_view>

// Data-parallel inner loop of every prime-field root count: for a fixed middle
// coefficient a, the constant term b that makes x a root of x^n + a x^s + b is
// -(x^n + a x^s). Callers feed precomputed power rows xn[i] = x_i^n and
// xs[i] = x_i^s.
namespace ffroots::kernels {

enum class Isa { scalar, avx2 };

std::string_view to_string(Isa isa) noexcept;

/// Compiled in and supported by the running CPU.
bool isa_available(Isa isa) noexcept;

/// Best available ISA, unless FFROOTS_KERNEL=scalar|avx2 pins one. Resolved
/// once per process.
Isa active_isa() noexcept;

/// Largest modulus the kernels accept; keeps a*xs exact in a double.
inline constexpr std::uint32_t kMaxModulus = std::uint32_t{1} << 26;

/// out[i] = (-(xn[i] + a * xs[i])) mod p, with all inputs already in [0, p).
void negated_affine_row(std::span<const std::uint32_t> xn, std::span<const std::uint32_t> xs, std::uint32_t a,
                        std::uint32_t p, std::span<std::uint32_t> out, Isa isa);

inline void negated_affine_row(std::span<const std::uint32_t> xn, std::span<const std::uint32_t> xs,
                               std::uint32_t a, std::uint32_t p, std::span<std::uint32_t> out) {
    negated_affine_row(xn, xs, a, p, out, active_isa());
}

namespace detail {
void negated_affine_row_scalar(const std::uint32_t* xn, const std::uint32_t* xs, std::uint32_t a, std::uint32_t p,
                               std::uint32_t* out, std::size_t len) noexcept;
#if defined(FFROOTS_HAVE_AVX2_KERNEL)
void negated_affine_row_avx2(const std::uint32_t* xn, const std::uint32_t* xs, std::uint32_t a, std::uint32_t p,
                             std::uint32_t* out, std::size_t len) noexcept;
#endif
} // namespace detail

} // namespace ffroots::kernels
