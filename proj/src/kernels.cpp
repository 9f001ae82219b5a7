#include "ffroots/kernels.hpp"

#include "ffroots/error.hpp"

#include <cstdlib>
#include <string>

namespace ffroots::kernels {

std::string_view to_string(Isa isa) noexcept {
    switch (isa) {
    case Isa::scalar: return "scalar";
    case Isa::avx2: return "avx2";
    }
    return "unknown";
}

bool isa_available(Isa isa) noexcept {
    switch (isa) {
    case Isa::scalar: return true;
    case Isa::avx2:
#if defined(FFROOTS_HAVE_AVX2_KERNEL)
        return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
        return false;
#endif
    }
    return false;
}

namespace {

Isa resolve_isa() noexcept {
    if (const char* pin = std::getenv("FFROOTS_KERNEL")) {
        const std::string_view v(pin);
        if (v == "scalar") return Isa::scalar;
        if (v == "avx2" && isa_available(Isa::avx2)) return Isa::avx2;
    }
    return isa_available(Isa::avx2) ? Isa::avx2 : Isa::scalar;
}

} // namespace

Isa active_isa() noexcept {
    static const Isa isa = resolve_isa();
    return isa;
}

void negated_affine_row(std::span<const std::uint32_t> xn, std::span<const std::uint32_t> xs, std::uint32_t a,
                        std::uint32_t p, std::span<std::uint32_t> out, Isa isa) {
    require(xn.size() == xs.size() && out.size() == xn.size(), ErrorCode::PreconditionViolated,
            "kernel rows must have equal length");
    require(p >= 2 && p <= kMaxModulus, ErrorCode::PreconditionViolated, "kernel modulus out of range");
    require(isa_available(isa), ErrorCode::PreconditionViolated,
            "kernel ISA " + std::string(to_string(isa)) + " is not available on this CPU");
#if defined(FFROOTS_HAVE_AVX2_KERNEL)
    if (isa == Isa::avx2) {
        detail::negated_affine_row_avx2(xn.data(), xs.data(), a, p, out.data(), xn.size());
        return;
    }
#endif
    detail::negated_affine_row_scalar(xn.data(), xs.data(), a, p, out.data(), xn.size());
}

} // namespace ffroots::kernels
