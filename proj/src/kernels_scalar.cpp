#include "ffroots/kernels.hpp"

namespace ffroots::kernels::detail {

void negated_affine_row_scalar(const std::uint32_t* xn, const std::uint32_t* xs, std::uint32_t a, std::uint32_t p,
                               std::uint32_t* out, std::size_t len) noexcept {
    const std::uint64_t mod = p;
    for (std::size_t i = 0; i < len; ++i) {
        const std::uint64_t v = (xn[i] + static_cast<std::uint64_t>(a) * xs[i]) % mod;
        out[i] = static_cast<std::uint32_t>(v == 0 ? 0 : mod - v);
    }
}

} // namespace ffroots::kernels::detail
