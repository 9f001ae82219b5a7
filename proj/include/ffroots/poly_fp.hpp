#pragma once

#include <cstdint>
#include <vector>

namespace ffroots::poly {

/// Dense polynomial over F_p, constant term first. Trimmed polynomials carry
/// no trailing zeros; the zero polynomial is the empty vector.
using Poly = std::vector<std::uint32_t>;

void trim(Poly& a);
Poly sub(const Poly& a, const Poly& b, std::uint32_t p);
Poly mul(const Poly& a, const Poly& b, std::uint32_t p);
/// Remainder of a modulo a nonzero f.
Poly mod(const Poly& a, const Poly& f, std::uint32_t p);
Poly mulmod(const Poly& a, const Poly& b, const Poly& f, std::uint32_t p);
/// Monic gcd; gcd(0, 0) = 0.
Poly gcd(Poly a, Poly b, std::uint32_t p);
/// x^(p^j) mod f.
Poly x_pow_p_power(const Poly& f, std::uint32_t p, unsigned j);

/// Rabin's test for a monic f of degree k >= 1: x^(p^k) = x mod f and
/// gcd(x^(p^(k/l)) - x, f) = 1 for every prime l | k.
bool is_irreducible(const Poly& f, std::uint32_t p);

} // namespace ffroots::poly
