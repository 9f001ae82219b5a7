#include "ffroots/poly_fp.hpp"

#include "ffroots/number_theory.hpp"

#include <algorithm>

namespace ffroots::poly {
namespace {

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
    return static_cast<std::uint32_t>(mod_pow(a, p - 2, p));
}

Poly x_poly() { return Poly{0, 1}; }

} // namespace

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly sub(const Poly& a, const Poly& b, std::uint32_t p) {
    Poly out(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < out.size(); ++i) {
        std::uint64_t x = i < a.size() ? a[i] : 0;
        std::uint64_t y = i < b.size() ? b[i] : 0;
        out[i] = static_cast<std::uint32_t>((x + p - y) % p);
    }
    trim(out);
    return out;
}

Poly mul(const Poly& a, const Poly& b, std::uint32_t p) {
    if (a.empty() || b.empty()) return {};
    std::vector<std::uint64_t> acc(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            acc[i + j] = (acc[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p;
        }
    }
    Poly out(acc.begin(), acc.end());
    trim(out);
    return out;
}

Poly mod(const Poly& a, const Poly& f, std::uint32_t p) {
    Poly r = a;
    trim(r);
    const std::size_t df = f.size() - 1;
    const std::uint64_t lead_inv = inv_mod(f.back(), p);
    while (r.size() > df) {
        const std::size_t shift = r.size() - 1 - df;
        const std::uint64_t factor = r.back() * lead_inv % p;
        for (std::size_t i = 0; i < f.size(); ++i) {
            r[shift + i] = static_cast<std::uint32_t>((r[shift + i] + p - factor * f[i] % p) % p);
        }
        trim(r);
    }
    return r;
}

Poly mulmod(const Poly& a, const Poly& b, const Poly& f, std::uint32_t p) { return mod(mul(a, b, p), f, p); }

Poly gcd(Poly a, Poly b, std::uint32_t p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly r = mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        const std::uint64_t lead_inv = inv_mod(a.back(), p);
        for (auto& c : a) c = static_cast<std::uint32_t>(c * lead_inv % p);
    }
    return a;
}

Poly x_pow_p_power(const Poly& f, std::uint32_t p, unsigned j) {
    Poly result = mod(x_poly(), f, p);
    for (unsigned step = 0; step < j; ++step) {
        // result <- result^p by square-and-multiply
        Poly acc{1};
        Poly base = result;
        for (std::uint64_t e = p; e > 0; e >>= 1) {
            if (e & 1) acc = mulmod(acc, base, f, p);
            base = mulmod(base, base, f, p);
        }
        result = std::move(acc);
    }
    return result;
}

bool is_irreducible(const Poly& f, std::uint32_t p) {
    Poly g = f;
    trim(g);
    if (g.size() < 2 || g.back() != 1) return false;
    const unsigned k = static_cast<unsigned>(g.size() - 1);
    if (k == 1) return true;
    const Poly x = mod(x_poly(), g, p);
    if (x_pow_p_power(g, p, k) != x) return false;
    for (auto l : prime_divisors(k)) {
        const Poly h = sub(x_pow_p_power(g, p, k / static_cast<unsigned>(l)), x, p);
        if (gcd(h, g, p) != Poly{1}) return false;
    }
    return true;
}

} // namespace ffroots::poly
