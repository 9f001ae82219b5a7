#include "ffroots/trinomial.hpp"

#include "ffroots/error.hpp"
#include "ffroots/kernels.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace ffroots {
namespace {

std::uint64_t ipow(std::uint64_t base, unsigned e) {
    std::uint64_t r = 1;
    for (unsigned i = 0; i < e; ++i) r *= base;
    return r;
}

std::uint64_t mul_mod(std::uint64_t x, std::uint64_t y, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(x) * y % m);
}

std::uint64_t check_cap(std::uint64_t p, unsigned k) {
    require(p >= 3 && is_prime(p), p == 2 ? ErrorCode::UnsupportedCharacteristic : ErrorCode::NotPrime,
            "need an odd prime, got " + std::to_string(p));
    std::uint64_t q = 1;
    for (unsigned i = 0; i < k; ++i) {
        q *= p;
        require(q <= Field::kExtensionCap, ErrorCode::CapExceeded,
                std::to_string(p) + "^" + std::to_string(k) + " exceeds the 2^24 field-size cap");
    }
    return q;
}

void validate(const Trinomial& f) {
    require(f.field != nullptr, ErrorCode::PreconditionViolated, "trinomial has no field");
    require(0 < f.s && f.s < f.n, ErrorCode::InvalidExponent, "exponents must satisfy 0 < s < n");
    const Field& F = *f.field;
    require(F.is_valid(f.lead) && F.is_valid(f.a) && F.is_valid(f.b), ErrorCode::InvalidCoefficient,
            "coefficient is not an element of F_" + std::to_string(F.q()));
    require(!F.is_zero(f.lead), ErrorCode::InvalidCoefficient, "leading coefficient must be nonzero");
    require(!F.is_zero(f.a) && !F.is_zero(f.b), ErrorCode::InvalidCoefficient, "a and b nonzero required");
}

std::vector<Element> roots_by_log_table(const Trinomial& f) {
    const Field& F = *f.field;
    const LogTable* logs = F.log_table();
    require(F.k() == 1 && logs != nullptr, ErrorCode::PreconditionViolated,
            "log-table evaluation needs a prime field with log tables");
    const Trinomial g = f.normalized_monic();
    const std::uint32_t p = F.p();
    const std::uint64_t m = F.group_order();
    const std::uint64_t n = g.n % m;
    const std::uint64_t s = g.s % m;

    std::vector<std::uint32_t> xn(m), xs(m), row(m);
    std::uint64_t in = 0, is = 0;
    for (std::uint64_t i = 0; i < m; ++i) {
        xn[i] = logs->exp[in];
        xs[i] = logs->exp[is];
        in += n;
        if (in >= m) in -= m;
        is += s;
        if (is >= m) is -= m;
    }
    kernels::negated_affine_row(xn, xs, g.a.coeffs[0], p, row);

    std::vector<std::uint32_t> values;
    const std::uint32_t b = g.b.coeffs[0];
    for (std::uint64_t i = 0; i < m; ++i) {
        if (row[i] == b) values.push_back(logs->exp[i]);
    }
    std::sort(values.begin(), values.end());
    std::vector<Element> out;
    out.reserve(values.size());
    for (auto v : values) out.push_back(Element{{v}});
    return out;
}

std::vector<Element> roots_by_pow(const Trinomial& f) {
    const Field& F = *f.field;
    std::vector<Element> out;
    for (std::uint64_t index = 1; index < F.q(); ++index) {
        Element x = F.from_index(index);
        if (F.is_zero(f.evaluate(x))) out.push_back(std::move(x));
    }
    return out;
}

} // namespace

Trinomial Trinomial::monic(FieldPtr field, std::uint64_t n, std::uint64_t s, Element a, Element b) {
    require(field != nullptr, ErrorCode::PreconditionViolated, "trinomial has no field");
    Element lead = field->one();
    return general(std::move(field), n, s, std::move(lead), std::move(a), std::move(b));
}

Trinomial Trinomial::general(FieldPtr field, std::uint64_t n, std::uint64_t s, Element lead, Element a, Element b) {
    Trinomial f{std::move(field), n, s, std::move(lead), std::move(a), std::move(b)};
    validate(f);
    return f;
}

Element Trinomial::evaluate(const Element& x) const {
    const Field& F = *field;
    return F.add(F.add(F.mul(lead, F.pow(x, n)), F.mul(a, F.pow(x, s))), b);
}

Trinomial Trinomial::normalized_monic() const {
    const Field& F = *field;
    const Element inv = F.inv(lead);
    return Trinomial{field, n, s, F.one(), F.mul(a, inv), F.mul(b, inv)};
}

Trinomial Trinomial::normalized_constant_one() const {
    const Field& F = *field;
    const Element inv = F.inv(b);
    return Trinomial{field, n, s, F.mul(lead, inv), F.mul(a, inv), F.one()};
}

bool Trinomial::operator==(const Trinomial& other) const {
    const bool same_field = field == other.field ||
                            (field && other.field && field->q() == other.field->q() &&
                             field->modulus() == other.field->modulus());
    return same_field && n == other.n && s == other.s && lead == other.lead && a == other.a && b == other.b;
}

std::uint64_t delta(const Trinomial& f) { return gcd3(f.n, f.s, f.field->group_order()); }

DeltaBound delta_bound(std::uint64_t q, std::uint64_t delta) {
    require(q >= 2 && delta >= 1 && (q - 1) % delta == 0, ErrorCode::PreconditionViolated,
            "delta must divide q-1");
    DeltaBound out;
    out.delta = delta;
    out.new_bound = delta * half_plus_sqrt_floor((q - 1) / delta);
    // floor(2 sqrt(d(q-1))) = floor(sqrt(4 d (q-1)))
    out.old_bound = isqrt(4 * delta * (q - 1));
    return out;
}

DeltaBound bounds(const Trinomial& f) { return delta_bound(f.field->q(), delta(f)); }

RootReport count_roots(const Trinomial& f, EvalPath path) {
    validate(f);
    const Field& F = *f.field;
    if (path == EvalPath::automatic) {
        path = (F.log_table() != nullptr) ? EvalPath::log_table : EvalPath::generic;
    }
    RootReport report;
    report.delta = delta(f);
    report.roots = path == EvalPath::log_table ? roots_by_log_table(f) : roots_by_pow(f);

    std::map<Element, std::size_t> coset_of;
    for (std::size_t i = 0; i < report.roots.size(); ++i) {
        Element y = F.pow(report.roots[i], report.delta);
        auto [it, inserted] = coset_of.try_emplace(y, report.cosets.size());
        if (inserted) {
            report.cosets.emplace_back();
            report.reduced_roots.push_back(std::move(y));
        }
        report.cosets[it->second].push_back(i);
    }
    for (const auto& coset : report.cosets) {
        require(coset.size() == report.delta, ErrorCode::InvariantViolation,
                "root set is not a union of full cosets of the order-delta subgroup");
    }
    return report;
}

Trinomial family_C(FieldPtr field, std::uint64_t n, std::uint64_t s, const Element& c) {
    require(field != nullptr, ErrorCode::PreconditionViolated, "no field");
    const Field& F = *field;
    require(F.is_valid(c), ErrorCode::InvalidCoefficient, "c is not a field element");
    const Element c_plus_one = F.add(c, F.one());
    require(!F.is_zero(c) && !F.is_zero(c_plus_one), ErrorCode::InvalidCoefficient, "c must not be 0 or -1");
    Element a = F.neg(c_plus_one);
    Element b = F.one();
    return Trinomial::general(std::move(field), n, s, c, std::move(a), std::move(b));
}

SharedRootReport shared_root_check(FieldPtr field, std::uint64_t n, std::uint64_t s, std::uint64_t N) {
    require(field != nullptr, ErrorCode::PreconditionViolated, "no field");
    const Field& F = *field;
    require(N >= 1 && F.group_order() % N == 0, ErrorCode::PreconditionViolated, "N must divide q-1");
    require(gcd3(n, s, N) == 1, ErrorCode::PreconditionViolated, "gcd(n, s, N) must be 1");

    SharedRootReport out;
    out.subgroup_order = N;
    out.family_size = F.q() - 2;
    const Element minus_one = F.neg(F.one());
    const auto G = subgroup(F, N).elements(F);
    for (const auto& alpha : G) {
        const Element A = F.pow(alpha, n);
        const Element B = F.pow(alpha, s);
        std::uint64_t members = 0;
        if (F.k() == 1) {
            const std::uint64_t p = F.p(), an = A.coeffs[0], bs = B.coeffs[0];
            for (std::uint64_t c = 1; c + 1 < p; ++c) {
                // c A - (c + 1) B + 1
                const std::uint64_t v = (c * an + (p - (c + 1) * bs % p) + 1) % p;
                if (v == 0 && ++members >= 2) break;
            }
        } else {
            for (std::uint64_t index = 1; index < F.q(); ++index) {
                const Element c = F.from_index(index);
                if (c == minus_one) continue;
                const Element v = F.add(F.sub(F.mul(c, A), F.mul(F.add(c, F.one()), B)), F.one());
                if (F.is_zero(v) && ++members >= 2) break;
            }
        }
        if (members >= 2) out.shared_roots.push_back(alpha);
    }
    out.pass = std::all_of(out.shared_roots.begin(), out.shared_roots.end(),
                           [&](const Element& x) { return x == F.one(); });
    return out;
}

std::uint64_t subgroup_root_count(const Trinomial& f, std::uint64_t N) {
    validate(f);
    const Field& F = *f.field;
    require(N >= 1 && F.group_order() % N == 0, ErrorCode::PreconditionViolated, "N must divide q-1");
    require(gcd3(f.n, f.s, N) == 1, ErrorCode::PreconditionViolated, "gcd(n, s, N) must be 1");
    const Trinomial g = f.normalized_constant_one();
    std::uint64_t count = 0;
    for (const auto& x : subgroup(F, N).elements(F)) {
        if (F.is_zero(g.evaluate(x))) ++count;
    }
    return count;
}

ExtremalResult extremal_trinomial(std::uint64_t p, unsigned k, std::uint64_t seed) {
    require(k >= 1, ErrorCode::InvalidDegree, "k must be at least 1");
    check_cap(p, 2 * k);
    auto field = make_extension_field(p, 2 * k, seed);
    const std::uint64_t pk = ipow(p, k);
    const Field& F = *field;
    ExtremalResult out{Trinomial::monic(field, pk, 1, F.one(), F.from_int(-2)), {}, pk};
    out.report = count_roots(out.trinomial);
    require(delta(out.trinomial) == 1, ErrorCode::InvariantViolation, "extremal trinomial must have delta 1");
    require(F.is_zero(out.trinomial.evaluate(F.one())), ErrorCode::InvariantViolation, "1 must be a root");
    require(out.report.count() == pk, ErrorCode::InvariantViolation,
            "expected " + std::to_string(pk) + " roots, found " + std::to_string(out.report.count()));
    return out;
}

KernelDimension frobenius_map_rank(std::uint64_t p, unsigned k, std::uint64_t seed) {
    require(k >= 1, ErrorCode::InvalidDegree, "k must be at least 1");
    check_cap(p, 2 * k);
    auto field = make_extension_field(p, 2 * k, seed);
    const Field& F = *field;
    const std::uint64_t pk = ipow(p, k);
    KernelDimension out;
    for (std::uint64_t index = 0; index < F.q(); ++index) {
        const Element x = F.from_index(index);
        if (F.is_zero(F.add(F.pow(x, pk), x))) ++out.kernel_size;
    }
    std::uint64_t size = out.kernel_size;
    while (size > 1 && size % pk == 0) {
        size /= pk;
        ++out.dimension;
    }
    require(size == 1, ErrorCode::InvariantViolation, "kernel size is not a power of p^k");
    require(out.dimension == 1, ErrorCode::InvariantViolation,
            "kernel of x^(p^k) + x has dimension " + std::to_string(out.dimension));
    return out;
}

CubeResult cube_example(std::uint64_t p, unsigned m, std::uint64_t seed) {
    require(m >= 1, ErrorCode::InvalidDegree, "m must be at least 1");
    check_cap(p, 3 * m);
    auto field = make_extension_field(p, 3 * m, seed);
    const Field& F = *field;
    const std::uint64_t pm = ipow(p, m);
    CubeResult out{Trinomial::monic(field, 1 + pm, 1, F.one(), F.one()), {}, pm + 1, false};
    out.report = count_roots(out.trinomial);
    out.matches = out.report.count() == out.expected_roots;
    return out;
}

Trinomial equivalent_transform(const Trinomial& f, const Element& gamma, std::uint64_t e) {
    validate(f);
    const Field& F = *f.field;
    const std::uint64_t m = F.group_order();
    require(F.is_valid(gamma) && !F.is_zero(gamma), ErrorCode::InvalidCoefficient, "gamma must be nonzero");
    require(std::gcd(e % m, m) == 1, ErrorCode::InvalidExponent, "gcd(e, q-1) must be 1");
    const std::uint64_t n2 = mul_mod(f.n % m, e % m, m);
    const std::uint64_t s2 = mul_mod(f.s % m, e % m, m);
    require(n2 != 0 && s2 != 0 && n2 != s2, ErrorCode::InvariantViolation,
            "exponents collide after reduction mod q-1");

    // f(gamma x^e) = lead gamma^n x^n2 + a gamma^s x^s2 + b
    Element c_n = F.mul(f.lead, F.pow(gamma, f.n));
    Element c_s = F.mul(f.a, F.pow(gamma, f.s));
    Trinomial g = n2 > s2 ? Trinomial{f.field, n2, s2, std::move(c_n), std::move(c_s), f.b}
                          : Trinomial{f.field, s2, n2, std::move(c_s), std::move(c_n), f.b};
    return g.normalized_monic();
}

} // namespace ffroots
