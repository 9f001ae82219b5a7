#include "ffroots/field.hpp"

#include "ffroots/error.hpp"
#include "ffroots/poly_fp.hpp"

#include <charconv>
#include <random>
#include <sstream>

namespace ffroots {

Element Field::zero() const { return Element{std::vector<std::uint32_t>(k_, 0)}; }

Element Field::one() const {
    Element e = zero();
    e.coeffs[0] = 1;
    return e;
}

Element Field::from_int(std::int64_t v) const {
    Element e = zero();
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    if (r < 0) r += p_;
    e.coeffs[0] = static_cast<std::uint32_t>(r);
    return e;
}

Element Field::from_index(std::uint64_t index) const {
    require(index < q_, ErrorCode::PreconditionViolated, "element index out of range");
    Element e = zero();
    for (unsigned i = 0; i < k_; ++i) {
        e.coeffs[i] = static_cast<std::uint32_t>(index % p_);
        index /= p_;
    }
    return e;
}

std::uint64_t Field::index_of(const Element& x) const {
    std::uint64_t index = 0;
    for (unsigned i = k_; i-- > 0;) index = index * p_ + x.coeffs[i];
    return index;
}

Element Field::parse(const std::string& text) const {
    std::vector<std::int64_t> values;
    std::stringstream ss(text);
    std::string token;
    while (std::getline(ss, token, ',')) {
        std::int64_t v = 0;
        const char* first = token.data();
        const char* last = token.data() + token.size();
        while (first < last && *first == ' ') ++first;
        auto [ptr, ec] = std::from_chars(first, last, v);
        require(ec == std::errc{} && ptr == last, ErrorCode::InvalidCoefficient,
                "cannot parse field element '" + text + "'");
        values.push_back(v);
    }
    require(!values.empty() && values.size() <= k_, ErrorCode::InvalidCoefficient,
            "field element '" + text + "' needs between 1 and " + std::to_string(k_) + " coefficients");
    Element e = zero();
    for (std::size_t i = 0; i < values.size(); ++i) e.coeffs[i] = from_int(values[i]).coeffs[0];
    return e;
}

std::string Field::to_string(const Element& x) const {
    std::string out;
    for (unsigned i = 0; i < k_; ++i) {
        if (i) out += ',';
        out += std::to_string(x.coeffs[i]);
    }
    return out;
}

bool Field::is_zero(const Element& x) const noexcept {
    for (auto c : x.coeffs) {
        if (c != 0) return false;
    }
    return true;
}

bool Field::is_valid(const Element& x) const noexcept {
    if (x.coeffs.size() != k_) return false;
    for (auto c : x.coeffs) {
        if (c >= p_) return false;
    }
    return true;
}

Element Field::add(const Element& x, const Element& y) const {
    Element e = zero();
    for (unsigned i = 0; i < k_; ++i) {
        std::uint32_t s = x.coeffs[i] + y.coeffs[i];
        e.coeffs[i] = s >= p_ ? s - p_ : s;
    }
    return e;
}

Element Field::sub(const Element& x, const Element& y) const {
    Element e = zero();
    for (unsigned i = 0; i < k_; ++i) {
        e.coeffs[i] = x.coeffs[i] >= y.coeffs[i] ? x.coeffs[i] - y.coeffs[i] : x.coeffs[i] + p_ - y.coeffs[i];
    }
    return e;
}

Element Field::neg(const Element& x) const { return sub(zero(), x); }

Element Field::mul(const Element& x, const Element& y) const {
    if (k_ == 1) {
        return Element{{static_cast<std::uint32_t>(static_cast<std::uint64_t>(x.coeffs[0]) * y.coeffs[0] % p_)}};
    }
    // Schoolbook product, then fold the top coefficients down with the monic modulus.
    std::vector<std::uint64_t> acc(2 * k_ - 1, 0);
    for (unsigned i = 0; i < k_; ++i) {
        if (x.coeffs[i] == 0) continue;
        for (unsigned j = 0; j < k_; ++j) {
            acc[i + j] = (acc[i + j] + static_cast<std::uint64_t>(x.coeffs[i]) * y.coeffs[j]) % p_;
        }
    }
    for (unsigned d = 2 * k_ - 2; d >= k_; --d) {
        const std::uint64_t top = acc[d];
        if (top == 0) continue;
        acc[d] = 0;
        for (unsigned i = 0; i < k_; ++i) {
            acc[d - k_ + i] = (acc[d - k_ + i] + (p_ - modulus_[i]) * top) % p_;
        }
    }
    Element e = zero();
    for (unsigned i = 0; i < k_; ++i) e.coeffs[i] = static_cast<std::uint32_t>(acc[i]);
    return e;
}

Element Field::pow(const Element& x, std::uint64_t e) const {
    if (is_zero(x)) return e == 0 ? one() : zero();
    e %= group_order();
    Element result = one();
    Element base = x;
    while (e > 0) {
        if (e & 1) result = mul(result, base);
        base = mul(base, base);
        e >>= 1;
    }
    return result;
}

Element Field::inv(const Element& x) const {
    require(!is_zero(x), ErrorCode::DomainError, "zero has no inverse");
    return pow(x, group_order() - 1);
}

Element Field::div(const Element& x, const Element& y) const { return mul(x, inv(y)); }

std::uint64_t Field::multiplicative_order(const Element& x) const {
    require(!is_zero(x), ErrorCode::DomainError, "zero has no multiplicative order");
    std::uint64_t order = group_order();
    for (const auto& [l, exponent] : factors_) {
        for (unsigned i = 0; i < exponent; ++i) {
            if (pow(x, order / l) != one()) break;
            order /= l;
        }
    }
    return order;
}

void Field::find_generator() {
    factors_ = factorize(group_order());
    const Element unit = one();
    for (std::uint64_t index = 2; index < q_; ++index) {
        Element candidate = from_index(index);
        bool full = true;
        for (const auto& pp : factors_) {
            if (pow(candidate, group_order() / pp.prime) == unit) {
                full = false;
                break;
            }
        }
        if (full) {
            generator_ = std::move(candidate);
            return;
        }
    }
    // Unreachable for a field; a miss means the modulus was reducible.
    fail(ErrorCode::InvariantViolation, "no generator found for F_" + std::to_string(q_));
}

FieldPtr make_prime_field(std::uint64_t p) {
    require(p != 2, ErrorCode::UnsupportedCharacteristic, "characteristic 2 is not supported");
    require(p >= 3 && p < (std::uint64_t{1} << 31) && is_prime(p), ErrorCode::NotPrime,
            std::to_string(p) + " is not a prime in [3, 2^31)");
    std::shared_ptr<Field> f(new Field());
    f->p_ = static_cast<std::uint32_t>(p);
    f->k_ = 1;
    f->q_ = p;
    f->find_generator();
    if (p <= Field::kLogTableCap) {
        LogTable t;
        t.exp.resize(p - 1);
        t.log.assign(p, 0);
        std::uint64_t x = 1;
        const std::uint64_t g = f->generator_.coeffs[0];
        for (std::uint64_t i = 0; i + 1 < p; ++i) {
            t.exp[i] = static_cast<std::uint32_t>(x);
            t.log[x] = static_cast<std::uint32_t>(i);
            x = x * g % p;
        }
        f->logs_ = std::move(t);
    }
    return f;
}

FieldPtr make_extension_field(std::uint64_t p, unsigned k, std::uint64_t seed) {
    require(k >= 2, ErrorCode::InvalidDegree, "extension degree must be at least 2");
    require(p != 2, ErrorCode::UnsupportedCharacteristic, "characteristic 2 is not supported");
    require(p >= 3 && is_prime(p), ErrorCode::NotPrime, std::to_string(p) + " is not an odd prime");
    std::uint64_t q = 1;
    for (unsigned i = 0; i < k; ++i) {
        q *= p;
        require(q <= Field::kExtensionCap, ErrorCode::CapExceeded,
                std::to_string(p) + "^" + std::to_string(k) + " exceeds the 2^24 field-size cap");
    }
    std::shared_ptr<Field> f(new Field());
    f->p_ = static_cast<std::uint32_t>(p);
    f->k_ = k;
    f->q_ = q;
    f->seed_ = seed;

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::uint32_t> digit(0, static_cast<std::uint32_t>(p - 1));
    std::uniform_int_distribution<std::uint32_t> nonzero(1, static_cast<std::uint32_t>(p - 1));
    for (;;) {
        poly::Poly candidate(k + 1);
        candidate[0] = nonzero(rng);
        for (unsigned i = 1; i < k; ++i) candidate[i] = digit(rng);
        candidate[k] = 1;
        if (poly::is_irreducible(candidate, f->p_)) {
            f->modulus_ = std::move(candidate);
            break;
        }
    }
    f->find_generator();
    return f;
}

FieldPtr make_field(std::uint64_t p, unsigned k, std::uint64_t seed) {
    return k == 1 ? make_prime_field(p) : make_extension_field(p, k, seed);
}

std::vector<Element> SubgroupSpec::elements(const Field& field) const {
    std::vector<Element> out;
    out.reserve(order);
    Element x = field.one();
    for (std::uint64_t i = 0; i < order; ++i) {
        out.push_back(x);
        x = field.mul(x, generator);
    }
    return out;
}

SubgroupSpec subgroup(const Field& field, std::uint64_t d) {
    require(d >= 1 && field.group_order() % d == 0, ErrorCode::NotDivisor,
            std::to_string(d) + " does not divide q-1 = " + std::to_string(field.group_order()));
    return SubgroupSpec{d, field.pow(field.generator(), field.group_order() / d)};
}

} // namespace ffroots
