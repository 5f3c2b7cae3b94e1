#include "convcode/field.hpp"

#include <algorithm>

#include "convcode/errors.hpp"

namespace convcode {
namespace {

bool is_prime(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint32_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Polynomials over GF(p) as coefficient vectors, low degree first, used
// only while hunting for the field modulus.
using PfPoly = std::vector<std::uint32_t>;

void pf_trim(PfPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

// Remainder of f by monic g, coefficients mod p.
PfPoly pf_rem(PfPoly f, const PfPoly& g, std::uint32_t p) {
    pf_trim(f);
    while (f.size() >= g.size()) {
        std::uint32_t lead = f.back() % p;
        std::size_t shift = f.size() - g.size();
        for (std::size_t i = 0; i < g.size(); ++i) {
            std::uint64_t sub = static_cast<std::uint64_t>(lead) * g[i] % p;
            f[shift + i] = static_cast<std::uint32_t>((f[shift + i] + p - sub) % p);
        }
        pf_trim(f);
    }
    return f;
}

bool pf_irreducible(const PfPoly& f, std::uint32_t p) {
    std::size_t deg = f.size() - 1;
    for (std::size_t d = 1; 2 * d <= deg; ++d) {
        // All monic divisor candidates of degree d.
        PfPoly g(d + 1, 0);
        g[d] = 1;
        std::uint64_t count = 1;
        for (std::size_t i = 0; i < d; ++i) count *= p;
        for (std::uint64_t idx = 0; idx < count; ++idx) {
            std::uint64_t rest = idx;
            for (std::size_t i = 0; i < d; ++i) {
                g[i] = static_cast<std::uint32_t>(rest % p);
                rest /= p;
            }
            if (pf_rem(f, g, p).empty()) return false;
        }
    }
    return true;
}

// The lexicographically smallest monic irreducible of degree s, comparing
// coefficient vectors (c_0, ..., c_{s-1}) entry by entry from c_0 upward.
PfPoly smallest_irreducible(std::uint32_t p, std::uint32_t s) {
    PfPoly f(s + 1, 0);
    f[s] = 1;
    std::uint64_t count = 1;
    for (std::uint32_t i = 0; i < s; ++i) count *= p;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
        // Decode with c_0 as the most significant position so that idx
        // order equals the required lexicographic order.
        std::uint64_t rest = idx;
        for (std::uint32_t i = s; i-- > 0;) {
            f[i] = static_cast<std::uint32_t>(rest % p);
            rest /= p;
        }
        if (pf_irreducible(f, p)) return f;
    }
    throw Error("no irreducible modulus found");  // unreachable for prime p
}

constexpr std::uint32_t kMulTableLimit = 512;

}  // namespace

FieldPtr Field::make(std::uint32_t p, std::uint32_t s) {
    if (!is_prime(p)) throw PreconditionError("field characteristic must be prime, got " + std::to_string(p));
    if (s < 1) throw PreconditionError("field extension degree must be at least 1");
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < s; ++i) {
        q *= p;
        if (q > (1u << 20))
            throw CapExceededError("field size " + std::to_string(p) + "^" + std::to_string(s) + " exceeds the supported range");
    }

    auto f = std::shared_ptr<Field>(new Field());
    f->p_ = p;
    f->s_ = s;
    f->q_ = static_cast<std::uint32_t>(q);
    if (s == 1) {
        f->mod_ = {0, 1};
    } else {
        f->mod_ = smallest_irreducible(p, s);
    }
    if (f->q_ <= kMulTableLimit) {
        f->mul_table_.resize(static_cast<std::size_t>(f->q_) * f->q_);
        for (Elem x = 0; x < f->q_; ++x)
            for (Elem y = 0; y < f->q_; ++y)
                f->mul_table_[static_cast<std::size_t>(x) * f->q_ + y] = f->mul_slow(x, y);
    }
    return f;
}

Elem Field::add(Elem x, Elem y) const {
    if (s_ == 1) return (x + y) % p_;
    Elem r = 0, base = 1;
    for (std::uint32_t i = 0; i < s_; ++i) {
        r += (x % p_ + y % p_) % p_ * base;
        x /= p_;
        y /= p_;
        base *= p_;
    }
    return r;
}

Elem Field::sub(Elem x, Elem y) const { return add(x, neg(y)); }

Elem Field::neg(Elem x) const {
    if (s_ == 1) return (p_ - x) % p_;
    Elem r = 0, base = 1;
    for (std::uint32_t i = 0; i < s_; ++i) {
        r += (p_ - x % p_) % p_ * base;
        x /= p_;
        base *= p_;
    }
    return r;
}

Elem Field::mul_slow(Elem x, Elem y) const {
    if (s_ == 1) return static_cast<Elem>(static_cast<std::uint64_t>(x) * y % p_);
    std::vector<std::uint32_t> a = digits(x), b = digits(y);
    std::vector<std::uint32_t> prod(2 * s_ - 1, 0);
    for (std::uint32_t i = 0; i < s_; ++i)
        for (std::uint32_t j = 0; j < s_; ++j)
            prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p_);
    // Reduce by the monic modulus.
    for (std::size_t d = prod.size(); d-- > s_;) {
        std::uint32_t lead = prod[d];
        if (lead == 0) continue;
        for (std::uint32_t i = 0; i <= s_; ++i) {
            std::size_t pos = d - s_ + i;
            std::uint64_t sub = static_cast<std::uint64_t>(lead) * mod_[i] % p_;
            prod[pos] = static_cast<std::uint32_t>((prod[pos] + p_ - sub) % p_);
        }
    }
    prod.resize(s_);
    return from_digits(prod);
}

Elem Field::mul(Elem x, Elem y) const {
    if (!mul_table_.empty()) return mul_table_[static_cast<std::size_t>(x) * q_ + y];
    return mul_slow(x, y);
}

Elem Field::inv(Elem x) const {
    if (x == 0) throw PreconditionError("division by zero in " + describe());
    return pow(x, q_ - 2);
}

Elem Field::pow(Elem x, std::uint64_t e) const {
    Elem r = 1;
    while (e > 0) {
        if (e & 1) r = mul(r, x);
        x = mul(x, x);
        e >>= 1;
    }
    return r;
}

Elem Field::frobenius(Elem x, std::uint32_t i) const {
    i %= s_;
    std::uint64_t e = 1;
    for (std::uint32_t j = 0; j < i; ++j) e *= p_;
    return pow(x, e);
}

std::vector<std::uint32_t> Field::digits(Elem x) const {
    std::vector<std::uint32_t> d(s_);
    for (std::uint32_t i = 0; i < s_; ++i) {
        d[i] = x % p_;
        x /= p_;
    }
    return d;
}

Elem Field::from_digits(const std::vector<std::uint32_t>& d) const {
    Elem r = 0, base = 1;
    for (std::uint32_t i = 0; i < s_; ++i) {
        r += (i < d.size() ? d[i] % p_ : 0) * base;
        base *= p_;
    }
    return r;
}

std::string Field::describe() const {
    if (s_ == 1) return "GF(" + std::to_string(p_) + ")";
    return "GF(" + std::to_string(p_) + "^" + std::to_string(s_) + ")";
}

bool same_field(const Field& a, const Field& b) { return a.p() == b.p() && a.s() == b.s(); }

bool same_field(const FieldPtr& a, const FieldPtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    return same_field(*a, *b);
}

Automorphism Automorphism::inverse() const {
    return Automorphism{field, exponent == 0 ? 0 : field->s() - exponent};
}

Automorphism Automorphism::after(const Automorphism& inner) const {
    if (!same_field(field, inner.field)) throw PreconditionError("automorphism composition across different fields");
    return Automorphism{field, (exponent + inner.exponent) % field->s()};
}

Automorphism identity_automorphism(const FieldPtr& f) { return Automorphism{f, 0}; }

std::vector<Automorphism> automorphisms(const FieldPtr& f) {
    std::vector<Automorphism> out;
    out.reserve(f->s());
    for (std::uint32_t i = 0; i < f->s(); ++i) out.push_back(Automorphism{f, i});
    return out;
}

}  // namespace convcode
