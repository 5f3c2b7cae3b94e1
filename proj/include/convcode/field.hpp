#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace convcode {

// Field elements are plain integers in [0, q).  The value x stands for the
// polynomial sum_i d_i a^i in the fixed generator a of GF(p^s), where
// x = sum_i d_i p^i is the base-p expansion of x (low digit = constant
// coefficient).  For prime fields this is just the integer mod p.
using Elem = std::uint32_t;

class Field;
using FieldPtr = std::shared_ptr<const Field>;

// GF(p^s).  Extension fields are built as GF(p)[a] modulo the
// lexicographically smallest monic irreducible of degree s, comparing
// coefficient vectors from the constant coefficient upward.  All element
// operations are total on [0, q) and exact.
class Field {
public:
    static FieldPtr make(std::uint32_t p, std::uint32_t s = 1);

    std::uint32_t p() const { return p_; }
    std::uint32_t s() const { return s_; }
    std::uint32_t q() const { return q_; }
    bool prime() const { return s_ == 1; }

    Elem add(Elem x, Elem y) const;
    Elem sub(Elem x, Elem y) const;
    Elem neg(Elem x) const;
    Elem mul(Elem x, Elem y) const;
    Elem inv(Elem x) const;  // throws PreconditionError on 0
    Elem pow(Elem x, std::uint64_t e) const;

    // x^(p^i), the i-th power of the Frobenius.
    Elem frobenius(Elem x, std::uint32_t i) const;

    // Base-p digits of an element, low digit first, always s entries.
    std::vector<std::uint32_t> digits(Elem x) const;
    Elem from_digits(const std::vector<std::uint32_t>& d) const;

    // Modulus coefficients c_0 .. c_s (monic, c_s = 1).  For s = 1 this is
    // {0, 1}, i.e. the generator a itself is 0.
    const std::vector<std::uint32_t>& modulus() const { return mod_; }

    std::string describe() const;  // "GF(2)", "GF(2^2)", ...

private:
    Field() = default;

    Elem mul_slow(Elem x, Elem y) const;

    std::uint32_t p_ = 0;
    std::uint32_t s_ = 0;
    std::uint32_t q_ = 0;
    std::vector<std::uint32_t> mod_;
    std::vector<Elem> mul_table_;  // q*q entries when q is small, else empty
};

// Fields are compared structurally; two independently made GF(4) handles
// are interchangeable.
bool same_field(const Field& a, const Field& b);
bool same_field(const FieldPtr& a, const FieldPtr& b);

// The Frobenius power x -> x^(p^i).  exponent == 0 is the identity.
struct Automorphism {
    FieldPtr field;
    std::uint32_t exponent = 0;

    Elem operator()(Elem x) const { return field->frobenius(x, exponent); }
    bool is_identity() const { return exponent == 0; }
    Automorphism inverse() const;
    Automorphism after(const Automorphism& inner) const;  // this o inner
};

Automorphism identity_automorphism(const FieldPtr& f);

// All s automorphisms of GF(p^s), identity first, by ascending exponent.
std::vector<Automorphism> automorphisms(const FieldPtr& f);

}  // namespace convcode
