#pragma once

#include <optional>
#include <vector>

#include "convcode/field.hpp"

namespace convcode {

struct PolyDivRem;

// Univariate polynomial over a finite field in the delay variable z.
// Coefficients are stored low degree first and kept free of trailing
// zeros, so the zero polynomial has an empty coefficient vector and its
// degree is reported as nullopt rather than a fake number.
class Poly {
public:
    explicit Poly(FieldPtr f) : f_(std::move(f)) {}
    Poly(FieldPtr f, std::vector<Elem> coeffs);
    static Poly constant(FieldPtr f, Elem c);
    static Poly z(FieldPtr f);  // the monomial z

    const FieldPtr& field() const { return f_; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    std::optional<int> degree() const;
    int degree_or(int if_zero) const;
    Elem coeff(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
    const std::vector<Elem>& coeffs() const { return c_; }
    Elem leading_coeff() const;  // throws on the zero polynomial
    Elem constant_coeff() const { return coeff(0); }

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly negated() const;
    Poly scaled(Elem c) const;
    Poly shifted(int e) const;  // multiply by z^e, e >= 0
    Poly monic() const;         // throws on the zero polynomial
    bool operator==(const Poly& o) const;
    bool operator!=(const Poly& o) const { return !(*this == o); }

    Elem eval(Elem x) const;

    // Number of nonzero coefficients.
    unsigned weight() const;

    // Quotient and remainder by a nonzero divisor.
    PolyDivRem divrem(const Poly& divisor) const;

private:
    void trim();

    FieldPtr f_;
    std::vector<Elem> c_;
};

struct PolyDivRem {
    Poly quotient;
    Poly remainder;
};

// Monic greatest common divisor; gcd(0, 0) = 0.
Poly poly_gcd(Poly a, Poly b);

Poly apply_automorphism(const Automorphism& phi, const Poly& f);

}  // namespace convcode
