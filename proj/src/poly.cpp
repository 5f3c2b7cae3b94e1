#include "convcode/poly.hpp"

#include <algorithm>

#include "convcode/errors.hpp"

namespace convcode {

Poly::Poly(FieldPtr f, std::vector<Elem> coeffs) : f_(std::move(f)), c_(std::move(coeffs)) {
    for (Elem x : c_)
        if (x >= f_->q()) throw PreconditionError("polynomial coefficient out of field range");
    trim();
}

Poly Poly::constant(FieldPtr f, Elem c) { return Poly(std::move(f), std::vector<Elem>{c}); }

Poly Poly::z(FieldPtr f) { return Poly(std::move(f), std::vector<Elem>{0, 1}); }

void Poly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

std::optional<int> Poly::degree() const {
    if (c_.empty()) return std::nullopt;
    return static_cast<int>(c_.size()) - 1;
}

int Poly::degree_or(int if_zero) const { return c_.empty() ? if_zero : static_cast<int>(c_.size()) - 1; }

Elem Poly::leading_coeff() const {
    if (c_.empty()) throw PreconditionError("the zero polynomial has no leading coefficient");
    return c_.back();
}

Poly Poly::operator+(const Poly& o) const {
    if (!same_field(f_, o.f_)) throw PreconditionError("polynomial field mismatch");
    Poly r(f_);
    r.c_.resize(std::max(c_.size(), o.c_.size()), 0);
    for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = f_->add(coeff(i), o.coeff(i));
    r.trim();
    return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + o.negated(); }

Poly Poly::operator*(const Poly& o) const {
    if (!same_field(f_, o.f_)) throw PreconditionError("polynomial field mismatch");
    if (is_zero() || o.is_zero()) return Poly(f_);
    Poly r(f_);
    r.c_.assign(c_.size() + o.c_.size() - 1, 0);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j)
            r.c_[i + j] = f_->add(r.c_[i + j], f_->mul(c_[i], o.c_[j]));
    }
    r.trim();
    return r;
}

Poly Poly::negated() const {
    Poly r = *this;
    for (Elem& x : r.c_) x = f_->neg(x);
    return r;
}

Poly Poly::scaled(Elem c) const {
    Poly r = *this;
    for (Elem& x : r.c_) x = f_->mul(x, c);
    r.trim();
    return r;
}

Poly Poly::shifted(int e) const {
    if (e < 0) throw PreconditionError("negative shift of a polynomial");
    if (is_zero()) return *this;
    Poly r(f_);
    r.c_.assign(c_.size() + e, 0);
    std::copy(c_.begin(), c_.end(), r.c_.begin() + e);
    return r;
}

Poly Poly::monic() const { return scaled(f_->inv(leading_coeff())); }

bool Poly::operator==(const Poly& o) const { return same_field(f_, o.f_) && c_ == o.c_; }

Elem Poly::eval(Elem x) const {
    Elem acc = 0;
    for (std::size_t i = c_.size(); i-- > 0;) acc = f_->add(f_->mul(acc, x), c_[i]);
    return acc;
}

unsigned Poly::weight() const {
    return static_cast<unsigned>(std::count_if(c_.begin(), c_.end(), [](Elem x) { return x != 0; }));
}

PolyDivRem Poly::divrem(const Poly& divisor) const {
    if (divisor.is_zero()) throw PreconditionError("polynomial division by zero");
    Poly q(f_), r = *this;
    Elem lead_inv = f_->inv(divisor.leading_coeff());
    int ddeg = *divisor.degree();
    q.c_.assign(r.c_.size(), 0);
    while (!r.is_zero() && r.degree_or(-1) >= ddeg) {
        int shift = *r.degree() - ddeg;
        Elem factor = f_->mul(r.leading_coeff(), lead_inv);
        q.c_[shift] = factor;
        r = r - divisor.scaled(factor).shifted(shift);
    }
    q.trim();
    return {q, r};
}

Poly poly_gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = a.divrem(b).remainder;
        a = std::move(b);
        b = std::move(r);
    }
    return a.is_zero() ? a : a.monic();
}

Poly apply_automorphism(const Automorphism& phi, const Poly& f) {
    std::vector<Elem> c = f.coeffs();
    for (Elem& x : c) x = phi(x);
    return Poly(f.field(), std::move(c));
}

}  // namespace convcode
