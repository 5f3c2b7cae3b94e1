#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <utility>

#include "convcode/caps.hpp"
#include "convcode/statespace.hpp"

namespace convcode {

// Weight enumerator: a polynomial in the counting variable W with
// nonnegative integer coefficients, stored sparsely as weight -> count.
class WeightEnum {
public:
    WeightEnum() = default;  // the zero enumerator
    static WeightEnum one() { return monomial(0); }
    static WeightEnum monomial(unsigned w, std::uint64_t count = 1);

    void add(unsigned w, std::uint64_t count = 1);
    WeightEnum& operator+=(const WeightEnum& o);
    WeightEnum operator+(const WeightEnum& o) const;
    WeightEnum operator*(const WeightEnum& o) const;  // convolution
    bool operator==(const WeightEnum& o) const { return c_ == o.c_; }
    bool operator!=(const WeightEnum& o) const { return !(*this == o); }

    bool is_zero() const { return c_.empty(); }
    // Evaluation at W = 1: the number of enumerated vectors.
    std::uint64_t total() const;
    const std::map<unsigned, std::uint64_t>& coeffs() const { return c_; }

private:
    std::map<unsigned, std::uint64_t> c_;
};

// Hamming weight of a constant vector (or matrix), and its coefficientwise
// extension to polynomial vectors.
std::size_t weight(const Mat& v);
std::size_t weight(const PolyMatrix& v);

// Weight adjacency matrix of a state space system: q^delta x q^delta over
// weight enumerators, indexed by pairs of states.  States are numbered
// lexicographically (first coordinate most significant) as in
// code_to_row.  Entries are stored sparsely; a row has at most q^k
// nonzero entries.
class Wam {
public:
    Wam(FieldPtr f, std::uint32_t delta);

    const FieldPtr& field() const { return f_; }
    std::uint32_t delta() const { return delta_; }
    std::uint64_t states() const { return states_; }

    // Zero enumerator reference when the entry is absent.
    const WeightEnum& entry(std::uint64_t x, std::uint64_t y) const;
    // Accumulate; zero summands are not stored.
    void add(std::uint64_t x, std::uint64_t y, const WeightEnum& e);

    const std::map<std::pair<std::uint64_t, std::uint64_t>, WeightEnum>& entries() const {
        return e_;
    }

    bool operator==(const Wam& o) const;
    bool operator!=(const Wam& o) const { return !(*this == o); }

private:
    FieldPtr f_;
    std::uint32_t delta_ = 0;
    std::uint64_t states_ = 1;
    std::map<std::pair<std::uint64_t, std::uint64_t>, WeightEnum> e_;
};

// Enumerator of the row space {uG : u in F^k} of a full-row-rank constant
// matrix; the weight adjacency matrix of a block code collapses to it.
WeightEnum block_weight_enumerator(const Mat& g);
WeightEnum block_weight_enumerator(const PolyMatrix& g);  // must be constant

// Lambda_{X,Y} = we{XC + uD | u in F^k : Y = XA + uB} for every state
// pair.  Works for any well-formed system; canonicity is the caller's
// business.  Throws CapExceededError when q^delta > max_states.
Wam compute_wam(const StateSpace& sys, std::uint64_t max_states = kDefaultMaxStates);

// The relabeled matrix M' with M'_{X,Y} = M_{phi(X)T, phi(Y)T}.
// Composition: relabel(relabel(M,T,phi), S, psi) = relabel(M, phi(S)T, phi o psi).
Wam relabel_wam(const Wam& lam, const Mat& t, const Automorphism& phi);

// Exhaustive decision of the state-isomorphism x automorphism relation:
// equivalent iff b = relabel_wam(a, T, phi) for some T in GL_delta, phi in
// Aut(F).  The witness is the first hit in a fixed order: the pair
// (I, id) is probed first, then phi ascending (identity first) with T in
// GL enumeration order.  search_size counts probed pairs.
struct WamEquivalence {
    bool equivalent = false;
    std::optional<Mat> t;
    std::optional<Automorphism> phi;
    std::uint64_t search_size = 0;
};
WamEquivalence wam_equivalent(const Wam& a, const Wam& b, bool allow_automorphisms = true,
                              std::uint64_t search_cap = kDefaultSearchCap);

// Entry (Lambda^N)_{0,0} of the formal matrix power: the weight
// enumerator of all length-N input sequences driving the zero state back
// to zero.
WeightEnum truncated_enumerator(const Wam& lam, unsigned n);

}  // namespace convcode
