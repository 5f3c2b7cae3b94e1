#pragma once

#include <optional>

#include "convcode/polymatrix.hpp"

namespace convcode {

// Discrete-time linear system over a finite field, row-vector convention:
//
//   x_{t+1} = x_t A + u_t B        (state  x in F^delta)
//   v_t     = x_t C + u_t D        (output v in F^n, input u in F^k)
//
// so A is delta x delta, B is k x delta, C is delta x n, D is k x n.
// delta = 0 systems (block codes) are fully supported: A, B, C collapse
// to empty matrices and only D carries information.
struct StateSpace {
    StateSpace(Mat a, Mat b, Mat c, Mat d);
    static StateSpace block_code(Mat d);  // delta = 0

    const FieldPtr& field() const { return a.field(); }
    std::size_t delta() const { return a.rows(); }
    std::size_t inputs() const { return b.rows(); }
    std::size_t outputs() const { return c.cols(); }

    bool operator==(const StateSpace& o) const;
    bool operator!=(const StateSpace& o) const { return !(*this == o); }

    Mat a, b, c, d;
};

// Element (T, U, M) of the feedback group: T in GL_delta, U in GL_k,
// M in F^(delta x k).  Acts on systems via apply_feedback below; (I, I, 0)
// is the identity.
struct FeedbackWitness {
    Mat t, u, m;
};

// Shift-register realization of an encoder: one size-nu_i nilpotent shift
// block per row of positive row degree, B rows pointing at the block
// heads, C stacking the z^1..z^nu_i coefficients of the rows, D = G(0).
// Always controllable; canonical exactly when the encoder is reduced.
StateSpace controller_form(const PolyMatrix& g);

// D + sum_i B A^(i-1) C z^i.  Demands a nilpotent A, the exact condition
// for the transfer function to be polynomial in z.
PolyMatrix reconstruct_encoder(const StateSpace& sys);

// [B; BA; ...; BA^(delta-1)], shape (k delta) x delta.
Mat controllability_matrix(const StateSpace& sys);
// [C, AC, ..., A^(delta-1) C], shape delta x (n delta).
Mat observability_matrix(const StateSpace& sys);

bool is_controllable(const StateSpace& sys);
bool is_observable(const StateSpace& sys);
bool is_canonical(const StateSpace& sys);  // controllable and observable

bool is_nilpotent(const Mat& a);

// Clause-by-clause report on the rank condition characterizing canonical
// realizations of basic, semi-reduced encoders:
//   (a) A is nilpotent,
//   (b) D has full row rank,
//   (c) the Rosenbrock pencil [[lambda I - A, C], [-B, D]] has full rank
//       delta + k at lambda = 0 and at every nonzero lambda over the
//       algebraic closure.
// The nonzero-lambda clause is decided exactly by reconstructing the
// encoder and testing basicness away from z = 0 (Schur complement); that
// needs (a), so the clause is unevaluated when A fails to be nilpotent.
struct SystemConditionReport {
    bool nilpotent_a = false;
    bool d_full_row_rank = false;
    bool pencil_rank_at_zero = false;
    std::optional<bool> pencil_rank_elsewhere;

    bool holds() const {
        return nilpotent_a && d_full_row_rank && pencil_rank_at_zero &&
               pencil_rank_elsewhere.value_or(false);
    }
};
SystemConditionReport system_condition(const StateSpace& sys);
bool satisfies_system_condition(const StateSpace& sys);

// Kalman reduction to a canonical (controllable and observable) system
// with the same transfer function: restrict to the reachable row space,
// then factor out the unobservable subspace.  Deterministic pivoting.
struct CanonicalReduction {
    StateSpace system;
    std::size_t controllable_dim;  // after the first stage
};
CanonicalReduction canonical_reduction(const StateSpace& sys);

// Order of a canonical realization of G, i.e. the McMillan degree of the
// rational matrix G(1/z).  At least degree(G), with equality iff G is
// reduced.  Requires full row rank.
std::size_t mcmillan_degree(const PolyMatrix& g);

// McMillan degree equals internal degree.  Strictly weaker than reduced.
bool is_semi_reduced(const PolyMatrix& g);

// (S A S^{-1}, B S^{-1}, S C, D) for invertible S: the change of state
// coordinates x -> x S^{-1}.
StateSpace apply_similarity(const StateSpace& sys, const Mat& s);

// The feedback group action
//   (A, B, C, D) -> (T^{-1}(A - M B) T, U B T, T^{-1}(C - M D), U D).
StateSpace apply_feedback(const StateSpace& sys, const FeedbackWitness& w);

// Witness algebra: compose(first, then) applies `first`, then `then`;
// inverse undoes a witness.  Both verified by the group axioms in tests.
FeedbackWitness compose_feedback(const FeedbackWitness& first, const FeedbackWitness& then);
FeedbackWitness inverse_feedback(const FeedbackWitness& w);
FeedbackWitness identity_feedback(const StateSpace& sys);

// S with `to == apply_similarity(from, S)`, when the systems are similar.
// Unique for canonical systems.
std::optional<Mat> find_similarity(const StateSpace& from, const StateSpace& to);

}  // namespace convcode
