#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "convcode/caps.hpp"
#include "convcode/field.hpp"
#include "convcode/matrix.hpp"
#include "convcode/polymatrix.hpp"
#include "convcode/statespace.hpp"
#include "convcode/wam.hpp"

namespace convcode {

// Code-level monomial transform v -> phi(v) P R: a field automorphism
// applied entrywise, a column permutation P and an invertible diagonal
// column scaling R.  These form a group; apply/inverse/after implement
// the action and the group operations.
struct MonomialTransform {
    Automorphism phi;
    Mat p;  // n x n permutation matrix
    Mat r;  // n x n invertible diagonal matrix

    // phi(g) * p * r.  Validates the transform first.
    PolyMatrix apply(const PolyMatrix& g) const;

    // The transform undoing this one: inverse().apply(apply(g)) == g.
    MonomialTransform inverse() const;

    // Composition acting as this->apply(inner.apply(g)).
    MonomialTransform after(const MonomialTransform& inner) const;

    // Throws PreconditionError unless p is a permutation matrix and r an
    // invertible diagonal matrix over the same field as phi.
    void validate() const;
};

MonomialTransform identity_transform(const FieldPtr& f, std::size_t n);

bool is_permutation_matrix(const Mat& m);
bool is_invertible_diagonal(const Mat& m);

enum class EquivMethod { direct, wam };

// Outcome of a monomial-equivalence decision.  When verdict is true the
// witness re-verifies: for the direct method code_equal(transform->apply(G),
// G') holds; for the wam method relabel_wam(Lambda, *t, *phi) == Lambda'.
struct EquivalenceReport {
    bool verdict = false;
    EquivMethod method = EquivMethod::direct;
    std::optional<MonomialTransform> transform;  // direct-method witness
    std::optional<Mat> t;                        // wam-method witness
    std::optional<Automorphism> phi;             // wam-method witness
    std::uint64_t search_size = 0;
};

// Exhaustive search for a monomial transform with code_equal(phi(G)PR, G').
// Popov comparison absorbs the left-unimodular encoder freedom, so only
// the s * n! * (q-1)^n transforms are enumerated, in a fixed order:
// automorphisms (identity first), then permutations in lexicographic
// order from the identity, then diagonal scalings by odometer.  Both
// inputs must be basic and of matching shape over the same field.
// Throws CapExceededError when the search space exceeds search_cap.
EquivalenceReport monomial_equivalent_direct(const PolyMatrix& g, const PolyMatrix& gp,
                                             bool allow_automorphisms = true,
                                             std::uint64_t search_cap = kDefaultSearchCap);

// Decides monomial equivalence through the weight adjacency matrices of
// the controller forms.  Sound for basic reduced encoders whose Forney
// indices are all positive; refuses with HypothesisError when G has a
// zero Forney index, where the criterion provably does not apply.
// Unequal internal degrees yield an immediate false verdict (the state
// spaces differ in size).
EquivalenceReport monomial_equivalent_wam(const PolyMatrix& g, const PolyMatrix& gp,
                                          bool allow_automorphisms = true,
                                          std::uint64_t max_states = kDefaultMaxStates,
                                          std::uint64_t search_cap = kDefaultSearchCap);

// Outcome of a feedback-group equivalence decision; on a true verdict the
// witness satisfies apply_feedback(first, *witness) == second.
struct FeedbackEquivalence {
    bool equivalent = false;
    std::optional<FeedbackWitness> witness;
};

// Decides whether two canonical realizations satisfying the rank
// condition are related by the full state feedback group: true exactly
// when the reconstructed encoders generate the same code.  Strictly
// requires reduced reconstructed encoders unless semi_reduced is set, in
// which case is_semi_reduced suffices.  On a true verdict a witness
// (T, U, M) is constructed by routing both systems to the controller
// form of the shared Popov encoder (rows sorted by descending degree):
// per system, U = W(0)^-1 for the unimodular W with G = W * H, M solves
// the coefficient-block equations of WU - I against the controllability
// matrix, and the final similarity is recovered with find_similarity.
// The witness is verified by apply_feedback before it is returned.
FeedbackEquivalence feedback_equivalent(const StateSpace& first, const StateSpace& second,
                                        bool semi_reduced = false);

// Sampling bounds for cross-validating the two monomial-equivalence
// decision procedures against each other.
struct CrossValidationSpec {
    FieldPtr field;
    std::size_t k = 2;
    std::size_t n = 4;
    std::vector<int> row_degrees = {1, 1};  // sampled profile; all must be >= 1
    std::size_t pairs = 100;                // half planted, half independent
    std::uint64_t seed = 1;
    bool allow_automorphisms = true;
    std::uint64_t max_states = kDefaultMaxStates;
    std::uint64_t search_cap = kDefaultSearchCap;
};

struct CrossValidationReport {
    std::size_t pairs = 0;
    std::size_t planted = 0;            // pairs related by a planted transform
    std::size_t equivalent = 0;         // pairs the direct method accepted
    std::size_t disagreements = 0;      // direct and wam verdicts differ
    std::size_t planted_rejections = 0; // planted pairs either method refused to accept
    std::vector<std::string> notes;     // one human-readable line per failure
};

// Samples encoder pairs (even indices planted monomially equivalent, odd
// indices independent), runs both decision procedures on each pair and
// tallies the agreements.  A disagreement would falsify one of the two
// implementations, so a clean report has disagreements == 0 and
// planted_rejections == 0.
CrossValidationReport cross_validate_main_theorem(const CrossValidationSpec& spec);

}  // namespace convcode
