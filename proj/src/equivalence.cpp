#include "convcode/equivalence.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <random>
#include <sstream>
#include <utility>

#include "convcode/errors.hpp"
#include "convcode/sampling.hpp"

namespace convcode {

namespace {

// s * n! * (q-1)^n, or nullopt on overflow.
std::optional<std::uint64_t> direct_search_space(std::uint64_t s, std::uint64_t n,
                                                 std::uint64_t q) {
    std::uint64_t total = s;
    auto mul_into = [&total](std::uint64_t x) {
        if (x != 0 && total > std::numeric_limits<std::uint64_t>::max() / x) {
            return false;
        }
        total *= x;
        return true;
    };
    for (std::uint64_t i = 2; i <= n; ++i) {
        if (!mul_into(i)) {
            return std::nullopt;
        }
    }
    for (std::uint64_t i = 0; i < n; ++i) {
        if (!mul_into(q - 1)) {
            return std::nullopt;
        }
    }
    return total;
}

void check_code_pair(const PolyMatrix& g, const PolyMatrix& gp) {
    if (!same_field(g.field(), gp.field())) {
        throw PreconditionError("monomial equivalence is only defined over a common field");
    }
    if (g.rows() != gp.rows() || g.cols() != gp.cols()) {
        throw PreconditionError("monomial equivalence needs encoders of equal shape");
    }
    if (!is_basic(g) || !is_basic(gp)) {
        throw PreconditionError("monomial equivalence requires basic encoders");
    }
}

// Advances a vector over the nonzero field elements 1..q-1, rightmost
// position fastest; false once the all-ones start point would recur.
bool advance_diagonal(std::vector<Elem>& diag, std::uint32_t q) {
    for (std::size_t pos = diag.size(); pos > 0; --pos) {
        if (diag[pos - 1] + 1 < q) {
            ++diag[pos - 1];
            return true;
        }
        diag[pos - 1] = 1;
    }
    return false;
}

PolyMatrix sort_rows_descending(const PolyMatrix& g) {
    const std::vector<int> degs = row_degrees(g);
    std::vector<std::size_t> order(g.rows());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&degs](std::size_t a, std::size_t b) { return degs[a] > degs[b]; });
    PolyMatrix out(g.field(), g.rows(), g.cols());
    for (std::size_t i = 0; i < g.rows(); ++i) {
        for (std::size_t j = 0; j < g.cols(); ++j) {
            out.at(i, j) = g.at(order[i], j);
        }
    }
    return out;
}

// Feedback witness moving sys, a canonical realization of g, onto target,
// the controller form of hs, where g and hs generate the same module.
// Follows the constructive proof: with W the unimodular matrix satisfying
// g = W hs, put U = W(0)^-1; then WU - I has zero constant term and the
// block equations B A^(i-1) M = coeff_i(WU - I) are consistent, making
// (I, U, M) carry sys onto a canonical realization of hs, which is then
// similar to the controller form.
FeedbackWitness route_to_controller_form(const StateSpace& sys, const PolyMatrix& g,
                                         const PolyMatrix& hs, const StateSpace& target) {
    const FieldPtr& f = sys.field();
    const std::size_t delta = sys.delta();
    const std::size_t k = sys.inputs();
    const PolyMatrix w = g * right_inverse(hs);
    const Mat u = mat_inverse(w.coeff(0));
    const PolyMatrix wu = w * PolyMatrix::from_constant(u);
    Mat stacked(f, k * delta, k);
    for (std::size_t i = 1; i <= delta; ++i) {
        const Mat ei = wu.coeff(i);
        for (std::size_t a = 0; a < k; ++a) {
            for (std::size_t b = 0; b < k; ++b) {
                stacked.at((i - 1) * k + a, b) = ei.at(a, b);
            }
        }
    }
    const std::optional<Mat> m = solve_ax_eq_b(controllability_matrix(sys), stacked);
    if (!m) {
        throw Error("internal: feedback coefficient equations are inconsistent");
    }
    const FeedbackWitness shift{Mat::identity(f, delta), u, *m};
    const StateSpace moved = apply_feedback(sys, shift);
    const std::optional<Mat> s = find_similarity(moved, target);
    if (!s) {
        throw Error("internal: canonical realizations of the shared encoder are not similar");
    }
    return compose_feedback(shift,
                            FeedbackWitness{mat_inverse(*s), Mat::identity(f, k), Mat(f, delta, k)});
}

}  // namespace

bool is_permutation_matrix(const Mat& m) {
    if (m.rows() != m.cols()) {
        return false;
    }
    std::vector<bool> column_hit(m.cols(), false);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        std::size_t ones = 0;
        std::size_t where = 0;
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (m.at(i, j) == 1) {
                ++ones;
                where = j;
            } else if (m.at(i, j) != 0) {
                return false;
            }
        }
        if (ones != 1 || column_hit[where]) {
            return false;
        }
        column_hit[where] = true;
    }
    return true;
}

bool is_invertible_diagonal(const Mat& m) {
    if (m.rows() != m.cols()) {
        return false;
    }
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (i == j ? m.at(i, j) == 0 : m.at(i, j) != 0) {
                return false;
            }
        }
    }
    return true;
}

void MonomialTransform::validate() const {
    if (!same_field(p.field(), r.field()) || !same_field(p.field(), phi.field)) {
        throw PreconditionError("monomial transform parts live over different fields");
    }
    if (p.rows() != r.rows()) {
        throw PreconditionError("monomial transform parts have mismatched sizes");
    }
    if (!is_permutation_matrix(p)) {
        throw PreconditionError("monomial transform needs a permutation matrix");
    }
    if (!is_invertible_diagonal(r)) {
        throw PreconditionError("monomial transform needs an invertible diagonal matrix");
    }
}

PolyMatrix MonomialTransform::apply(const PolyMatrix& g) const {
    validate();
    if (!same_field(g.field(), p.field())) {
        throw PreconditionError("monomial transform and encoder live over different fields");
    }
    if (g.cols() != p.rows()) {
        throw PreconditionError("monomial transform size must match the encoder length");
    }
    return apply_automorphism(phi, g) * PolyMatrix::from_constant(p * r);
}

MonomialTransform MonomialTransform::inverse() const {
    validate();
    const FieldPtr& f = p.field();
    const std::size_t n = p.rows();
    const Automorphism phi_inv = phi.inverse();
    Mat d(f, n, n);
    for (std::size_t i = 0; i < n; ++i) {
        d.at(i, i) = phi_inv(f->inv(r.at(i, i)));
    }
    const Mat p_inv = p.transposed();
    return MonomialTransform{phi_inv, p_inv, p * d * p_inv};
}

MonomialTransform MonomialTransform::after(const MonomialTransform& inner) const {
    validate();
    inner.validate();
    if (!same_field(p.field(), inner.p.field()) || p.rows() != inner.p.rows()) {
        throw PreconditionError("cannot compose monomial transforms of different shapes");
    }
    const Mat p_inv = p.transposed();
    return MonomialTransform{phi.after(inner.phi), inner.p * p,
                             p_inv * apply_automorphism(phi, inner.r) * p * r};
}

MonomialTransform identity_transform(const FieldPtr& f, std::size_t n) {
    return MonomialTransform{identity_automorphism(f), Mat::identity(f, n),
                             Mat::identity(f, n)};
}

EquivalenceReport monomial_equivalent_direct(const PolyMatrix& g, const PolyMatrix& gp,
                                             bool allow_automorphisms,
                                             std::uint64_t search_cap) {
    check_code_pair(g, gp);
    const FieldPtr& f = g.field();
    const std::size_t n = g.cols();
    std::vector<Automorphism> autos;
    if (allow_automorphisms) {
        autos = automorphisms(f);
    } else {
        autos.push_back(identity_automorphism(f));
    }
    const std::optional<std::uint64_t> space = direct_search_space(autos.size(), n, f->q());
    if (!space || *space > search_cap) {
        throw CapExceededError("monomial search space exceeds the candidate cap");
    }

    EquivalenceReport rep;
    rep.method = EquivMethod::direct;
    const PolyMatrix target = popov_form(gp);
    std::vector<std::size_t> sigma(n);
    std::vector<std::size_t> sigma_inv(n);
    for (const Automorphism& phi : autos) {
        const PolyMatrix gphi = apply_automorphism(phi, g);
        std::iota(sigma.begin(), sigma.end(), std::size_t{0});
        do {
            for (std::size_t i = 0; i < n; ++i) {
                sigma_inv[sigma[i]] = i;
            }
            std::vector<Elem> diag(n, 1);
            do {
                // Candidate phi(g) P R: column j is column sigma_inv[j] of
                // phi(g) scaled by diag[j].
                PolyMatrix cand(f, g.rows(), n);
                for (std::size_t a = 0; a < g.rows(); ++a) {
                    for (std::size_t j = 0; j < n; ++j) {
                        cand.at(a, j) = gphi.at(a, sigma_inv[j]).scaled(diag[j]);
                    }
                }
                ++rep.search_size;
                if (popov_form(cand) == target) {
                    Mat p(f, n, n);
                    Mat r(f, n, n);
                    for (std::size_t i = 0; i < n; ++i) {
                        p.at(i, sigma[i]) = 1;
                        r.at(i, i) = diag[i];
                    }
                    rep.verdict = true;
                    rep.transform = MonomialTransform{phi, std::move(p), std::move(r)};
                    return rep;
                }
            } while (advance_diagonal(diag, f->q()));
        } while (std::next_permutation(sigma.begin(), sigma.end()));
    }
    return rep;
}

EquivalenceReport monomial_equivalent_wam(const PolyMatrix& g, const PolyMatrix& gp,
                                          bool allow_automorphisms, std::uint64_t max_states,
                                          std::uint64_t search_cap) {
    check_code_pair(g, gp);
    if (!is_reduced(g) || !is_reduced(gp)) {
        throw PreconditionError("the weight adjacency criterion requires reduced encoders");
    }
    for (const int nu : forney_indices(g)) {
        if (nu == 0) {
            throw HypothesisError(
                "zero Forney index: the weight adjacency criterion does not decide monomial "
                "equivalence for this code");
        }
    }
    EquivalenceReport rep;
    rep.method = EquivMethod::wam;
    if (degree(g) != degree(gp)) {
        return rep;  // state spaces differ in size, the codes cannot be equivalent
    }
    const Wam lam = compute_wam(controller_form(g), max_states);
    const Wam lam_p = compute_wam(controller_form(gp), max_states);
    WamEquivalence found = wam_equivalent(lam, lam_p, allow_automorphisms, search_cap);
    rep.verdict = found.equivalent;
    rep.t = std::move(found.t);
    rep.phi = std::move(found.phi);
    rep.search_size = found.search_size;
    return rep;
}

FeedbackEquivalence feedback_equivalent(const StateSpace& first, const StateSpace& second,
                                        bool semi_reduced) {
    if (!same_field(first.field(), second.field())) {
        throw PreconditionError("feedback equivalence is only defined over a common field");
    }
    if (first.inputs() != second.inputs() || first.outputs() != second.outputs() ||
        first.delta() != second.delta()) {
        throw PreconditionError("feedback equivalence needs systems of equal dimensions");
    }
    if (!is_canonical(first) || !is_canonical(second)) {
        throw PreconditionError("feedback equivalence requires canonical realizations");
    }
    if (!satisfies_system_condition(first) || !satisfies_system_condition(second)) {
        throw PreconditionError(
            "feedback equivalence requires realizations satisfying the rank condition");
    }
    const PolyMatrix ga = reconstruct_encoder(first);
    const PolyMatrix gb = reconstruct_encoder(second);
    const auto acceptable = [semi_reduced](const PolyMatrix& g) {
        return semi_reduced ? is_semi_reduced(g) : is_reduced(g);
    };
    if (!acceptable(ga) || !acceptable(gb)) {
        throw PreconditionError(semi_reduced
                                    ? "feedback equivalence requires semi-reduced encoders"
                                    : "feedback equivalence requires reduced encoders");
    }
    if (!code_equal(ga, gb)) {
        return {};
    }
    const PolyMatrix hs = sort_rows_descending(popov_form(ga));
    const StateSpace target = controller_form(hs);
    const FeedbackWitness leg_a = route_to_controller_form(first, ga, hs, target);
    const FeedbackWitness leg_b = route_to_controller_form(second, gb, hs, target);
    FeedbackWitness w = compose_feedback(leg_a, inverse_feedback(leg_b));
    if (apply_feedback(first, w) != second) {
        throw Error("internal: feedback witness failed verification");
    }
    return {true, std::move(w)};
}

CrossValidationReport cross_validate_main_theorem(const CrossValidationSpec& spec) {
    if (!spec.field) {
        throw PreconditionError("cross-validation needs a field");
    }
    if (spec.row_degrees.size() != spec.k) {
        throw PreconditionError("cross-validation needs one row degree per encoder row");
    }
    for (const int nu : spec.row_degrees) {
        if (nu < 1) {
            throw PreconditionError(
                "cross-validation requires strictly positive row degrees; the weight "
                "adjacency criterion does not apply otherwise");
        }
    }
    std::mt19937_64 rng(spec.seed);
    CrossValidationReport rep;
    rep.pairs = spec.pairs;
    for (std::size_t i = 0; i < spec.pairs; ++i) {
        const bool planted = (i % 2 == 0);
        const PolyMatrix g =
            random_reduced_basic(rng, spec.field, spec.k, spec.n, spec.row_degrees);
        const PolyMatrix gp =
            planted ? popov_form(random_monomial(rng, spec.field, spec.n,
                                                 spec.allow_automorphisms)
                                     .apply(g))
                    : random_reduced_basic(rng, spec.field, spec.k, spec.n, spec.row_degrees);
        if (planted) {
            ++rep.planted;
        }
        const EquivalenceReport direct =
            monomial_equivalent_direct(g, gp, spec.allow_automorphisms, spec.search_cap);
        const EquivalenceReport via_wam = monomial_equivalent_wam(
            g, gp, spec.allow_automorphisms, spec.max_states, spec.search_cap);
        if (direct.verdict) {
            ++rep.equivalent;
        }
        const bool disagree = direct.verdict != via_wam.verdict;
        const bool rejected = planted && !(direct.verdict && via_wam.verdict);
        if (disagree) {
            ++rep.disagreements;
        }
        if (rejected) {
            ++rep.planted_rejections;
        }
        if (disagree || rejected) {
            std::ostringstream os;
            os << "pair " << i << (planted ? " (planted)" : " (independent)")
               << ": direct=" << (direct.verdict ? "true" : "false")
               << " wam=" << (via_wam.verdict ? "true" : "false");
            rep.notes.push_back(os.str());
        }
    }
    return rep;
}

}  // namespace convcode
