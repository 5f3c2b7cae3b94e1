#include "convcode/statespace.hpp"

#include <numeric>

#include "convcode/errors.hpp"

namespace convcode {

StateSpace::StateSpace(Mat a_, Mat b_, Mat c_, Mat d_)
    : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)) {
    if (a.rows() != a.cols()) throw PreconditionError("A must be square");
    if (b.cols() != a.rows()) throw PreconditionError("B must have delta columns");
    if (c.rows() != a.rows()) throw PreconditionError("C must have delta rows");
    if (d.rows() != b.rows() || d.cols() != c.cols()) throw PreconditionError("D must be k x n");
    if (!same_field(a.field(), b.field()) || !same_field(a.field(), c.field()) ||
        !same_field(a.field(), d.field()))
        throw PreconditionError("system matrices live over different fields");
}

StateSpace StateSpace::block_code(Mat d) {
    FieldPtr f = d.field();  // d is moved below
    std::size_t k = d.rows(), n = d.cols();
    return StateSpace(Mat(f, 0, 0), Mat(f, k, 0), Mat(f, 0, n), std::move(d));
}

bool StateSpace::operator==(const StateSpace& o) const {
    return a == o.a && b == o.b && c == o.c && d == o.d;
}

StateSpace controller_form(const PolyMatrix& g) {
    const FieldPtr& f = g.field();
    std::vector<int> degs = row_degrees(g);
    std::size_t k = g.rows(), n = g.cols();
    std::size_t delta = static_cast<std::size_t>(std::accumulate(degs.begin(), degs.end(), 0));

    Mat a(f, delta, delta), b(f, k, delta), c(f, delta, n);
    Mat d = g.coeff(0);
    std::size_t off = 0;
    for (std::size_t i = 0; i < k; ++i) {
        std::size_t nu = static_cast<std::size_t>(degs[i]);
        if (nu == 0) continue;  // no block, zero row in B
        for (std::size_t j = 0; j + 1 < nu; ++j) a.at(off + j, off + j + 1) = 1;
        b.at(i, off) = 1;
        for (std::size_t j = 1; j <= nu; ++j)
            for (std::size_t col = 0; col < n; ++col) c.at(off + j - 1, col) = g.at(i, col).coeff(j);
        off += nu;
    }
    return StateSpace(std::move(a), std::move(b), std::move(c), std::move(d));
}

PolyMatrix reconstruct_encoder(const StateSpace& sys) {
    if (!is_nilpotent(sys.a))
        throw PreconditionError("transfer function is not polynomial: A is not nilpotent");
    std::vector<Mat> coeffs;
    coeffs.push_back(sys.d);
    Mat power = sys.b;  // B A^(i-1)
    for (std::size_t i = 1; i <= sys.delta(); ++i) {
        coeffs.push_back(power * sys.c);
        power = power * sys.a;
    }
    PolyMatrix g(sys.field(), sys.inputs(), sys.outputs());
    for (std::size_t r = 0; r < g.rows(); ++r)
        for (std::size_t col = 0; col < g.cols(); ++col) {
            std::vector<Elem> cs(coeffs.size());
            for (std::size_t t = 0; t < coeffs.size(); ++t) cs[t] = coeffs[t].at(r, col);
            g.at(r, col) = Poly(sys.field(), std::move(cs));
        }
    return g;
}

Mat controllability_matrix(const StateSpace& sys) {
    Mat out(sys.field(), 0, sys.delta());
    Mat block = sys.b;
    for (std::size_t i = 0; i < sys.delta(); ++i) {
        out = Mat::vcat(out, block);
        block = block * sys.a;
    }
    return out;
}

Mat observability_matrix(const StateSpace& sys) {
    Mat out(sys.field(), sys.delta(), 0);
    Mat block = sys.c;
    for (std::size_t i = 0; i < sys.delta(); ++i) {
        out = Mat::hcat(out, block);
        block = sys.a * block;
    }
    return out;
}

bool is_controllable(const StateSpace& sys) {
    return mat_rank(controllability_matrix(sys)) == sys.delta();
}

bool is_observable(const StateSpace& sys) {
    return mat_rank(observability_matrix(sys)) == sys.delta();
}

bool is_canonical(const StateSpace& sys) { return is_controllable(sys) && is_observable(sys); }

bool is_nilpotent(const Mat& a) {
    if (a.rows() != a.cols()) throw PreconditionError("nilpotency is about square matrices");
    return a.pow(a.rows()).is_zero();
}

SystemConditionReport system_condition(const StateSpace& sys) {
    SystemConditionReport r;
    r.nilpotent_a = is_nilpotent(sys.a);
    r.d_full_row_rank = mat_rank(sys.d) == sys.inputs();
    Mat pencil = Mat::vcat(Mat::hcat(sys.a.negated(), sys.c), Mat::hcat(sys.b.negated(), sys.d));
    r.pencil_rank_at_zero = mat_rank(pencil) == sys.delta() + sys.inputs();
    if (r.nilpotent_a) {
        // Away from lambda = 0 the pencil has full rank iff G(1/lambda)
        // does (Schur complement on the invertible block lambda I - A),
        // which over the closure asks the invariant factors of G for
        // nonzero roots: full rank everywhere iff each factor is a power
        // of z.
        std::vector<Poly> inv = invariant_factors(reconstruct_encoder(sys));
        bool ok = inv.size() == sys.inputs();
        for (const Poly& p : inv) ok = ok && p.weight() == 1;
        r.pencil_rank_elsewhere = ok;
    }
    return r;
}

bool satisfies_system_condition(const StateSpace& sys) { return system_condition(sys).holds(); }

CanonicalReduction canonical_reduction(const StateSpace& sys) {
    const FieldPtr& f = sys.field();

    // Stage 1: restrict to the reachable row space.  Scan the rows of
    // [B; BA; ...] in order and keep each one that grows the span.
    Mat k_mat = controllability_matrix(sys);
    Mat basis(f, 0, sys.delta());
    for (std::size_t i = 0; i < k_mat.rows(); ++i) {
        Mat grown = Mat::vcat(basis, k_mat.row(i));
        if (mat_rank(grown) > basis.rows()) basis = std::move(grown);
    }
    std::size_t r = basis.rows();
    auto a_c = solve_xa_eq_b(basis, basis * sys.a);
    auto b_c = solve_xa_eq_b(basis, sys.b);
    if (!a_c || !b_c) throw Error("internal: reachable space is not invariant");
    StateSpace contr(*a_c, *b_c, basis * sys.c, sys.d);

    // Stage 2: factor out the unobservable subspace.  Complete a kernel
    // basis with standard basis rows and change coordinates so that the
    // unobservable directions are the trailing ones, then drop them.
    Mat unobs = left_kernel(observability_matrix(contr));
    std::size_t m = unobs.rows();
    Mat complement(f, 0, r);
    for (std::size_t j = 0; j < r && complement.rows() < r - m; ++j) {
        Mat e(f, 1, r);
        e.at(0, j) = 1;
        Mat grown = Mat::vcat(complement, e);
        if (mat_rank(Mat::vcat(grown, unobs)) > complement.rows() + m) complement = std::move(grown);
    }
    Mat p = Mat::vcat(complement, unobs);
    Mat p_inv = mat_inverse(p);
    Mat a_tilde = p * contr.a * p_inv;
    Mat b_tilde = contr.b * p_inv;
    std::size_t dim = r - m;
    StateSpace minimal(a_tilde.block(0, 0, dim, dim), b_tilde.block(0, 0, sys.inputs(), dim),
                       complement * contr.c, sys.d);
    return CanonicalReduction{std::move(minimal), r};
}

std::size_t mcmillan_degree(const PolyMatrix& g) {
    return canonical_reduction(controller_form(g)).system.delta();
}

bool is_semi_reduced(const PolyMatrix& g) {
    return mcmillan_degree(g) == static_cast<std::size_t>(degree(g));
}

StateSpace apply_similarity(const StateSpace& sys, const Mat& s) {
    if (s.rows() != sys.delta() || s.cols() != sys.delta())
        throw PreconditionError("similarity transform must be delta x delta");
    Mat s_inv = mat_inverse(s);
    return StateSpace(s * sys.a * s_inv, sys.b * s_inv, s * sys.c, sys.d);
}

StateSpace apply_feedback(const StateSpace& sys, const FeedbackWitness& w) {
    if (w.t.rows() != sys.delta() || w.t.cols() != sys.delta())
        throw PreconditionError("feedback witness: T must be delta x delta");
    if (w.u.rows() != sys.inputs() || w.u.cols() != sys.inputs())
        throw PreconditionError("feedback witness: U must be k x k");
    if (w.m.rows() != sys.delta() || w.m.cols() != sys.inputs())
        throw PreconditionError("feedback witness: M must be delta x k");
    if (!is_invertible(w.u)) throw PreconditionError("feedback witness: U must be invertible");
    Mat t_inv = mat_inverse(w.t);
    return StateSpace(t_inv * (sys.a - w.m * sys.b) * w.t, w.u * sys.b * w.t,
                      t_inv * (sys.c - w.m * sys.d), w.u * sys.d);
}

FeedbackWitness compose_feedback(const FeedbackWitness& first, const FeedbackWitness& then) {
    // Applying (T1,U1,M1) then (T2,U2,M2) equals applying
    // (T1 T2, U2 U1, M1 + T1 M2 U1).
    return FeedbackWitness{first.t * then.t, then.u * first.u,
                           first.m + first.t * then.m * first.u};
}

FeedbackWitness inverse_feedback(const FeedbackWitness& w) {
    Mat t_inv = mat_inverse(w.t);
    Mat u_inv = mat_inverse(w.u);
    return FeedbackWitness{t_inv, u_inv, (t_inv * w.m * u_inv).negated()};
}

FeedbackWitness identity_feedback(const StateSpace& sys) {
    const FieldPtr& f = sys.field();
    return FeedbackWitness{Mat::identity(f, sys.delta()), Mat::identity(f, sys.inputs()),
                           Mat(f, sys.delta(), sys.inputs())};
}

std::optional<Mat> find_similarity(const StateSpace& from, const StateSpace& to) {
    if (from.delta() != to.delta() || from.inputs() != to.inputs() ||
        from.outputs() != to.outputs() || !same_field(from.field(), to.field()))
        return std::nullopt;
    // to = apply_similarity(from, S) forces K_to = K_from S^{-1}.
    auto s = solve_ax_eq_b(controllability_matrix(to), controllability_matrix(from));
    if (!s || !is_invertible(*s)) return std::nullopt;
    if (apply_similarity(from, *s) != to) return std::nullopt;
    return s;
}

}  // namespace convcode
