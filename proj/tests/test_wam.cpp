#include <random>

#include "convcode/errors.hpp"
#include "convcode/wam.hpp"
#include "doctest.h"
#include "helpers.hpp"

using namespace convcode;
using testutil::mk;
using testutil::pmat;
using testutil::random_invertible;
using testutil::random_mat;

namespace {

PolyMatrix encoder_2x4(const FieldPtr& f2) {
    return pmat(f2, {{{0, 1}, {1, 0, 1}, {1, 1}, {0, 1, 1}},
                     {{1}, {}, {1}, {1}}});
}

PolyMatrix encoder_2x3(const FieldPtr& f2) {
    return pmat(f2, {{{1}, {0, 1}, {1, 1}}, {{}, {1}, {0, 1}}});
}

Mat block_3x6(const FieldPtr& f2, bool second) {
    if (second) return mk(f2, {{1, 1, 0, 0, 0, 0}, {1, 0, 1, 0, 0, 0}, {1, 1, 1, 1, 1, 1}});
    return mk(f2, {{1, 1, 0, 0, 0, 0}, {0, 0, 1, 1, 0, 0}, {1, 1, 1, 1, 1, 1}});
}

WeightEnum we(std::initializer_list<std::pair<unsigned, std::uint64_t>> terms) {
    WeightEnum e;
    for (auto [w, n] : terms) e.add(w, n);
    return e;
}

// Exhaustive enumeration of all length-n input sequences that drive the
// zero state back to zero, as an independent check on the matrix power.
WeightEnum brute_zero_paths(const StateSpace& sys, unsigned n) {
    const FieldPtr& f = sys.field();
    std::uint64_t q_k = 1;
    for (std::size_t i = 0; i < sys.inputs(); ++i) q_k *= f->q();
    WeightEnum acc;
    std::vector<std::uint64_t> seq(n, 0);
    for (;;) {
        Mat x(f, 1, sys.delta());
        std::size_t w = 0;
        for (unsigned t = 0; t < n; ++t) {
            Mat u = code_to_row(f, static_cast<std::uint32_t>(sys.inputs()), seq[t]);
            w += weight(x * sys.c + u * sys.d);
            x = x * sys.a + u * sys.b;
        }
        if (x.is_zero()) acc.add(static_cast<unsigned>(w));
        std::size_t t = 0;
        while (t < n && ++seq[t] == q_k) seq[t++] = 0;
        if (t == n) break;
    }
    return acc;
}

}  // namespace

TEST_CASE("weight enumerator arithmetic") {
    WeightEnum a = we({{0, 1}, {3, 1}});
    WeightEnum b = we({{2, 1}, {3, 1}});
    CHECK(a + b == we({{0, 1}, {2, 1}, {3, 2}}));
    CHECK(a * b == we({{2, 1}, {3, 1}, {5, 1}, {6, 1}}));
    CHECK(WeightEnum::one() * a == a);
    CHECK(WeightEnum().is_zero());
    CHECK((WeightEnum() + a) == a);
    CHECK(a.total() == 2);
    CHECK(we({{2, 3}}).total() == 3);
}

TEST_CASE("hamming weight of constant and polynomial vectors") {
    auto f = Field::make(2);
    CHECK(weight(mk(f, {{1, 1, 0, 0, 0, 0}})) == 2);
    CHECK(weight(mk(f, {{0, 0, 1, 1, 1, 1}})) == 4);
    CHECK(weight(pmat(f, {{{1}, {0, 1}, {1, 1}}})) == 4);
    CHECK(weight(Mat(f, 1, 5)) == 0);
}

TEST_CASE("block weight enumerators") {
    auto f = Field::make(2);
    WeightEnum expected = we({{0, 1}, {2, 3}, {4, 3}, {6, 1}});
    CHECK(block_weight_enumerator(block_3x6(f, false)) == expected);
    CHECK(block_weight_enumerator(block_3x6(f, true)) == expected);
    CHECK(block_weight_enumerator(Mat::identity(f, 2)) == we({{0, 1}, {1, 2}, {2, 1}}));
    CHECK_THROWS_AS(block_weight_enumerator(mk(f, {{1, 1}, {1, 1}})), PreconditionError);
    CHECK_THROWS_AS(block_weight_enumerator(pmat(f, {{{1}, {0, 1}}})), PreconditionError);
    CHECK(block_weight_enumerator(PolyMatrix::from_constant(block_3x6(f, false))) == expected);
}

TEST_CASE("weight adjacency matrix of the rate 2/4 controller form") {
    auto f = Field::make(2);
    Wam lam = compute_wam(controller_form(encoder_2x4(f)));
    CHECK(lam.delta() == 2);
    CHECK(lam.states() == 4);
    CHECK(lam.entries().size() == 8);
    CHECK(lam.entry(0, 0) == we({{0, 1}, {3, 1}}));
    CHECK(lam.entry(0, 2) == we({{2, 1}, {3, 1}}));
    CHECK(lam.entry(1, 0) == we({{2, 1}, {3, 1}}));
    CHECK(lam.entry(1, 2) == we({{1, 1}, {2, 1}}));
    CHECK(lam.entry(2, 1) == we({{0, 1}, {3, 1}}));
    CHECK(lam.entry(2, 3) == we({{2, 1}, {3, 1}}));
    CHECK(lam.entry(3, 1) == we({{2, 1}, {3, 1}}));
    CHECK(lam.entry(3, 3) == we({{1, 1}, {2, 1}}));
    CHECK(lam.entry(0, 1).is_zero());
    CHECK(lam.entry(0, 3).is_zero());

    // Row mass: every input is admissible exactly once per source state.
    for (std::uint64_t x = 0; x < 4; ++x) {
        std::uint64_t mass = 0;
        for (std::uint64_t y = 0; y < 4; ++y) mass += lam.entry(x, y).total();
        CHECK(mass == 4);
    }
    CHECK(lam.entry(0, 0).coeffs().count(0) == 1);
}

TEST_CASE("indices with value zero leave room for two inputs per transition") {
    auto f = Field::make(2);
    PolyMatrix g = pmat(f, {{{1}, {1}, {0, 1}, {0, 1}, {}, {}},
                            {{1}, {1}, {1}, {1}, {1}, {1}}});
    PolyMatrix gbar = pmat(f, {{{1, 1}, {1}, {0, 1}, {}, {}, {}},
                               {{1}, {1}, {1}, {1}, {1}, {1}}});
    Wam expected(f, 1);
    expected.add(0, 0, we({{0, 1}, {6, 1}}));
    expected.add(0, 1, we({{2, 1}, {4, 1}}));
    expected.add(1, 0, we({{2, 1}, {4, 1}}));
    expected.add(1, 1, we({{2, 1}, {4, 1}}));
    CHECK(compute_wam(controller_form(g)) == expected);
    CHECK(compute_wam(controller_form(gbar)) == expected);
}

TEST_CASE("full-row-rank B forces monomial entries") {
    auto f = Field::make(2);
    StateSpace sys = controller_form(encoder_2x3(f));
    REQUIRE(mat_rank(sys.b) == sys.inputs());
    Wam lam = compute_wam(sys);
    for (const auto& [key, e] : lam.entries()) CHECK(e.coeffs().size() == 1);
}

TEST_CASE("order-zero systems collapse to the block enumerator") {
    auto f = Field::make(2);
    Wam lam = compute_wam(StateSpace::block_code(block_3x6(f, false)));
    CHECK(lam.delta() == 0);
    CHECK(lam.states() == 1);
    CHECK(lam.entry(0, 0) == block_weight_enumerator(block_3x6(f, false)));
}

TEST_CASE("state space cap is enforced") {
    auto f = Field::make(2);
    StateSpace sys = controller_form(encoder_2x4(f));
    CHECK_THROWS_AS(compute_wam(sys, 3), CapExceededError);
}

TEST_CASE("relabeling: identity, composition, similarity") {
    auto f4 = Field::make(2, 2);
    std::mt19937_64 rng(41);
    // A small reduced encoder over GF(4) with delta = 2.
    PolyMatrix g = pmat(f4, {{{1}, {0, 2}, {1, 1}}, {{}, {1}, {0, 3}}});
    REQUIRE(is_reduced(g));
    StateSpace sys = controller_form(g);
    Wam lam = compute_wam(sys);
    Automorphism id = identity_automorphism(f4);
    Automorphism frob = automorphisms(f4).at(1);

    CHECK(relabel_wam(lam, Mat::identity(f4, 2), id) == lam);

    for (int t = 0; t < 10; ++t) {
        Mat s = random_invertible(rng, f4, 2), u = random_invertible(rng, f4, 2);
        // Composition law.
        for (const Automorphism& phi : {id, frob})
            for (const Automorphism& psi : {id, frob})
                CHECK(relabel_wam(relabel_wam(lam, s, phi), u, psi) ==
                      relabel_wam(lam, apply_automorphism(phi, u) * s, phi.after(psi)));
        // Similarity shows up as pure relabeling.
        CHECK(compute_wam(apply_similarity(sys, s)) == relabel_wam(lam, s, id));
    }

    CHECK_THROWS_AS(relabel_wam(lam, Mat(f4, 2, 2), id), PreconditionError);
    CHECK_THROWS_AS(relabel_wam(lam, Mat::identity(f4, 3), id), PreconditionError);
}

TEST_CASE("monomial coordinate changes relabel by the automorphism alone") {
    auto f4 = Field::make(2, 2);
    std::mt19937_64 rng(42);
    PolyMatrix g = pmat(f4, {{{1}, {0, 2}, {1, 1}}, {{}, {1}, {0, 3}}});
    StateSpace sys = controller_form(g);
    Wam lam = compute_wam(sys);
    for (const Automorphism& phi : automorphisms(f4)) {
        for (int t = 0; t < 6; ++t) {
            // Random permutation times invertible diagonal.
            Mat p(f4, 3, 3);
            std::vector<std::size_t> perm{0, 1, 2};
            for (std::size_t i = 2; i > 0; --i) std::swap(perm[i], perm[rng() % (i + 1)]);
            for (std::size_t i = 0; i < 3; ++i) p.at(i, perm[i]) = 1;
            Mat r(f4, 3, 3);
            for (std::size_t i = 0; i < 3; ++i)
                r.at(i, i) = 1 + static_cast<Elem>(rng() % 3);
            Mat pr = p * r;
            StateSpace moved(apply_automorphism(phi, sys.a), apply_automorphism(phi, sys.b),
                             apply_automorphism(phi, sys.c) * pr,
                             apply_automorphism(phi, sys.d) * pr);
            CHECK(lam == relabel_wam(compute_wam(moved), Mat::identity(f4, 2), phi));
        }
    }
}

TEST_CASE("wam equivalence search") {
    auto f = Field::make(2);
    Wam lam = compute_wam(controller_form(encoder_2x4(f)));

    WamEquivalence self = wam_equivalent(lam, lam);
    CHECK(self.equivalent);
    CHECK(self.search_size == 1);
    CHECK(*self.t == Mat::identity(f, 2));
    CHECK(self.phi->is_identity());

    // Two canonical minimal realizations of one code: guaranteed hit.
    PolyMatrix g = encoder_2x4(f);
    PolyMatrix other = popov_form(g);
    REQUIRE(is_reduced(other));
    Wam lam2 = compute_wam(controller_form(other));
    WamEquivalence hit = wam_equivalent(lam, lam2);
    CHECK(hit.equivalent);
    CHECK(relabel_wam(lam, *hit.t, *hit.phi) == lam2);

    // Same shape, different classes.
    Wam a = compute_wam(controller_form(pmat(f, {{{1}, {0, 1}}})));
    Wam b = compute_wam(controller_form(pmat(f, {{{1}, {1, 1}}})));
    WamEquivalence miss = wam_equivalent(a, b);
    CHECK_FALSE(miss.equivalent);
    CHECK_FALSE(miss.t.has_value());
    CHECK(miss.search_size == 1);  // GL_1(F_2) is trivial

    CHECK_THROWS_AS(wam_equivalent(lam, a), PreconditionError);
    CHECK_THROWS_AS(wam_equivalent(lam, lam2, true, 5), CapExceededError);
}

TEST_CASE("wam equivalence of similar systems recovers a relabeling witness") {
    auto f = Field::make(3);
    std::mt19937_64 rng(43);
    PolyMatrix g = pmat(f, {{{1}, {0, 1}, {2, 2}}, {{}, {1}, {1, 1}}});
    REQUIRE(is_reduced(g));
    StateSpace sys = controller_form(g);
    Wam lam = compute_wam(sys);
    for (int t = 0; t < 5; ++t) {
        Mat s = random_invertible(rng, f, 2);
        Wam moved = compute_wam(apply_similarity(sys, s));
        WamEquivalence res = wam_equivalent(lam, moved);
        CHECK(res.equivalent);
        CHECK(relabel_wam(lam, *res.t, *res.phi) == moved);
    }
}

TEST_CASE("truncated enumerator equals brute-force path enumeration") {
    auto f = Field::make(2);
    StateSpace sys = controller_form(encoder_2x4(f));
    Wam lam = compute_wam(sys);
    CHECK(truncated_enumerator(lam, 0) == WeightEnum::one());
    CHECK(truncated_enumerator(lam, 1) == we({{0, 1}, {3, 1}}));
    for (unsigned n = 0; n <= 4; ++n)
        CHECK(truncated_enumerator(lam, n) == brute_zero_paths(sys, n));

    auto f3 = Field::make(3);
    StateSpace sys3 = controller_form(pmat(f3, {{{1}, {0, 1}, {2, 2}}, {{}, {1}, {1, 1}}}));
    Wam lam3 = compute_wam(sys3);
    for (unsigned n = 0; n <= 3; ++n)
        CHECK(truncated_enumerator(lam3, n) == brute_zero_paths(sys3, n));
}

TEST_CASE("row mass holds for arbitrary systems") {
    std::mt19937_64 rng(44);
    for (std::uint32_t q : {2u, 3u}) {
        auto f = Field::make(q);
        for (int t = 0; t < 10; ++t) {
            StateSpace sys(random_mat(rng, f, 2, 2), random_mat(rng, f, 2, 2),
                           random_mat(rng, f, 2, 3), random_mat(rng, f, 2, 3));
            Wam lam = compute_wam(sys);
            for (std::uint64_t x = 0; x < lam.states(); ++x) {
                std::uint64_t mass = 0;
                for (std::uint64_t y = 0; y < lam.states(); ++y) mass += lam.entry(x, y).total();
                CHECK(mass == q * q);
            }
        }
    }
}
