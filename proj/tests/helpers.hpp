#pragma once

#include <random>
#include <vector>

#include "convcode/matrix.hpp"
#include "convcode/polymatrix.hpp"

// Small builders shared by the test suites.
namespace testutil {

using convcode::Elem;
using convcode::FieldPtr;
using convcode::Mat;
using convcode::Poly;
using convcode::PolyMatrix;

inline Mat mk(const FieldPtr& f, const std::vector<std::vector<Elem>>& rows) {
    std::size_t r = rows.size(), c = r ? rows[0].size() : 0;
    Mat m(f, r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
    return m;
}

// Entries are coefficient lists, lowest power first; {} is the zero entry.
inline PolyMatrix pmat(const FieldPtr& f,
                       const std::vector<std::vector<std::vector<Elem>>>& rows) {
    std::size_t r = rows.size(), c = r ? rows[0].size() : 0;
    PolyMatrix m(f, r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m.at(i, j) = Poly(f, rows[i][j]);
    return m;
}

inline Mat random_mat(std::mt19937_64& rng, const FieldPtr& f, std::size_t r, std::size_t c) {
    Mat m(f, r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m.at(i, j) = static_cast<Elem>(rng() % f->q());
    return m;
}

inline Mat random_invertible(std::mt19937_64& rng, const FieldPtr& f, std::size_t n) {
    for (;;) {
        Mat m = testutil::random_mat(rng, f, n, n);
        if (convcode::is_invertible(m)) return m;
    }
}

inline Poly random_poly(std::mt19937_64& rng, const FieldPtr& f, int max_deg) {
    std::vector<Elem> cs(static_cast<std::size_t>(rng() % (max_deg + 1)) + 1);
    for (Elem& c : cs) c = static_cast<Elem>(rng() % f->q());
    return Poly(f, std::move(cs));
}

inline PolyMatrix random_polymat(std::mt19937_64& rng, const FieldPtr& f, std::size_t r,
                                 std::size_t c, int max_deg) {
    PolyMatrix m(f, r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m.at(i, j) = testutil::random_poly(rng, f, max_deg);
    return m;
}

// Product of random elementary row operations applied to the identity.
inline PolyMatrix random_unimodular(std::mt19937_64& rng, const FieldPtr& f, std::size_t k,
                                    int ops = 8) {
    PolyMatrix u = PolyMatrix::identity(f, k);
    if (k < 2) return u;
    for (int t = 0; t < ops; ++t) {
        std::size_t i = rng() % k, j = rng() % k;
        if (i == j) {
            Elem c = 1 + static_cast<Elem>(rng() % (f->q() - 1));
            for (std::size_t col = 0; col < k; ++col) u.at(i, col) = u.at(i, col).scaled(c);
        } else {
            Poly m = testutil::random_poly(rng, f, 2);
            for (std::size_t col = 0; col < k; ++col)
                u.at(j, col) = u.at(j, col) + m * u.at(i, col);
        }
    }
    return u;
}

}  // namespace testutil
