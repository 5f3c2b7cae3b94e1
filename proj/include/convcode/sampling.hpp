#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "convcode/equivalence.hpp"
#include "convcode/field.hpp"
#include "convcode/matrix.hpp"
#include "convcode/poly.hpp"
#include "convcode/polymatrix.hpp"
#include "convcode/statespace.hpp"

namespace convcode {

// Deterministic generators for randomized tests and cross-validation.
// All draws reduce rng() modulo the needed range, so a fixed seed yields
// the same sequence on every platform.

Elem random_element(std::mt19937_64& rng, const FieldPtr& f);
Elem random_nonzero(std::mt19937_64& rng, const FieldPtr& f);

// Uniform coefficients up to max_degree inclusive; may come out zero.
Poly random_poly(std::mt19937_64& rng, const FieldPtr& f, std::size_t max_degree);

Mat random_mat(std::mt19937_64& rng, const FieldPtr& f, std::size_t rows, std::size_t cols);

// Rejection-samples until invertible.
Mat random_invertible(std::mt19937_64& rng, const FieldPtr& f, std::size_t n);

// Fisher-Yates permutation matrix.
Mat random_permutation_matrix(std::mt19937_64& rng, const FieldPtr& f, std::size_t n);

// Diagonal matrix with nonzero diagonal entries.
Mat random_diagonal(std::mt19937_64& rng, const FieldPtr& f, std::size_t n);

// Random monomial transform; the automorphism is uniform over Gal(F/F_p)
// when allow_automorphisms is set and the identity otherwise.
MonomialTransform random_monomial(std::mt19937_64& rng, const FieldPtr& f, std::size_t n,
                                  bool allow_automorphisms = true);

// Random feedback group element (T, U, M) for given state and input sizes.
FeedbackWitness random_feedback(std::mt19937_64& rng, const FieldPtr& f, std::size_t delta,
                                std::size_t k);

// Rejection-samples a k x n encoder whose i-th row degree is exactly
// row_degrees[i] until the result is basic and reduced, so its Forney
// indices are the row degrees sorted descending.  Throws Error when
// max_attempts draws all fail.
PolyMatrix random_reduced_basic(std::mt19937_64& rng, const FieldPtr& f, std::size_t k,
                                std::size_t n, const std::vector<int>& row_degrees,
                                std::size_t max_attempts = 10000);

}  // namespace convcode
