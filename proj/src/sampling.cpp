#include "convcode/sampling.hpp"

#include <numeric>
#include <utility>

#include "convcode/errors.hpp"

namespace convcode {

namespace {

std::uint64_t below(std::mt19937_64& rng, std::uint64_t n) {
    return rng() % n;
}

}  // namespace

Elem random_element(std::mt19937_64& rng, const FieldPtr& f) {
    return static_cast<Elem>(below(rng, f->q()));
}

Elem random_nonzero(std::mt19937_64& rng, const FieldPtr& f) {
    return static_cast<Elem>(1 + below(rng, f->q() - 1));
}

Poly random_poly(std::mt19937_64& rng, const FieldPtr& f, std::size_t max_degree) {
    std::vector<Elem> coeffs(max_degree + 1);
    for (Elem& c : coeffs) {
        c = random_element(rng, f);
    }
    return Poly(f, std::move(coeffs));
}

Mat random_mat(std::mt19937_64& rng, const FieldPtr& f, std::size_t rows, std::size_t cols) {
    Mat m(f, rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) {
            m.at(i, j) = random_element(rng, f);
        }
    }
    return m;
}

Mat random_invertible(std::mt19937_64& rng, const FieldPtr& f, std::size_t n) {
    while (true) {
        Mat m = random_mat(rng, f, n, n);
        if (is_invertible(m)) {
            return m;
        }
    }
}

Mat random_permutation_matrix(std::mt19937_64& rng, const FieldPtr& f, std::size_t n) {
    std::vector<std::size_t> sigma(n);
    std::iota(sigma.begin(), sigma.end(), std::size_t{0});
    for (std::size_t i = n; i > 1; --i) {
        std::swap(sigma[i - 1], sigma[below(rng, i)]);
    }
    Mat p(f, n, n);
    for (std::size_t i = 0; i < n; ++i) {
        p.at(i, sigma[i]) = 1;
    }
    return p;
}

Mat random_diagonal(std::mt19937_64& rng, const FieldPtr& f, std::size_t n) {
    Mat r(f, n, n);
    for (std::size_t i = 0; i < n; ++i) {
        r.at(i, i) = random_nonzero(rng, f);
    }
    return r;
}

MonomialTransform random_monomial(std::mt19937_64& rng, const FieldPtr& f, std::size_t n,
                                  bool allow_automorphisms) {
    Automorphism phi = identity_automorphism(f);
    if (allow_automorphisms) {
        std::vector<Automorphism> autos = automorphisms(f);
        phi = autos[below(rng, autos.size())];
    }
    return MonomialTransform{phi, random_permutation_matrix(rng, f, n),
                             random_diagonal(rng, f, n)};
}

FeedbackWitness random_feedback(std::mt19937_64& rng, const FieldPtr& f, std::size_t delta,
                                std::size_t k) {
    return FeedbackWitness{random_invertible(rng, f, delta), random_invertible(rng, f, k),
                           random_mat(rng, f, delta, k)};
}

PolyMatrix random_reduced_basic(std::mt19937_64& rng, const FieldPtr& f, std::size_t k,
                                std::size_t n, const std::vector<int>& row_degrees,
                                std::size_t max_attempts) {
    if (row_degrees.size() != k) {
        throw PreconditionError("random_reduced_basic: need one row degree per row");
    }
    for (const int d : row_degrees) {
        if (d < 0) {
            throw PreconditionError("random_reduced_basic: row degrees must be nonnegative");
        }
    }
    if (n < k) {
        throw PreconditionError("random_reduced_basic: need at least as many columns as rows");
    }
    for (std::size_t attempt = 0; attempt < max_attempts; ++attempt) {
        PolyMatrix g(f, k, n);
        bool exact_degrees = true;
        for (std::size_t i = 0; i < k; ++i) {
            const std::size_t d = static_cast<std::size_t>(row_degrees[i]);
            bool leading_nonzero = false;
            for (std::size_t j = 0; j < n; ++j) {
                Poly entry = random_poly(rng, f, d);
                if (entry.degree() && *entry.degree() == static_cast<int>(d)) {
                    leading_nonzero = true;
                }
                g.at(i, j) = std::move(entry);
            }
            if (!leading_nonzero) {
                exact_degrees = false;
                break;
            }
        }
        if (!exact_degrees) {
            continue;
        }
        if (is_reduced(g) && is_basic(g)) {
            return g;
        }
    }
    throw Error("random_reduced_basic: no basic reduced encoder found within the attempt budget");
}

}  // namespace convcode
