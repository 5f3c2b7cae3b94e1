#pragma once

#include <optional>
#include <vector>

#include "convcode/matrix.hpp"
#include "convcode/poly.hpp"

namespace convcode {

// Matrix over F[z], row-major.  Encoders are k x n with k <= n and full
// row rank over the rational functions; most operations below state their
// own rank preconditions.
class PolyMatrix {
public:
    PolyMatrix(FieldPtr f, std::size_t rows, std::size_t cols);  // zero-filled
    PolyMatrix(FieldPtr f, std::size_t rows, std::size_t cols, std::vector<Poly> entries);
    static PolyMatrix identity(FieldPtr f, std::size_t n);
    static PolyMatrix from_constant(const Mat& m);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const FieldPtr& field() const { return f_; }

    const Poly& at(std::size_t r, std::size_t c) const { return e_[r * cols_ + c]; }
    Poly& at(std::size_t r, std::size_t c) { return e_[r * cols_ + c]; }

    PolyMatrix operator+(const PolyMatrix& o) const;
    PolyMatrix operator-(const PolyMatrix& o) const;
    PolyMatrix operator*(const PolyMatrix& o) const;
    bool operator==(const PolyMatrix& o) const;
    bool operator!=(const PolyMatrix& o) const { return !(*this == o); }

    bool is_zero() const;
    bool is_constant() const;

    // Coefficient matrix of z^power.
    Mat coeff(std::size_t power) const;
    // Entrywise evaluation at a field element.
    Mat eval(Elem x) const;
    // Largest entry degree, or nullopt for the zero matrix.
    std::optional<int> max_entry_degree() const;
    // Degree of row i, nullopt for a zero row.
    std::optional<int> row_degree(std::size_t i) const;

    PolyMatrix block(std::size_t r0, std::size_t c0, std::size_t rows, std::size_t cols) const;
    PolyMatrix transposed() const;

private:
    FieldPtr f_;
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Poly> e_;
};

// Row degrees of a matrix without zero rows; a zero row is an error, not
// a sentinel smuggled into the result.
std::vector<int> row_degrees(const PolyMatrix& g);

// Coefficient of z^(row degree) per row: the matrix of leading row
// coefficients.  Throws on zero rows.
Mat leading_row_matrix(const PolyMatrix& g);

// Internal degree: the maximal degree of a full-size minor.  Requires
// full row rank.  Uses minor enumeration for cols <= 8 and the row-degree
// sum of the Popov form beyond that.
int degree(const PolyMatrix& g);

// Row reducedness: the leading row coefficient matrix has full row rank,
// equivalently the row degrees add up to the internal degree.
bool is_reduced(const PolyMatrix& g);

// Determinant of a square polynomial matrix.
Poly poly_det(const PolyMatrix& g);

// Smith normal form s = u * g * v with u, v unimodular and the monic
// invariant factors on the diagonal dividing each other in turn.
struct SmithForm {
    PolyMatrix u;  // rows x rows
    PolyMatrix s;  // same shape as g
    PolyMatrix v;  // cols x cols
};
SmithForm smith_form(const PolyMatrix& g);

// The nonzero diagonal of the Smith form (monic, each dividing the next).
std::vector<Poly> invariant_factors(const PolyMatrix& g);

// An encoder is basic when all its invariant factors are 1: the encoder
// is noncatastrophic and delay-free, i.e. a polynomial right inverse
// exists.  Requires rows <= cols.
bool is_basic(const PolyMatrix& g);

// Polynomial right inverse of a basic matrix (g * h = identity).
PolyMatrix right_inverse(const PolyMatrix& g);

bool is_unimodular(const PolyMatrix& w);

// Row Popov canonical form.  Convention: the pivot of a row is the
// rightmost entry attaining the row degree; pivots are monic and sit in
// strictly increasing columns; every other entry in a pivot column has
// degree below the pivot's.  Unique for the row module, so it decides
// module equality.  Throws on rank-deficient input.
PolyMatrix popov_form(const PolyMatrix& g);

// Row modules equal?  Both sides must have full row rank.
bool code_equal(const PolyMatrix& a, const PolyMatrix& b);

// Row degrees of the Popov form, sorted descending: the Forney indices of
// the row module.  Their sum is the internal degree.
std::vector<int> forney_indices(const PolyMatrix& g);

PolyMatrix apply_automorphism(const Automorphism& phi, const PolyMatrix& g);
Mat apply_automorphism(const Automorphism& phi, const Mat& m);

}  // namespace convcode
