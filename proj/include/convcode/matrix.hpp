#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "convcode/field.hpp"

namespace convcode {

// Dense matrix over a finite field, row-major.  Zero-dimensional shapes
// (0 x n, n x 0) are first-class citizens: products over an empty inner
// dimension are zero matrices, the 0 x 0 identity exists, and rank is 0.
class Mat {
public:
    Mat() = default;
    Mat(FieldPtr f, std::size_t rows, std::size_t cols);  // zero-filled
    Mat(FieldPtr f, std::size_t rows, std::size_t cols, std::vector<Elem> entries);
    static Mat identity(FieldPtr f, std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const FieldPtr& field() const { return f_; }

    Elem at(std::size_t r, std::size_t c) const { return e_[r * cols_ + c]; }
    Elem& at(std::size_t r, std::size_t c) { return e_[r * cols_ + c]; }

    Mat operator+(const Mat& o) const;
    Mat operator-(const Mat& o) const;
    Mat operator*(const Mat& o) const;
    Mat negated() const;
    Mat scaled(Elem c) const;
    Mat transposed() const;
    Mat pow(std::size_t e) const;  // square matrices only
    bool operator==(const Mat& o) const;
    bool operator!=(const Mat& o) const { return !(*this == o); }
    bool is_zero() const;

    Mat row(std::size_t i) const;
    Mat block(std::size_t r0, std::size_t c0, std::size_t rows, std::size_t cols) const;
    static Mat hcat(const Mat& a, const Mat& b);
    static Mat vcat(const Mat& a, const Mat& b);

private:
    FieldPtr f_;
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Elem> e_;
};

std::size_t mat_rank(const Mat& m);
bool is_invertible(const Mat& m);
Mat mat_inverse(const Mat& m);  // throws PreconditionError when singular

// Basis rows of { x : m x^T = 0 }, i.e. the kernel of the column map.
// Rows come out in reduced echelon style, deterministic.
Mat right_kernel(const Mat& m);

// Basis rows of { x : x m = 0 }.
Mat left_kernel(const Mat& m);

// One solution of X * a = b (row convention), or nullopt when the system
// is inconsistent.  Free coordinates are set to zero, so the zero right
// hand side always yields the zero solution.
std::optional<Mat> solve_xa_eq_b(const Mat& a, const Mat& b);

// One solution of a * X = b under the same determinism rules.
std::optional<Mat> solve_ax_eq_b(const Mat& a, const Mat& b);

// Row vectors of F^delta are numbered 0 .. q^delta - 1 lexicographically,
// first coordinate most significant.  These two helpers convert between a
// number and the corresponding 1 x delta matrix.
Mat code_to_row(const FieldPtr& f, std::uint32_t delta, std::uint64_t code);
std::uint64_t row_to_code(const Mat& row);

// |GL_delta(F_q)| = prod_i (q^delta - q^i), or nullopt on overflow.
std::optional<std::uint64_t> gl_order(std::uint64_t q, std::uint32_t delta);

// Streams GL_delta(F) in a fixed order: rows are chosen by backtracking,
// each row running through F^delta in lexicographic order (first
// coordinate most significant, coordinates ordered like the element
// encoding) and skipping vectors inside the span of the rows above.
class GlEnumerator {
public:
    GlEnumerator(FieldPtr f, std::uint32_t delta);

    // Next group element, or nullopt when exhausted.
    std::optional<Mat> next();
    void reset();

private:
    bool row_independent(std::size_t level, std::uint64_t candidate);

    FieldPtr f_;
    std::uint32_t delta_;
    std::uint64_t vectors_;             // q^delta
    std::vector<std::uint64_t> stack_;  // chosen row codes
    bool done_ = false;
    bool fresh_ = true;
};

}  // namespace convcode
