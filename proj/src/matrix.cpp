#include "convcode/matrix.hpp"

#include <algorithm>

#include "convcode/errors.hpp"

namespace convcode {
namespace {

void require_same_shape(const Mat& a, const Mat& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw PreconditionError("matrix shape mismatch");
    if (!same_field(a.field(), b.field())) throw PreconditionError("matrix field mismatch");
}

// In-place reduced row echelon form.  Scans columns left to right and
// picks the first row with a nonzero entry, which makes every downstream
// basis and solution deterministic.  Returns the pivot columns.
std::vector<std::size_t> rref(Mat& m) {
    const Field& F = *m.field();
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t pr = r;
        while (pr < m.rows() && m.at(pr, c) == 0) ++pr;
        if (pr == m.rows()) continue;
        if (pr != r)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(pr, j), m.at(r, j));
        Elem scale = F.inv(m.at(r, c));
        if (scale != 1)
            for (std::size_t j = 0; j < m.cols(); ++j) m.at(r, j) = F.mul(m.at(r, j), scale);
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m.at(i, c) == 0) continue;
            Elem factor = m.at(i, c);
            for (std::size_t j = 0; j < m.cols(); ++j)
                m.at(i, j) = F.sub(m.at(i, j), F.mul(factor, m.at(r, j)));
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

Mat::Mat(FieldPtr f, std::size_t rows, std::size_t cols)
    : f_(std::move(f)), rows_(rows), cols_(cols), e_(rows * cols, 0) {}

Mat::Mat(FieldPtr f, std::size_t rows, std::size_t cols, std::vector<Elem> entries)
    : f_(std::move(f)), rows_(rows), cols_(cols), e_(std::move(entries)) {
    if (e_.size() != rows_ * cols_) throw PreconditionError("matrix entry count does not match its shape");
    for (Elem x : e_)
        if (x >= f_->q()) throw PreconditionError("matrix entry out of field range");
}

Mat Mat::identity(FieldPtr f, std::size_t n) {
    Mat m(std::move(f), n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

Mat Mat::operator+(const Mat& o) const {
    require_same_shape(*this, o);
    Mat r(f_, rows_, cols_);
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = f_->add(e_[i], o.e_[i]);
    return r;
}

Mat Mat::operator-(const Mat& o) const {
    require_same_shape(*this, o);
    Mat r(f_, rows_, cols_);
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = f_->sub(e_[i], o.e_[i]);
    return r;
}

Mat Mat::operator*(const Mat& o) const {
    if (cols_ != o.rows_) throw PreconditionError("matrix product shape mismatch");
    if (!same_field(f_, o.f_)) throw PreconditionError("matrix field mismatch");
    Mat r(f_, rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            Elem x = at(i, k);
            if (x == 0) continue;
            for (std::size_t j = 0; j < o.cols_; ++j)
                r.at(i, j) = f_->add(r.at(i, j), f_->mul(x, o.at(k, j)));
        }
    return r;
}

Mat Mat::negated() const {
    Mat r(f_, rows_, cols_);
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = f_->neg(e_[i]);
    return r;
}

Mat Mat::scaled(Elem c) const {
    Mat r(f_, rows_, cols_);
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = f_->mul(e_[i], c);
    return r;
}

Mat Mat::transposed() const {
    Mat r(f_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

Mat Mat::pow(std::size_t e) const {
    if (rows_ != cols_) throw PreconditionError("matrix power needs a square matrix");
    Mat r = identity(f_, rows_);
    Mat base = *this;
    while (e > 0) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

bool Mat::operator==(const Mat& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && same_field(f_, o.f_) && e_ == o.e_;
}

bool Mat::is_zero() const {
    return std::all_of(e_.begin(), e_.end(), [](Elem x) { return x == 0; });
}

Mat Mat::row(std::size_t i) const { return block(i, 0, 1, cols_); }

Mat Mat::block(std::size_t r0, std::size_t c0, std::size_t rows, std::size_t cols) const {
    if (r0 + rows > rows_ || c0 + cols > cols_) throw PreconditionError("matrix block out of range");
    Mat r(f_, rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) r.at(i, j) = at(r0 + i, c0 + j);
    return r;
}

Mat Mat::hcat(const Mat& a, const Mat& b) {
    if (a.rows() != b.rows()) throw PreconditionError("hcat row mismatch");
    Mat r(a.field() ? a.field() : b.field(), a.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) r.at(i, j) = a.at(i, j);
        for (std::size_t j = 0; j < b.cols(); ++j) r.at(i, a.cols() + j) = b.at(i, j);
    }
    return r;
}

Mat Mat::vcat(const Mat& a, const Mat& b) {
    if (a.cols() != b.cols()) throw PreconditionError("vcat column mismatch");
    Mat r(a.field() ? a.field() : b.field(), a.rows() + b.rows(), a.cols());
    for (std::size_t j = 0; j < a.cols(); ++j) {
        for (std::size_t i = 0; i < a.rows(); ++i) r.at(i, j) = a.at(i, j);
        for (std::size_t i = 0; i < b.rows(); ++i) r.at(a.rows() + i, j) = b.at(i, j);
    }
    return r;
}

std::size_t mat_rank(const Mat& m) {
    Mat copy = m;
    return rref(copy).size();
}

bool is_invertible(const Mat& m) {
    return m.rows() == m.cols() && mat_rank(m) == m.rows();
}

Mat mat_inverse(const Mat& m) {
    if (m.rows() != m.cols()) throw PreconditionError("only square matrices can be inverted");
    std::size_t n = m.rows();
    Mat work = Mat::hcat(m, Mat::identity(m.field(), n));
    auto pivots = rref(work);
    if (pivots.size() != n || (n > 0 && pivots.back() != n - 1))
        throw PreconditionError("matrix is singular");
    return work.block(0, n, n, n);
}

Mat right_kernel(const Mat& m) {
    Mat work = m;
    auto pivots = rref(work);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t c : pivots) is_pivot[c] = true;
    const Field& F = *m.field();
    std::size_t dim = m.cols() - pivots.size();
    Mat basis(m.field(), dim, m.cols());
    std::size_t out = 0;
    for (std::size_t fc = 0; fc < m.cols(); ++fc) {
        if (is_pivot[fc]) continue;
        basis.at(out, fc) = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) basis.at(out, pivots[i]) = F.neg(work.at(i, fc));
        ++out;
    }
    return basis;
}

Mat left_kernel(const Mat& m) { return right_kernel(m.transposed()); }

std::optional<Mat> solve_ax_eq_b(const Mat& a, const Mat& b) {
    if (a.rows() != b.rows()) throw PreconditionError("solve: left and right sides disagree on rows");
    if (!same_field(a.field(), b.field())) throw PreconditionError("solve: field mismatch");
    Mat work = Mat::hcat(a, b);
    auto pivots = rref(work);
    for (std::size_t c : pivots)
        if (c >= a.cols()) return std::nullopt;
    Mat x(a.field(), a.cols(), b.cols());
    for (std::size_t i = 0; i < pivots.size(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) x.at(pivots[i], j) = work.at(i, a.cols() + j);
    return x;
}

std::optional<Mat> solve_xa_eq_b(const Mat& a, const Mat& b) {
    if (a.cols() != b.cols()) throw PreconditionError("solve: left and right sides disagree on columns");
    auto xt = solve_ax_eq_b(a.transposed(), b.transposed());
    if (!xt) return std::nullopt;
    return xt->transposed();
}

Mat code_to_row(const FieldPtr& f, std::uint32_t delta, std::uint64_t code) {
    Mat row(f, 1, delta);
    for (std::uint32_t j = delta; j-- > 0;) {
        row.at(0, j) = static_cast<Elem>(code % f->q());
        code /= f->q();
    }
    return row;
}

std::uint64_t row_to_code(const Mat& row) {
    std::uint64_t code = 0;
    for (std::size_t j = 0; j < row.cols(); ++j) code = code * row.field()->q() + row.at(0, j);
    return code;
}

std::optional<std::uint64_t> gl_order(std::uint64_t q, std::uint32_t delta) {
    unsigned __int128 qd = 1;
    for (std::uint32_t i = 0; i < delta; ++i) {
        qd *= q;
        if (qd > UINT64_MAX) return std::nullopt;
    }
    unsigned __int128 order = 1;
    unsigned __int128 qi = 1;
    for (std::uint32_t i = 0; i < delta; ++i) {
        order *= qd - qi;
        if (order > UINT64_MAX) return std::nullopt;
        qi *= q;
    }
    return static_cast<std::uint64_t>(order);
}

GlEnumerator::GlEnumerator(FieldPtr f, std::uint32_t delta) : f_(std::move(f)), delta_(delta) {
    vectors_ = 1;
    for (std::uint32_t i = 0; i < delta_; ++i) vectors_ *= f_->q();
    reset();
}

void GlEnumerator::reset() {
    stack_.clear();
    done_ = false;
    fresh_ = true;
}

bool GlEnumerator::row_independent(std::size_t level, std::uint64_t candidate) {
    Mat m(f_, level + 1, delta_);
    for (std::size_t i = 0; i < level; ++i) {
        Mat r = code_to_row(f_, delta_, stack_[i]);
        for (std::uint32_t j = 0; j < delta_; ++j) m.at(i, j) = r.at(0, j);
    }
    Mat r = code_to_row(f_, delta_, candidate);
    for (std::uint32_t j = 0; j < delta_; ++j) m.at(level, j) = r.at(0, j);
    return mat_rank(m) == level + 1;
}

std::optional<Mat> GlEnumerator::next() {
    if (done_) return std::nullopt;
    if (delta_ == 0) {
        if (fresh_) {
            fresh_ = false;
            done_ = true;
            return Mat(f_, 0, 0);
        }
        return std::nullopt;
    }

    std::uint64_t candidate = 0;
    if (fresh_) {
        fresh_ = false;
    } else {
        candidate = stack_.back() + 1;
        stack_.pop_back();
    }
    while (true) {
        if (candidate >= vectors_) {
            if (stack_.empty()) {
                done_ = true;
                return std::nullopt;
            }
            candidate = stack_.back() + 1;
            stack_.pop_back();
            continue;
        }
        if (!row_independent(stack_.size(), candidate)) {
            ++candidate;
            continue;
        }
        stack_.push_back(candidate);
        if (stack_.size() == delta_) {
            Mat m(f_, delta_, delta_);
            for (std::uint32_t i = 0; i < delta_; ++i) {
                Mat r = code_to_row(f_, delta_, stack_[i]);
                for (std::uint32_t j = 0; j < delta_; ++j) m.at(i, j) = r.at(0, j);
            }
            return m;
        }
        candidate = 0;
    }
}

}  // namespace convcode
