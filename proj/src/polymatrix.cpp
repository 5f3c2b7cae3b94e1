#include "convcode/polymatrix.hpp"

#include <algorithm>
#include <map>

#include "convcode/errors.hpp"

namespace convcode {
namespace {

void require_same_shape(const PolyMatrix& a, const PolyMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw PreconditionError("matrix shape mismatch");
    if (!same_field(a.field(), b.field())) throw PreconditionError("matrix field mismatch");
}

}  // namespace

PolyMatrix::PolyMatrix(FieldPtr f, std::size_t rows, std::size_t cols)
    : f_(f), rows_(rows), cols_(cols), e_(rows * cols, Poly(f)) {}

PolyMatrix::PolyMatrix(FieldPtr f, std::size_t rows, std::size_t cols, std::vector<Poly> entries)
    : f_(std::move(f)), rows_(rows), cols_(cols), e_(std::move(entries)) {
    if (e_.size() != rows_ * cols_) throw PreconditionError("matrix entry count does not match its shape");
    for (const Poly& p : e_)
        if (!same_field(p.field(), f_)) throw PreconditionError("matrix entry from a different field");
}

PolyMatrix PolyMatrix::identity(FieldPtr f, std::size_t n) {
    PolyMatrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Poly::constant(f, 1);
    return m;
}

PolyMatrix PolyMatrix::from_constant(const Mat& m) {
    PolyMatrix r(m.field(), m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r.at(i, j) = Poly::constant(m.field(), m.at(i, j));
    return r;
}

PolyMatrix PolyMatrix::operator+(const PolyMatrix& o) const {
    require_same_shape(*this, o);
    PolyMatrix r(f_, rows_, cols_);
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] + o.e_[i];
    return r;
}

PolyMatrix PolyMatrix::operator-(const PolyMatrix& o) const {
    require_same_shape(*this, o);
    PolyMatrix r(f_, rows_, cols_);
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] - o.e_[i];
    return r;
}

PolyMatrix PolyMatrix::operator*(const PolyMatrix& o) const {
    if (cols_ != o.rows_) throw PreconditionError("matrix product shape mismatch");
    if (!same_field(f_, o.f_)) throw PreconditionError("matrix field mismatch");
    PolyMatrix r(f_, rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Poly& x = at(i, k);
            if (x.is_zero()) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) {
                if (o.at(k, j).is_zero()) continue;
                r.at(i, j) = r.at(i, j) + x * o.at(k, j);
            }
        }
    return r;
}

bool PolyMatrix::operator==(const PolyMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && same_field(f_, o.f_) && e_ == o.e_;
}

bool PolyMatrix::is_zero() const {
    return std::all_of(e_.begin(), e_.end(), [](const Poly& p) { return p.is_zero(); });
}

bool PolyMatrix::is_constant() const {
    return std::all_of(e_.begin(), e_.end(), [](const Poly& p) { return p.is_constant(); });
}

Mat PolyMatrix::coeff(std::size_t power) const {
    Mat m(f_, rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) m.at(i, j) = at(i, j).coeff(power);
    return m;
}

Mat PolyMatrix::eval(Elem x) const {
    Mat m(f_, rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) m.at(i, j) = at(i, j).eval(x);
    return m;
}

std::optional<int> PolyMatrix::max_entry_degree() const {
    std::optional<int> best;
    for (const Poly& p : e_)
        if (auto d = p.degree(); d && (!best || *d > *best)) best = d;
    return best;
}

std::optional<int> PolyMatrix::row_degree(std::size_t i) const {
    std::optional<int> best;
    for (std::size_t j = 0; j < cols_; ++j)
        if (auto d = at(i, j).degree(); d && (!best || *d > *best)) best = d;
    return best;
}

PolyMatrix PolyMatrix::block(std::size_t r0, std::size_t c0, std::size_t rows, std::size_t cols) const {
    if (r0 + rows > rows_ || c0 + cols > cols_) throw PreconditionError("matrix block out of range");
    PolyMatrix r(f_, rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) r.at(i, j) = at(r0 + i, c0 + j);
    return r;
}

PolyMatrix PolyMatrix::transposed() const {
    PolyMatrix r(f_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

std::vector<int> row_degrees(const PolyMatrix& g) {
    std::vector<int> out(g.rows());
    for (std::size_t i = 0; i < g.rows(); ++i) {
        auto d = g.row_degree(i);
        if (!d) throw PreconditionError("row " + std::to_string(i + 1) + " is zero");
        out[i] = *d;
    }
    return out;
}

Mat leading_row_matrix(const PolyMatrix& g) {
    std::vector<int> degs = row_degrees(g);
    Mat m(g.field(), g.rows(), g.cols());
    for (std::size_t i = 0; i < g.rows(); ++i)
        for (std::size_t j = 0; j < g.cols(); ++j) m.at(i, j) = g.at(i, j).coeff(static_cast<std::size_t>(degs[i]));
    return m;
}

Poly poly_det(const PolyMatrix& g) {
    if (g.rows() != g.cols()) throw PreconditionError("determinant of a non-square matrix");
    std::size_t n = g.rows();
    std::vector<std::size_t> cols(n);
    for (std::size_t j = 0; j < n; ++j) cols[j] = j;

    // Laplace expansion along the top rows; fine at encoder sizes.
    auto rec = [&](auto&& self, std::size_t row, std::vector<std::size_t>& active) -> Poly {
        if (active.empty()) return Poly::constant(g.field(), 1);
        Poly acc(g.field());
        for (std::size_t t = 0; t < active.size(); ++t) {
            const Poly& entry = g.at(row, active[t]);
            if (entry.is_zero()) continue;
            std::vector<std::size_t> rest;
            rest.reserve(active.size() - 1);
            for (std::size_t u = 0; u < active.size(); ++u)
                if (u != t) rest.push_back(active[u]);
            Poly minor = self(self, row + 1, rest);
            Poly term = entry * minor;
            acc = (t % 2 == 0) ? acc + term : acc - term;
        }
        return acc;
    };
    return rec(rec, 0, cols);
}

namespace {

int degree_by_minors(const PolyMatrix& g) {
    std::size_t k = g.rows(), n = g.cols();
    std::vector<std::size_t> pick(k);
    for (std::size_t i = 0; i < k; ++i) pick[i] = i;
    std::optional<int> best;
    while (true) {
        PolyMatrix sub(g.field(), k, k);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) sub.at(i, j) = g.at(i, pick[j]);
        if (auto d = poly_det(sub).degree(); d && (!best || *d > *best)) best = d;
        // next combination
        std::size_t i = k;
        while (i-- > 0) {
            if (pick[i] + (k - i) < n + 0) {
                ++pick[i];
                for (std::size_t j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
                break;
            }
            if (i == 0) {
                if (!best) throw PreconditionError("matrix does not have full row rank");
                return *best;
            }
        }
        if (k == 0) break;
    }
    if (!best) throw PreconditionError("matrix does not have full row rank");
    return *best;
}

}  // namespace

int degree(const PolyMatrix& g) {
    if (g.rows() > g.cols()) throw PreconditionError("matrix does not have full row rank");
    if (g.rows() == 0) return 0;
    if (g.cols() <= 8) return degree_by_minors(g);
    std::vector<int> degs = row_degrees(popov_form(g));
    int sum = 0;
    for (int d : degs) sum += d;
    return sum;
}

bool is_reduced(const PolyMatrix& g) {
    return mat_rank(leading_row_matrix(g)) == g.rows();
}

namespace {

struct SmithWork {
    PolyMatrix s, u, v;

    void row_swap(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t c = 0; c < s.cols(); ++c) std::swap(s.at(i, c), s.at(j, c));
        for (std::size_t c = 0; c < u.cols(); ++c) std::swap(u.at(i, c), u.at(j, c));
    }
    void col_swap(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t r = 0; r < s.rows(); ++r) std::swap(s.at(r, i), s.at(r, j));
        for (std::size_t r = 0; r < v.rows(); ++r) std::swap(v.at(r, i), v.at(r, j));
    }
    // row i -= q * row j
    void row_sub(std::size_t i, const Poly& q, std::size_t j) {
        for (std::size_t c = 0; c < s.cols(); ++c) s.at(i, c) = s.at(i, c) - q * s.at(j, c);
        for (std::size_t c = 0; c < u.cols(); ++c) u.at(i, c) = u.at(i, c) - q * u.at(j, c);
    }
    // col i -= q * col j
    void col_sub(std::size_t i, const Poly& q, std::size_t j) {
        for (std::size_t r = 0; r < s.rows(); ++r) s.at(r, i) = s.at(r, i) - q * s.at(r, j);
        for (std::size_t r = 0; r < v.rows(); ++r) v.at(r, i) = v.at(r, i) - q * v.at(r, j);
    }
    // col i += col j
    void col_add(std::size_t i, std::size_t j) {
        Poly minus_one = Poly::constant(s.field(), s.field()->neg(1));
        col_sub(i, minus_one, j);
    }
    void row_scale(std::size_t i, Elem c) {
        for (std::size_t col = 0; col < s.cols(); ++col) s.at(i, col) = s.at(i, col).scaled(c);
        for (std::size_t col = 0; col < u.cols(); ++col) u.at(i, col) = u.at(i, col).scaled(c);
    }
};

// Clear row and column t with pivoting on the minimal-degree entry of the
// trailing block until only the pivot remains.
void clear_pivot(SmithWork& w, std::size_t t) {
    std::size_t k = w.s.rows(), n = w.s.cols();
    while (true) {
        std::optional<std::pair<std::size_t, std::size_t>> pos;
        int best_deg = 0;
        for (std::size_t i = t; i < k; ++i)
            for (std::size_t j = t; j < n; ++j) {
                auto d = w.s.at(i, j).degree();
                if (!d) continue;
                if (!pos || *d < best_deg) {
                    pos = {i, j};
                    best_deg = *d;
                }
            }
        if (!pos) return;  // trailing block is zero
        w.row_swap(t, pos->first);
        w.col_swap(t, pos->second);

        bool dirty = false;
        for (std::size_t i = t + 1; i < k; ++i) {
            if (w.s.at(i, t).is_zero()) continue;
            Poly q = w.s.at(i, t).divrem(w.s.at(t, t)).quotient;
            w.row_sub(i, q, t);
            if (!w.s.at(i, t).is_zero()) dirty = true;  // remainder became the new entry
        }
        for (std::size_t j = t + 1; j < n; ++j) {
            if (w.s.at(t, j).is_zero()) continue;
            Poly q = w.s.at(t, j).divrem(w.s.at(t, t)).quotient;
            w.col_sub(j, q, t);
            if (!w.s.at(t, j).is_zero()) dirty = true;
        }
        if (!dirty) return;
    }
}

}  // namespace

SmithForm smith_form(const PolyMatrix& g) {
    std::size_t k = g.rows(), n = g.cols();
    SmithWork w{g, PolyMatrix::identity(g.field(), k), PolyMatrix::identity(g.field(), n)};

    std::size_t steps = std::min(k, n);
    std::size_t from = 0;
    while (true) {
        for (std::size_t t = from; t < steps; ++t) clear_pivot(w, t);
        // Enforce the divisibility chain; a violation folds the offending
        // entry back into an earlier column and rediagonalizes from there.
        std::optional<std::size_t> redo;
        for (std::size_t i = 0; i + 1 < steps && !redo; ++i) {
            if (w.s.at(i, i).is_zero()) continue;
            for (std::size_t j = i + 1; j < steps; ++j) {
                if (w.s.at(j, j).is_zero()) continue;
                if (!w.s.at(j, j).divrem(w.s.at(i, i)).remainder.is_zero()) {
                    w.col_add(i, j);
                    redo = i;
                    break;
                }
            }
        }
        if (!redo) break;
        from = *redo;
    }

    for (std::size_t t = 0; t < steps; ++t)
        if (!w.s.at(t, t).is_zero() && w.s.at(t, t).leading_coeff() != 1)
            w.row_scale(t, g.field()->inv(w.s.at(t, t).leading_coeff()));

    return SmithForm{std::move(w.u), std::move(w.s), std::move(w.v)};
}

std::vector<Poly> invariant_factors(const PolyMatrix& g) {
    SmithForm sf = smith_form(g);
    std::vector<Poly> out;
    for (std::size_t t = 0; t < std::min(g.rows(), g.cols()); ++t)
        if (!sf.s.at(t, t).is_zero()) out.push_back(sf.s.at(t, t));
    return out;
}

bool is_basic(const PolyMatrix& g) {
    if (g.rows() > g.cols()) throw PreconditionError("an encoder needs at least as many columns as rows");
    std::vector<Poly> inv = invariant_factors(g);
    if (inv.size() != g.rows()) return false;  // rank deficient
    return std::all_of(inv.begin(), inv.end(), [](const Poly& p) { return p.is_constant(); });
}

PolyMatrix right_inverse(const PolyMatrix& g) {
    if (!is_basic(g)) throw PreconditionError("only basic matrices have polynomial right inverses");
    SmithForm sf = smith_form(g);
    // s = u g v = [I 0]; hence g * (v [I;0] u) = u^{-1} [I 0] [I;0] u = I.
    PolyMatrix embed(g.field(), g.cols(), g.rows());
    for (std::size_t i = 0; i < g.rows(); ++i) embed.at(i, i) = Poly::constant(g.field(), 1);
    PolyMatrix h = sf.v * embed * sf.u;
    if (g * h != PolyMatrix::identity(g.field(), g.rows()))
        throw Error("internal: right inverse failed verification");
    return h;
}

bool is_unimodular(const PolyMatrix& w) {
    if (w.rows() != w.cols()) return false;
    Poly d = poly_det(w);
    return d.is_constant() && !d.is_zero();
}

namespace {

// Rightmost entry attaining the row degree; requires a nonzero row.
std::size_t pivot_col(const PolyMatrix& m, std::size_t i, int row_deg) {
    for (std::size_t j = m.cols(); j-- > 0;) {
        if (m.at(i, j).degree_or(-1) == row_deg) return j;
    }
    throw Error("internal: pivot scan on a zero row");
}

void sub_row(PolyMatrix& m, std::size_t i, const Poly& q, std::size_t j) {
    for (std::size_t c = 0; c < m.cols(); ++c) m.at(i, c) = m.at(i, c) - q * m.at(j, c);
}

}  // namespace

PolyMatrix popov_form(const PolyMatrix& g) {
    PolyMatrix m = g;
    std::size_t k = m.rows();
    const FieldPtr& f = m.field();

    auto row_deg = [&](std::size_t i) {
        auto d = m.row_degree(i);
        if (!d) throw PreconditionError("matrix does not have full row rank");
        return *d;
    };

    // Stage 1: weak Popov form.  While two rows share a pivot column,
    // cancel the leading term of the worse one against the better one.
    while (true) {
        std::map<std::size_t, std::vector<std::size_t>> by_pivot;
        for (std::size_t i = 0; i < k; ++i) by_pivot[pivot_col(m, i, row_deg(i))].push_back(i);
        bool changed = false;
        for (auto& [col, rows] : by_pivot) {
            if (rows.size() < 2) continue;
            // Reduce the higher-degree row by the lower; break degree ties
            // toward reducing the larger row index.
            std::size_t a = rows[0], b = rows[1];
            int da = row_deg(a), db = row_deg(b);
            std::size_t target = (da > db) ? a : b;
            std::size_t source = (da > db) ? b : a;
            int shift = std::abs(da - db);
            Elem c = f->mul(m.at(target, col).leading_coeff(), f->inv(m.at(source, col).leading_coeff()));
            Poly q = Poly::constant(f, c).shifted(shift);
            sub_row(m, target, q, source);
            changed = true;
            break;
        }
        if (!changed) break;
    }

    // Pivot data is now fixed.
    std::vector<int> degs(k);
    std::vector<std::size_t> pivots(k);
    for (std::size_t i = 0; i < k; ++i) {
        degs[i] = row_deg(i);
        pivots[i] = pivot_col(m, i, degs[i]);
    }

    // Stage 2: clear every entry sitting in another row's pivot column
    // down below that row's pivot degree.
    for (std::size_t i = 0; i < k; ++i) {
        while (true) {
            std::optional<std::size_t> offender;
            int worst = -1;
            for (std::size_t j = 0; j < k; ++j) {
                if (j == i) continue;
                int d = m.at(i, pivots[j]).degree_or(-1);
                if (d >= degs[j] && d > worst) {
                    worst = d;
                    offender = j;
                }
            }
            if (!offender) break;
            Poly q = m.at(i, pivots[*offender]).divrem(m.at(*offender, pivots[*offender])).quotient;
            sub_row(m, i, q, *offender);
        }
    }

    // Stage 3: monic pivots, rows ordered by pivot column.
    for (std::size_t i = 0; i < k; ++i) {
        Elem lc = m.at(i, pivots[i]).leading_coeff();
        if (lc != 1)
            for (std::size_t c = 0; c < m.cols(); ++c) m.at(i, c) = m.at(i, c).scaled(f->inv(lc));
    }
    std::vector<std::size_t> order(k);
    for (std::size_t i = 0; i < k; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return pivots[a] < pivots[b]; });
    PolyMatrix out(f, k, m.cols());
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t c = 0; c < m.cols(); ++c) out.at(i, c) = m.at(order[i], c);
    return out;
}

bool code_equal(const PolyMatrix& a, const PolyMatrix& b) {
    if (!same_field(a.field(), b.field())) throw PreconditionError("codes live over different fields");
    if (a.cols() != b.cols()) return false;
    if (a.rows() != b.rows()) return false;
    return popov_form(a) == popov_form(b);
}

std::vector<int> forney_indices(const PolyMatrix& g) {
    std::vector<int> degs = row_degrees(popov_form(g));
    std::sort(degs.rbegin(), degs.rend());
    return degs;
}

PolyMatrix apply_automorphism(const Automorphism& phi, const PolyMatrix& g) {
    PolyMatrix r(g.field(), g.rows(), g.cols());
    for (std::size_t i = 0; i < g.rows(); ++i)
        for (std::size_t j = 0; j < g.cols(); ++j) r.at(i, j) = apply_automorphism(phi, g.at(i, j));
    return r;
}

Mat apply_automorphism(const Automorphism& phi, const Mat& m) {
    Mat r(m.field(), m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r.at(i, j) = phi(m.at(i, j));
    return r;
}

}  // namespace convcode
