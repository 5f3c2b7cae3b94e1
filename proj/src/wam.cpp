#include "convcode/wam.hpp"

#include <limits>

#include "convcode/errors.hpp"

namespace convcode {

namespace {

std::optional<std::uint64_t> checked_pow(std::uint64_t base, std::uint64_t e) {
    std::uint64_t r = 1;
    for (std::uint64_t i = 0; i < e; ++i) {
        if (base != 0 && r > std::numeric_limits<std::uint64_t>::max() / base)
            return std::nullopt;
        r *= base;
    }
    return r;
}

}  // namespace

WeightEnum WeightEnum::monomial(unsigned w, std::uint64_t count) {
    WeightEnum e;
    e.add(w, count);
    return e;
}

void WeightEnum::add(unsigned w, std::uint64_t count) {
    if (count == 0) return;
    c_[w] += count;
}

WeightEnum& WeightEnum::operator+=(const WeightEnum& o) {
    for (auto [w, n] : o.c_) c_[w] += n;
    return *this;
}

WeightEnum WeightEnum::operator+(const WeightEnum& o) const {
    WeightEnum r = *this;
    r += o;
    return r;
}

WeightEnum WeightEnum::operator*(const WeightEnum& o) const {
    WeightEnum r;
    for (auto [w1, n1] : c_)
        for (auto [w2, n2] : o.c_) r.add(w1 + w2, n1 * n2);
    return r;
}

std::uint64_t WeightEnum::total() const {
    std::uint64_t t = 0;
    for (auto [w, n] : c_) t += n;
    return t;
}

std::size_t weight(const Mat& v) {
    std::size_t w = 0;
    for (std::size_t i = 0; i < v.rows(); ++i)
        for (std::size_t j = 0; j < v.cols(); ++j)
            if (v.at(i, j) != 0) ++w;
    return w;
}

std::size_t weight(const PolyMatrix& v) {
    std::size_t w = 0;
    for (std::size_t i = 0; i < v.rows(); ++i)
        for (std::size_t j = 0; j < v.cols(); ++j) w += v.at(i, j).weight();
    return w;
}

Wam::Wam(FieldPtr f, std::uint32_t delta) : f_(std::move(f)), delta_(delta) {
    auto n = checked_pow(f_->q(), delta_);
    if (!n) throw CapExceededError("state space size q^delta overflows");
    states_ = *n;
}

const WeightEnum& Wam::entry(std::uint64_t x, std::uint64_t y) const {
    static const WeightEnum kZero;
    auto it = e_.find({x, y});
    return it == e_.end() ? kZero : it->second;
}

void Wam::add(std::uint64_t x, std::uint64_t y, const WeightEnum& e) {
    if (e.is_zero()) return;
    if (x >= states_ || y >= states_) throw PreconditionError("state index out of range");
    e_[{x, y}] += e;
}

bool Wam::operator==(const Wam& o) const {
    return same_field(f_, o.f_) && delta_ == o.delta_ && e_ == o.e_;
}

WeightEnum block_weight_enumerator(const Mat& g) {
    if (mat_rank(g) != g.rows()) throw PreconditionError("block encoder must have full row rank");
    const FieldPtr& f = g.field();
    auto words = checked_pow(f->q(), g.rows());
    if (!words || *words > kDefaultSearchCap)
        throw CapExceededError("too many codewords to enumerate");
    WeightEnum e;
    for (std::uint64_t u = 0; u < *words; ++u)
        e.add(static_cast<unsigned>(weight(code_to_row(f, static_cast<std::uint32_t>(g.rows()), u) * g)));
    return e;
}

WeightEnum block_weight_enumerator(const PolyMatrix& g) {
    if (!g.is_constant()) throw PreconditionError("block encoder must be constant");
    return block_weight_enumerator(g.coeff(0));
}

Wam compute_wam(const StateSpace& sys, std::uint64_t max_states) {
    const FieldPtr& f = sys.field();
    auto states = checked_pow(f->q(), sys.delta());
    if (!states || *states > max_states)
        throw CapExceededError("state space larger than the configured cap");
    auto inputs = checked_pow(f->q(), sys.inputs());
    if (!inputs || *inputs > kDefaultSearchCap)
        throw CapExceededError("too many inputs to enumerate");

    Wam lam(f, static_cast<std::uint32_t>(sys.delta()));
    std::uint32_t delta = static_cast<std::uint32_t>(sys.delta());
    std::uint32_t k = static_cast<std::uint32_t>(sys.inputs());
    for (std::uint64_t x = 0; x < *states; ++x) {
        Mat xv = code_to_row(f, delta, x);
        Mat xa = xv * sys.a;
        Mat xc = xv * sys.c;
        for (std::uint64_t u = 0; u < *inputs; ++u) {
            Mat uv = code_to_row(f, k, u);
            std::uint64_t y = row_to_code(xa + uv * sys.b);
            unsigned w = static_cast<unsigned>(weight(xc + uv * sys.d));
            lam.add(x, y, WeightEnum::monomial(w));
        }
    }
    return lam;
}

Wam relabel_wam(const Wam& lam, const Mat& t, const Automorphism& phi) {
    if (!same_field(lam.field(), t.field()) || !same_field(lam.field(), phi.field))
        throw PreconditionError("relabeling data lives over the wrong field");
    if (t.rows() != lam.delta() || t.cols() != lam.delta() || !is_invertible(t))
        throw PreconditionError("relabeling matrix must be invertible delta x delta");

    // Entry (v, w) of the input shows up at (X, Y) in the output where
    // v = phi(X)T, i.e. X = phi^{-1}(v T^{-1}).
    Mat t_inv = mat_inverse(t);
    Automorphism phi_inv = phi.inverse();
    auto pull_back = [&](std::uint64_t s) {
        Mat row = apply_automorphism(phi_inv, code_to_row(lam.field(), lam.delta(), s) * t_inv);
        return row_to_code(row);
    };
    Wam out(lam.field(), lam.delta());
    for (const auto& [key, e] : lam.entries())
        out.add(pull_back(key.first), pull_back(key.second), e);
    return out;
}

WamEquivalence wam_equivalent(const Wam& a, const Wam& b, bool allow_automorphisms,
                              std::uint64_t search_cap) {
    if (!same_field(a.field(), b.field()))
        throw PreconditionError("adjacency matrices over different fields");
    if (a.delta() != b.delta())
        throw PreconditionError("adjacency matrices of different state space dimension");

    const FieldPtr& f = a.field();
    std::vector<Automorphism> autos =
        allow_automorphisms ? automorphisms(f)
                            : std::vector<Automorphism>{identity_automorphism(f)};
    auto order = gl_order(f->q(), a.delta());
    if (!order || *order > search_cap / autos.size())
        throw CapExceededError("GL search space larger than the configured cap");

    WamEquivalence res;
    Mat id = Mat::identity(f, a.delta());
    ++res.search_size;
    if (a == b) {
        res.equivalent = true;
        res.t = id;
        res.phi = autos.front();
        return res;
    }
    for (const Automorphism& phi : autos) {
        GlEnumerator gl(f, a.delta());
        while (auto t = gl.next()) {
            if (phi.is_identity() && *t == id) continue;  // probed above
            ++res.search_size;
            if (relabel_wam(a, *t, phi) == b) {
                res.equivalent = true;
                res.t = std::move(*t);
                res.phi = phi;
                return res;
            }
        }
    }
    return res;
}

WeightEnum truncated_enumerator(const Wam& lam, unsigned n) {
    std::map<std::uint64_t, WeightEnum> state;
    state[0] = WeightEnum::one();
    for (unsigned step = 0; step < n; ++step) {
        std::map<std::uint64_t, WeightEnum> next;
        for (const auto& [key, e] : lam.entries()) {
            auto it = state.find(key.first);
            if (it == state.end()) continue;
            WeightEnum contrib = it->second * e;
            if (!contrib.is_zero()) next[key.second] += contrib;
        }
        state = std::move(next);
    }
    auto it = state.find(0);
    return it == state.end() ? WeightEnum() : it->second;
}

}  // namespace convcode
