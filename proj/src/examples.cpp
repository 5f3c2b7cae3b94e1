#include "convcode/examples.hpp"

#include <vector>

namespace convcode::examples {

namespace {

Mat mk(const FieldPtr& f, const std::vector<std::vector<Elem>>& rows) {
    Mat m(f, rows.size(), rows.empty() ? 0 : rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (std::size_t j = 0; j < rows[i].size(); ++j) {
            m.at(i, j) = rows[i][j];
        }
    }
    return m;
}

PolyMatrix pmat(const FieldPtr& f, const std::vector<std::vector<std::vector<Elem>>>& rows) {
    PolyMatrix m(f, rows.size(), rows.empty() ? 0 : rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (std::size_t j = 0; j < rows[i].size(); ++j) {
            m.at(i, j) = Poly(f, rows[i][j]);
        }
    }
    return m;
}

WeightEnum we(const std::vector<std::pair<unsigned, std::uint64_t>>& terms) {
    WeightEnum e;
    for (const auto& [w, n] : terms) {
        e.add(w, n);
    }
    return e;
}

}  // namespace

PolyMatrix rate24_encoder() {
    const FieldPtr f = Field::make(2);
    return pmat(f, {{{0, 1}, {1, 0, 1}, {1, 1}, {0, 1, 1}}, {{1}, {}, {1}, {1}}});
}

StateSpace rate24_controller() {
    const FieldPtr f = Field::make(2);
    return StateSpace(mk(f, {{0, 1}, {0, 0}}), mk(f, {{1, 0}, {0, 0}}),
                      mk(f, {{1, 0, 1, 1}, {0, 1, 0, 1}}), mk(f, {{0, 1, 1, 0}, {1, 0, 1, 1}}));
}

Wam rate24_wam() {
    const FieldPtr f = Field::make(2);
    Wam lam(f, 2);
    lam.add(0, 0, we({{0, 1}, {3, 1}}));
    lam.add(0, 2, we({{2, 1}, {3, 1}}));
    lam.add(1, 0, we({{2, 1}, {3, 1}}));
    lam.add(1, 2, we({{1, 1}, {2, 1}}));
    lam.add(2, 1, we({{0, 1}, {3, 1}}));
    lam.add(2, 3, we({{2, 1}, {3, 1}}));
    lam.add(3, 1, we({{2, 1}, {3, 1}}));
    lam.add(3, 3, we({{1, 1}, {2, 1}}));
    return lam;
}

PolyMatrix rate23_encoder() {
    const FieldPtr f = Field::make(2);
    return pmat(f, {{{1}, {0, 1}, {1, 1}}, {{}, {1}, {0, 1}}});
}

StateSpace rate23_controller() {
    const FieldPtr f = Field::make(2);
    return StateSpace(Mat(f, 2, 2), Mat::identity(f, 2), mk(f, {{0, 1, 1}, {0, 0, 1}}),
                      mk(f, {{1, 0, 1}, {0, 1, 0}}));
}

FeedbackWitness rate23_feedback() {
    const FieldPtr f = Field::make(2);
    return FeedbackWitness{Mat::identity(f, 2), Mat::identity(f, 2), mk(f, {{0, 0}, {1, 0}})};
}

PolyMatrix rate23_moved_encoder() {
    const FieldPtr f = Field::make(2);
    return pmat(f, {{{1}, {0, 1}, {1, 1}}, {{0, 1}, {1, 0, 1}, {0, 0, 1}}});
}

StateSpace order_one_system() {
    const FieldPtr f = Field::make(3);
    return StateSpace(Mat(f, 1, 1), mk(f, {{2}, {1}}), mk(f, {{0, 0, 1}}),
                      mk(f, {{0, 1, 1}, {1, 0, 0}}));
}

PolyMatrix order_one_encoder() {
    const FieldPtr f = Field::make(3);
    return pmat(f, {{{}, {1}, {1, 2}}, {{1}, {}, {0, 1}}});
}

StateSpace nonbasic_system() {
    const FieldPtr f = Field::make(2);
    return StateSpace(mk(f, {{0, 1}, {0, 0}}), mk(f, {{1, 0}}), Mat::identity(f, 2),
                      mk(f, {{1, 1}}));
}

Mat block_code_pair(bool second) {
    const FieldPtr f = Field::make(2);
    if (second) {
        return mk(f, {{1, 1, 0, 0, 0, 0}, {1, 0, 1, 0, 0, 0}, {1, 1, 1, 1, 1, 1}});
    }
    return mk(f, {{1, 1, 0, 0, 0, 0}, {0, 0, 1, 1, 0, 0}, {1, 1, 1, 1, 1, 1}});
}

WeightEnum block_code_enumerator() {
    return we({{0, 1}, {2, 3}, {4, 3}, {6, 1}});
}

PolyMatrix zero_index_pair(bool second) {
    const FieldPtr f = Field::make(2);
    if (second) {
        return pmat(f, {{{1, 1}, {1}, {0, 1}, {}, {}, {}}, {{1}, {1}, {1}, {1}, {1}, {1}}});
    }
    return pmat(f, {{{1}, {1}, {0, 1}, {0, 1}, {}, {}}, {{1}, {1}, {1}, {1}, {1}, {1}}});
}

Wam zero_index_wam() {
    const FieldPtr f = Field::make(2);
    Wam lam(f, 1);
    lam.add(0, 0, we({{0, 1}, {6, 1}}));
    lam.add(0, 1, we({{2, 1}, {4, 1}}));
    lam.add(1, 0, we({{2, 1}, {4, 1}}));
    lam.add(1, 1, we({{2, 1}, {4, 1}}));
    return lam;
}

}  // namespace convcode::examples
