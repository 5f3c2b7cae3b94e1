#include <random>
#include <string>

#include "convcode/errors.hpp"
#include "convcode/sampling.hpp"
#include "convcode/statespace.hpp"
#include "convcode/textio.hpp"
#include "convcode/wam.hpp"
#include "doctest.h"
#include "helpers.hpp"

using namespace convcode;
using testutil::mk;
using testutil::pmat;

namespace {

PolyMatrix encoder_2x3(const FieldPtr& f2) {
    return pmat(f2, {{{1}, {0, 1}, {1, 1}}, {{}, {1}, {0, 1}}});
}

WeightEnum we(std::initializer_list<std::pair<unsigned, std::uint64_t>> terms) {
    WeightEnum e;
    for (auto [w, n] : terms) e.add(w, n);
    return e;
}

}  // namespace

TEST_CASE("field literals round-trip and reject malformed input") {
    for (const auto& [p, s] : {std::pair<int, int>{2, 1}, {3, 1}, {5, 1}, {2, 2}, {3, 2}, {2, 3}}) {
        const FieldPtr f = Field::make(p, s);
        const std::string lit = format_field(f);
        const FieldPtr g = parse_field(lit);
        CHECK(g->p() == f->p());
        CHECK(g->s() == f->s());
    }
    CHECK(format_field(Field::make(2)) == "GF(2)");
    CHECK(format_field(Field::make(3, 2)) == "GF(3^2)");
    CHECK(parse_field(" GF( 2 ^ 2 ) ")->q() == 4);
    CHECK_THROWS_AS(parse_field("GF(4)"), ParseError);
    CHECK_THROWS_AS(parse_field("GF(2^0)"), ParseError);
    CHECK_THROWS_AS(parse_field("GF()"), ParseError);
    CHECK_THROWS_AS(parse_field("GF(2"), ParseError);
    CHECK_THROWS_AS(parse_field("F(2)"), ParseError);
    CHECK_THROWS_AS(parse_field("GF(x)"), ParseError);
}

TEST_CASE("elements format and parse across prime and extension fields") {
    const FieldPtr f3 = Field::make(3);
    CHECK(format_element(f3, 0) == "0");
    CHECK(format_element(f3, 2) == "2");
    CHECK(parse_element(f3, "2") == 2);
    CHECK(parse_element(f3, "1+1") == 2);
    CHECK(parse_element(f3, "2+2") == 1);

    const FieldPtr f4 = Field::make(2, 2);
    const Elem a4 = f4->from_digits({0, 1});
    CHECK(format_element(f4, a4) == "a");
    CHECK(format_element(f4, f4->add(a4, 1)) == "a+1");
    CHECK(parse_element(f4, "a+1") == f4->add(a4, 1));
    CHECK(parse_element(f4, "a^2") == f4->mul(a4, a4));

    const FieldPtr f9 = Field::make(3, 2);
    const Elem a9 = f9->from_digits({0, 1});
    CHECK(format_element(f9, f9->add(f9->mul(2, a9), 1)) == "2a+1");
    CHECK(parse_element(f9, "2a+1") == f9->add(f9->mul(2, a9), 1));
    CHECK(parse_element(f9, "a+a") == f9->mul(2, a9));

    for (const auto& [p, s] : {std::pair<int, int>{2, 1}, {3, 1}, {2, 2}, {2, 3}, {3, 2}}) {
        const FieldPtr f = Field::make(p, s);
        for (Elem x = 0; x < f->q(); ++x) {
            CHECK(parse_element(f, format_element(f, x)) == x);
        }
    }
}

TEST_CASE("element parsing rejects out-of-range and malformed input") {
    const FieldPtr f2 = Field::make(2);
    const FieldPtr f3 = Field::make(3);
    const FieldPtr f4 = Field::make(2, 2);
    CHECK_THROWS_AS(parse_element(f2, "2"), ParseError);
    CHECK_THROWS_AS(parse_element(f3, "3"), ParseError);
    CHECK_THROWS_AS(parse_element(f4, "2a"), ParseError);
    CHECK_THROWS_AS(parse_element(f3, "a"), ParseError);
    CHECK_THROWS_AS(parse_element(f2, ""), ParseError);
    CHECK_THROWS_AS(parse_element(f2, "+"), ParseError);
    CHECK_THROWS_AS(parse_element(f2, "1+"), ParseError);
    CHECK_THROWS_AS(parse_element(f2, "b"), ParseError);
    CHECK_THROWS_AS(parse_element(f2, "z"), ParseError);
    CHECK_THROWS_AS(parse_element(f4, "a^"), ParseError);
}

TEST_CASE("polynomials format to golden strings and parse back") {
    const FieldPtr f2 = Field::make(2);
    const FieldPtr f3 = Field::make(3);
    const FieldPtr f4 = Field::make(2, 2);
    const Elem a4 = f4->from_digits({0, 1});

    CHECK(format_poly(Poly(f2, {1, 0, 1})) == "1+z^2");
    CHECK(format_poly(Poly(f3, {0, 2})) == "2z");
    CHECK(format_poly(Poly(f4, {a4, 0, 0, a4})) == "a+az^3");
    CHECK(format_poly(Poly(f4, {0, f4->add(a4, 1)})) == "az+z");
    CHECK(format_poly(Poly(f2, {})) == "0");
    CHECK(format_poly(Poly(f3, {0, 1})) == "z");
    CHECK(format_poly(Poly(f3, {0, 0, 2})) == "2z^2");

    CHECK(parse_poly(f2, "1+z^2") == Poly(f2, {1, 0, 1}));
    CHECK(parse_poly(f2, " 1 + z ^ 2 ") == Poly(f2, {1, 0, 1}));
    CHECK(parse_poly(f3, "2z") == Poly(f3, {0, 2}));
    CHECK(parse_poly(f4, "az+z") == Poly(f4, {0, f4->add(a4, 1)}));
    CHECK(parse_poly(f2, "z+z") == Poly(f2, {}));
    CHECK(parse_poly(f2, "z^0") == Poly(f2, {1}));
    CHECK(parse_poly(f2, "0") == Poly(f2, {}));
    CHECK(parse_poly(f2, "z^2+1") == Poly(f2, {1, 0, 1}));

    CHECK_THROWS_AS(parse_poly(f2, "z^"), ParseError);
    CHECK_THROWS_AS(parse_poly(f2, "z^100001"), ParseError);
    CHECK_THROWS_AS(parse_poly(f2, "1*z"), ParseError);
    CHECK_THROWS_AS(parse_poly(f2, "zz"), ParseError);

    std::mt19937_64 rng(11);
    for (const auto& [p, s] : {std::pair<int, int>{2, 1}, {3, 1}, {2, 2}, {3, 2}}) {
        const FieldPtr f = Field::make(p, s);
        for (int trial = 0; trial < 50; ++trial) {
            const Poly poly = convcode::random_poly(rng, f, 5);
            CHECK(parse_poly(f, format_poly(poly)) == poly);
        }
    }
}

TEST_CASE("parse errors carry 1-based line and column positions") {
    const FieldPtr f2 = Field::make(2);
    try {
        parse_poly(f2, "1+b");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.column == 3);
    }
    try {
        parse_polymat(f2, "1; z\n1; 0; 1\n");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line == 2);
    }
    try {
        parse_encoder_file("field: GF(2)\nmatrix:\n1; b\n");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line == 3);
        CHECK(e.column == 4);
    }
}

TEST_CASE("constant and polynomial matrices round-trip through text") {
    const FieldPtr f2 = Field::make(2);
    const FieldPtr f3 = Field::make(3);

    const Mat m = mk(f3, {{1, 2}, {0, 1}});
    CHECK(format_mat(m) == "1; 2\n0; 1\n");
    CHECK(parse_mat(f3, format_mat(m)) == m);
    CHECK(parse_mat(f3, "# comment\n1; 2\n\n0; 1\n") == m);
    CHECK_THROWS_AS(parse_mat(f3, "1; 2\n0\n"), ParseError);
    CHECK_THROWS_AS(parse_mat(f3, "1; z\n"), ParseError);
    CHECK_THROWS_AS(parse_mat(f3, ""), ParseError);

    const PolyMatrix g = encoder_2x3(f2);
    CHECK(format_polymat(g) == "1; z; 1+z\n0; 1; z\n");
    CHECK(parse_polymat(f2, format_polymat(g)) == g);

    std::mt19937_64 rng(7);
    for (const auto& [p, s] : {std::pair<int, int>{2, 1}, {3, 1}, {2, 2}}) {
        const FieldPtr f = Field::make(p, s);
        for (int trial = 0; trial < 20; ++trial) {
            const Mat c = convcode::random_mat(rng, f, 2, 3);
            CHECK(parse_mat(f, format_mat(c)) == c);
            const PolyMatrix r = testutil::random_polymat(rng, f, 3, 2, 4);
            CHECK(parse_polymat(f, format_polymat(r)) == r);
        }
    }
}

TEST_CASE("weight enumerators render with ascending powers") {
    CHECK(format_weight_enum(we({{0, 1}, {2, 3}, {4, 3}, {6, 1}})) == "1+3W^2+3W^4+W^6");
    CHECK(format_weight_enum(we({{1, 1}, {2, 1}})) == "W+W^2");
    CHECK(format_weight_enum(we({})) == "0");
    CHECK(format_weight_enum(we({{0, 4}})) == "4");
    CHECK(format_weight_enum(we({{1, 2}})) == "2W");
}

TEST_CASE("encoder files parse with comments, labels and inline rows") {
    const FieldPtr f2 = Field::make(2);
    const std::string text =
        "# a rate 2/3 encoder\n"
        "field: GF(2)\n"
        "label: demo\n"
        "matrix:\n"
        "1; z; 1+z\n"
        "\n"
        "0; 1; z\n";
    const EncoderFile file = parse_encoder_file(text);
    CHECK(file.field->q() == 2);
    CHECK(file.label == "demo");
    CHECK(file.matrix == encoder_2x3(f2));

    const std::string canon = format_encoder_file(file);
    CHECK(canon == "field: GF(2)\nlabel: demo\nmatrix:\n1; z; 1+z\n0; 1; z\n");
    CHECK(format_encoder_file(parse_encoder_file(canon)) == canon);

    const EncoderFile inline_row = parse_encoder_file("field: GF(2)\nmatrix: 1; z; 1+z\n0; 1; z\n");
    CHECK(inline_row.matrix == encoder_2x3(f2));
    CHECK(inline_row.label.empty());
}

TEST_CASE("encoder files reject structural mistakes") {
    CHECK_THROWS_AS(parse_encoder_file("matrix:\n1; z\n"), ParseError);
    CHECK_THROWS_AS(parse_encoder_file("field: GF(2)\n"), ParseError);
    CHECK_THROWS_AS(parse_encoder_file("field: GF(2)\nfield: GF(3)\nmatrix:\n1\n"), ParseError);
    CHECK_THROWS_AS(parse_encoder_file("field: GF(2)\nmatrix:\n1; z\nmatrix:\n1\n"), ParseError);
    CHECK_THROWS_AS(parse_encoder_file("field: GF(2)\nrows:\n1; z\n"), ParseError);
    CHECK_THROWS_AS(parse_encoder_file("1; z\nfield: GF(2)\n"), ParseError);
    CHECK_THROWS_AS(parse_encoder_file("field: GF(2)\nmatrix:\n1; z\nz; z^2\n"), ParseError);
}

TEST_CASE("system files round-trip controller forms and block codes") {
    const FieldPtr f2 = Field::make(2);
    const StateSpace sys = controller_form(encoder_2x3(f2));
    const std::string text = format_system_file(sys, "demo system");
    const StateSpace back = parse_system_file(text);
    CHECK(back.a == sys.a);
    CHECK(back.b == sys.b);
    CHECK(back.c == sys.c);
    CHECK(back.d == sys.d);

    const StateSpace flat = StateSpace::block_code(mk(f2, {{1, 0, 1}, {0, 1, 1}}));
    const std::string flat_text = format_system_file(flat);
    CHECK(flat_text == "field: GF(2)\nD:\n1; 0; 1\n0; 1; 1\n");
    const StateSpace flat_back = parse_system_file(flat_text);
    CHECK(flat_back.delta() == 0);
    CHECK(flat_back.d == flat.d);

    CHECK_THROWS_AS(parse_system_file("field: GF(2)\nA:\n0\nD:\n1\n"), ParseError);
    CHECK_THROWS_AS(parse_system_file("field: GF(2)\nA:\n0\nB:\n1\nC:\n1; 1\n"), ParseError);
    CHECK_THROWS_AS(
        parse_system_file("field: GF(2)\nA:\n0; 0\nB:\n1\nC:\n1; 1\nD:\n1; 1\n"),
        ParseError);
}

TEST_CASE("file classification distinguishes encoders from systems") {
    CHECK(classify_file("field: GF(2)\nmatrix:\n1; z\n") == TextFileKind::encoder);
    CHECK(classify_file("field: GF(2)\nD:\n1; 1\n") == TextFileKind::system);
    CHECK(classify_file("field: GF(2)\nA:\n0\nB:\n1\nC:\n1; 1\nD:\n1; 1\n") ==
          TextFileKind::system);
    CHECK_THROWS_AS(classify_file("field: GF(2)\nmatrix:\n1\nD:\n1\n"), ParseError);
    CHECK_THROWS_AS(classify_file("field: GF(2)\n"), ParseError);
}

TEST_CASE("weight adjacency matrices round-trip through json") {
    const FieldPtr f2 = Field::make(2);
    const Wam lam = compute_wam(controller_form(encoder_2x3(f2)));
    const nlohmann::json j = wam_to_json(lam);
    CHECK(j["field"] == "GF(2)");
    CHECK(j["delta"] == 2);
    CHECK(j["entries"].size() == 16);
    CHECK(j["entries"][0]["from"] == "00");
    CHECK(j["entries"][0]["to"] == "00");

    const Wam back = wam_from_json(j);
    CHECK(back.delta() == lam.delta());
    CHECK(back.entries() == lam.entries());
    CHECK(wam_to_json(back) == j);

    const Wam flat = compute_wam(StateSpace::block_code(mk(f2, {{1, 1, 0}, {0, 1, 1}})));
    const nlohmann::json jf = wam_to_json(flat);
    CHECK(jf["delta"] == 0);
    CHECK(jf["entries"][0]["from"] == "");
    const Wam flat_back = wam_from_json(jf);
    CHECK(flat_back.entries() == flat.entries());

    const FieldPtr f11 = Field::make(11);
    Wam wide(f11, 2);
    wide.add(0, 12, we({{3, 2}}));
    const nlohmann::json jw = wam_to_json(wide);
    const Wam wide_back = wam_from_json(jw);
    CHECK(wide_back.entries() == wide.entries());

    nlohmann::json bad = j;
    bad["entries"][0]["from"] = "000";
    CHECK_THROWS_AS(wam_from_json(bad), ParseError);
    bad = j;
    bad["entries"][0]["enum"] = {{"x", 1}};
    CHECK_THROWS_AS(wam_from_json(bad), ParseError);
    bad = j;
    bad.erase("field");
    CHECK_THROWS_AS(wam_from_json(bad), ParseError);
    bad = j;
    bad["entries"][0]["from"] = "20";
    CHECK_THROWS_AS(wam_from_json(bad), ParseError);
}
