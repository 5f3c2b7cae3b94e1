#pragma once

#include <string>

#include "convcode/field.hpp"
#include "convcode/matrix.hpp"
#include "convcode/poly.hpp"
#include "convcode/polymatrix.hpp"
#include "convcode/statespace.hpp"
#include "convcode/wam.hpp"
#include "json.hpp"

namespace convcode {

// Text grammar shared by all file formats.
//
//   field literal   GF(p) or GF(p^s), e.g. GF(2), GF(3^2)
//   element         sum of atoms: a decimal digit below the characteristic,
//                   optionally times a power of the extension generator a,
//                   e.g. 2, a+1, 2a^3+a
//   polynomial      sum of terms c, cz, cz^e with ascending powers on
//                   output, e.g. 1+z^2, 2z, a+az^3
//   matrix          one row per line, entries separated by ';'
//
// Whitespace is insignificant inside entries; lines whose first nonblank
// character is '#' are comments.  Parse errors carry 1-based line/column
// positions (0 = unknown).

std::string format_field(const FieldPtr& f);
FieldPtr parse_field(const std::string& text);

std::string format_element(const FieldPtr& f, Elem x);
Elem parse_element(const FieldPtr& f, const std::string& text);

std::string format_poly(const Poly& p);
Poly parse_poly(const FieldPtr& f, const std::string& text);

std::string format_mat(const Mat& m);
Mat parse_mat(const FieldPtr& f, const std::string& text);

std::string format_polymat(const PolyMatrix& g);
PolyMatrix parse_polymat(const FieldPtr& f, const std::string& text);

// Ascending powers, 1 for W^0 and W for W^1, e.g. 1+3W^2+3W^4+W^6.
std::string format_weight_enum(const WeightEnum& e);

// Digit-string name of a state of a delta-register over f: concatenated
// digits when q <= 10, comma-separated coordinates otherwise, empty for
// delta = 0.
std::string format_state(const FieldPtr& f, std::uint32_t delta, std::uint64_t code);

// Encoder file: a `field:` line, an optional `label:` line and a
// `matrix:` section holding the polynomial matrix rows.  The matrix must
// come out with full row rank.
struct EncoderFile {
    FieldPtr field;
    PolyMatrix matrix;
    std::string label;  // empty when absent
};

EncoderFile parse_encoder_file(const std::string& text);
std::string format_encoder_file(const EncoderFile& file);

// System file: a `field:` line, an optional `label:` line and matrix
// sections `A:`, `B:`, `C:`, `D:`.  Order-zero systems supply `D:` only.
StateSpace parse_system_file(const std::string& text);
std::string format_system_file(const StateSpace& sys, const std::string& label = "");

enum class TextFileKind { encoder, system };

// Distinguishes the two file formats by their sections.
TextFileKind classify_file(const std::string& text);

// JSON schema for weight adjacency matrices: field descriptor, delta and
// records {from, to, enum} with states as digit strings and enumerators
// as weight -> count maps, sorted by (from, to) for byte-stable output.
nlohmann::json wam_to_json(const Wam& lam);
Wam wam_from_json(const nlohmann::json& j);

}  // namespace convcode
