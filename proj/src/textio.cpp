#include "convcode/textio.hpp"

#include <cctype>
#include <cstdint>
#include <sstream>
#include <utility>
#include <vector>

#include "convcode/errors.hpp"

namespace convcode {

namespace {

bool is_digit(char ch) {
    return std::isdigit(static_cast<unsigned char>(ch)) != 0;
}

bool is_space(char ch) {
    return std::isspace(static_cast<unsigned char>(ch)) != 0;
}

std::string trim(const std::string& s) {
    std::size_t b = 0;
    std::size_t e = s.size();
    while (b < e && is_space(s[b])) ++b;
    while (e > b && is_space(s[e - 1])) --e;
    return s.substr(b, e - b);
}

bool blank_or_comment(const std::string& line) {
    for (const char ch : line) {
        if (ch == '#') {
            return true;
        }
        if (!is_space(ch)) {
            return false;
        }
    }
    return true;
}

std::vector<std::string> split_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::string cur;
    for (const char ch : text) {
        if (ch == '\n') {
            lines.push_back(std::move(cur));
            cur.clear();
        } else if (ch != '\r') {
            cur += ch;
        }
    }
    if (!cur.empty()) {
        lines.push_back(std::move(cur));
    }
    return lines;
}

// Entry text with whitespace removed, remembering the original 1-based
// column of every kept character for error reporting.
struct Cleaned {
    std::string text;
    std::vector<int> col;

    int col_at(std::size_t i, int fallback) const {
        if (i < col.size()) {
            return col[i];
        }
        return col.empty() ? fallback : col.back() + 1;
    }
};

Cleaned strip_spaces(const std::string& raw, int col_base) {
    Cleaned c;
    for (std::size_t i = 0; i < raw.size(); ++i) {
        if (!is_space(raw[i])) {
            c.text += raw[i];
            c.col.push_back(col_base + static_cast<int>(i));
        }
    }
    return c;
}

constexpr std::uint64_t kMaxExponent = 100000;

// Core term-by-term polynomial parser; with allow_z false only constant
// field elements pass.
Poly parse_poly_at(const FieldPtr& f, const std::string& raw, bool allow_z, int line,
                   int col_base) {
    if (!f) {
        throw ParseError("no field in scope", line, col_base);
    }
    const Cleaned c = strip_spaces(raw, col_base);
    if (c.text.empty()) {
        throw ParseError("empty entry", line, col_base);
    }
    const std::uint32_t p = f->p();
    const Elem gen = f->prime() ? 0 : f->from_digits({0, 1});
    std::vector<Elem> coeffs;
    std::size_t pos = 0;
    const auto scan_number = [&](const char* what) {
        if (pos >= c.text.size() || !is_digit(c.text[pos])) {
            throw ParseError(std::string("expected ") + what, line, c.col_at(pos, col_base));
        }
        std::uint64_t value = 0;
        while (pos < c.text.size() && is_digit(c.text[pos])) {
            value = value * 10 + static_cast<std::uint64_t>(c.text[pos] - '0');
            if (value > 1'000'000'000) {
                throw ParseError("number too large", line, c.col_at(pos, col_base));
            }
            ++pos;
        }
        return value;
    };
    while (true) {
        const std::size_t term_start = pos;
        bool have_digits = false;
        Elem value = 1;
        if (pos < c.text.size() && is_digit(c.text[pos])) {
            have_digits = true;
            const std::uint64_t d = scan_number("a number");
            if (d >= p) {
                throw ParseError("coefficient must lie below the characteristic " +
                                     std::to_string(p),
                                 line, c.col_at(term_start, col_base));
            }
            value = static_cast<Elem>(d);
        }
        bool have_a = false;
        if (pos < c.text.size() && c.text[pos] == 'a') {
            if (f->prime()) {
                throw ParseError("generator symbol a needs an extension field", line,
                                 c.col_at(pos, col_base));
            }
            have_a = true;
            ++pos;
            std::uint64_t e = 1;
            if (pos < c.text.size() && c.text[pos] == '^') {
                ++pos;
                e = scan_number("an exponent after '^'");
            }
            value = f->mul(value, f->pow(gen, e));
        }
        std::uint64_t zdeg = 0;
        bool have_z = false;
        if (pos < c.text.size() && c.text[pos] == 'z') {
            if (!allow_z) {
                throw ParseError("a constant field element is required here", line,
                                 c.col_at(pos, col_base));
            }
            have_z = true;
            ++pos;
            zdeg = 1;
            if (pos < c.text.size() && c.text[pos] == '^') {
                ++pos;
                zdeg = scan_number("an exponent after '^'");
                if (zdeg > kMaxExponent) {
                    throw ParseError("exponent too large", line, c.col_at(term_start, col_base));
                }
            }
        }
        if (!have_digits && !have_a && !have_z) {
            throw ParseError(std::string("unexpected character '") + c.text[pos] + "'", line,
                             c.col_at(pos, col_base));
        }
        if (coeffs.size() <= zdeg) {
            coeffs.resize(zdeg + 1, 0);
        }
        coeffs[zdeg] = f->add(coeffs[zdeg], value);
        if (pos == c.text.size()) {
            break;
        }
        if (c.text[pos] != '+') {
            throw ParseError(std::string("unexpected character '") + c.text[pos] + "'", line,
                             c.col_at(pos, col_base));
        }
        ++pos;
        if (pos == c.text.size()) {
            throw ParseError("trailing '+'", line, c.col_at(pos - 1, col_base));
        }
    }
    return Poly(f, std::move(coeffs));
}

// One parsed content line of a matrix section.
using NumberedLine = std::pair<int, std::string>;

PolyMatrix parse_matrix_lines(const FieldPtr& f, const std::vector<NumberedLine>& rows,
                              bool allow_z, int context_line) {
    if (rows.empty()) {
        throw ParseError("matrix needs at least one row", context_line, 1);
    }
    std::vector<std::vector<Poly>> parsed;
    std::size_t cols = 0;
    for (const auto& [line_no, raw] : rows) {
        std::vector<Poly> row;
        std::size_t start = 0;
        while (true) {
            const std::size_t semi = raw.find(';', start);
            const std::string piece =
                semi == std::string::npos ? raw.substr(start) : raw.substr(start, semi - start);
            row.push_back(parse_poly_at(f, piece, allow_z, line_no, static_cast<int>(start) + 1));
            if (semi == std::string::npos) {
                break;
            }
            start = semi + 1;
        }
        if (parsed.empty()) {
            cols = row.size();
        } else if (row.size() != cols) {
            throw ParseError("ragged matrix row: expected " + std::to_string(cols) +
                                 " entries, got " + std::to_string(row.size()),
                             line_no, 1);
        }
        parsed.push_back(std::move(row));
    }
    PolyMatrix m(f, parsed.size(), cols);
    for (std::size_t i = 0; i < parsed.size(); ++i) {
        for (std::size_t j = 0; j < cols; ++j) {
            m.at(i, j) = std::move(parsed[i][j]);
        }
    }
    return m;
}

Mat constant_part(const PolyMatrix& g) {
    Mat m(g.field(), g.rows(), g.cols());
    for (std::size_t i = 0; i < g.rows(); ++i) {
        for (std::size_t j = 0; j < g.cols(); ++j) {
            m.at(i, j) = g.at(i, j).coeff(0);
        }
    }
    return m;
}

// A labeled file section: `key:` with an optional inline value and the
// content lines that follow it.
struct Section {
    std::string key;
    std::string inline_value;
    int line = 0;
    std::vector<NumberedLine> content;
};

std::vector<Section> scan_sections(const std::string& text) {
    std::vector<Section> out;
    const std::vector<std::string> lines = split_lines(text);
    for (std::size_t idx = 0; idx < lines.size(); ++idx) {
        const std::string& raw = lines[idx];
        const int line_no = static_cast<int>(idx) + 1;
        if (blank_or_comment(raw)) {
            continue;
        }
        std::size_t i = 0;
        while (i < raw.size() && is_space(raw[i])) ++i;
        std::size_t k = i;
        while (k < raw.size() &&
               (std::isalnum(static_cast<unsigned char>(raw[k])) != 0 || raw[k] == '_')) {
            ++k;
        }
        if (k > i && k < raw.size() && raw[k] == ':') {
            out.push_back(Section{raw.substr(i, k - i), trim(raw.substr(k + 1)), line_no, {}});
            continue;
        }
        if (out.empty()) {
            throw ParseError("expected a section header like 'field:'", line_no, 1);
        }
        out.back().content.emplace_back(line_no, raw);
    }
    return out;
}

FieldPtr parse_field_at(const std::string& text, int line) {
    const Cleaned c = strip_spaces(text, 1);
    const std::string& s = c.text;
    const auto fail = [&](const std::string& why) -> ParseError {
        return ParseError("bad field literal '" + trim(text) + "': " + why, line, 1);
    };
    if (s.size() < 5 || s.compare(0, 3, "GF(") != 0 || s.back() != ')') {
        throw fail("expected GF(p) or GF(p^s)");
    }
    const std::string inner = s.substr(3, s.size() - 4);
    const std::size_t caret = inner.find('^');
    const auto number = [&](const std::string& part) -> std::uint32_t {
        if (part.empty()) {
            throw fail("missing number");
        }
        std::uint64_t value = 0;
        for (const char ch : part) {
            if (!is_digit(ch)) {
                throw fail("expected digits");
            }
            value = value * 10 + static_cast<std::uint64_t>(ch - '0');
            if (value > 1'000'000) {
                throw fail("number too large");
            }
        }
        return static_cast<std::uint32_t>(value);
    };
    const std::uint32_t p = number(caret == std::string::npos ? inner : inner.substr(0, caret));
    const std::uint32_t deg = caret == std::string::npos ? 1 : number(inner.substr(caret + 1));
    try {
        return Field::make(p, deg);
    } catch (const Error& e) {
        throw fail(e.what());
    }
}

// Shared element renderer: the nonzero generator-power atoms of x in
// descending powers, each optionally multiplied by z^zdeg.
void append_element_atoms(std::vector<std::string>& pieces, const FieldPtr& f, Elem x,
                          std::uint64_t zdeg) {
    const std::vector<std::uint32_t> digits = f->digits(x);
    for (std::size_t jj = digits.size(); jj > 0; --jj) {
        const std::size_t j = jj - 1;
        const std::uint32_t d = digits[j];
        if (d == 0) {
            continue;
        }
        std::string term;
        if (j == 0) {
            if (d != 1 || zdeg == 0) {
                term += std::to_string(d);
            }
        } else {
            if (d != 1) {
                term += std::to_string(d);
            }
            term += "a";
            if (j > 1) {
                term += "^" + std::to_string(j);
            }
        }
        if (zdeg >= 1) {
            term += "z";
            if (zdeg > 1) {
                term += "^" + std::to_string(zdeg);
            }
        }
        pieces.push_back(std::move(term));
    }
}

std::string join_terms(const std::vector<std::string>& pieces) {
    if (pieces.empty()) {
        return "0";
    }
    std::string out;
    for (std::size_t i = 0; i < pieces.size(); ++i) {
        if (i) {
            out += "+";
        }
        out += pieces[i];
    }
    return out;
}

std::uint64_t state_code(const FieldPtr& f, std::uint32_t delta, const std::string& s) {
    Mat row(f, 1, delta);
    if (f->q() <= 10) {
        if (s.size() != delta) {
            throw ParseError("state '" + s + "' needs exactly " + std::to_string(delta) +
                             " digits");
        }
        for (std::size_t j = 0; j < delta; ++j) {
            if (!is_digit(s[j]) || static_cast<std::uint32_t>(s[j] - '0') >= f->q()) {
                throw ParseError("state '" + s + "' has a digit outside the field");
            }
            row.at(0, j) = static_cast<Elem>(s[j] - '0');
        }
    } else {
        std::size_t j = 0;
        std::size_t start = 0;
        while (j < delta) {
            const std::size_t comma = s.find(',', start);
            const std::string piece =
                comma == std::string::npos ? s.substr(start) : s.substr(start, comma - start);
            if (piece.empty()) {
                throw ParseError("state '" + s + "' has an empty coordinate");
            }
            std::uint64_t value = 0;
            for (const char ch : piece) {
                if (!is_digit(ch)) {
                    throw ParseError("state '" + s + "' has a non-numeric coordinate");
                }
                value = value * 10 + static_cast<std::uint64_t>(ch - '0');
            }
            if (value >= f->q()) {
                throw ParseError("state '" + s + "' has a coordinate outside the field");
            }
            row.at(0, j) = static_cast<Elem>(value);
            ++j;
            if (comma == std::string::npos) {
                start = s.size();
                break;
            }
            start = comma + 1;
        }
        if (j != delta || start != s.size()) {
            throw ParseError("state '" + s + "' needs exactly " + std::to_string(delta) +
                             " coordinates");
        }
    }
    return row_to_code(row);
}

}  // namespace

std::string format_state(const FieldPtr& f, std::uint32_t delta, std::uint64_t code) {
    const Mat row = code_to_row(f, delta, code);
    std::string s;
    for (std::size_t j = 0; j < delta; ++j) {
        const Elem coord = row.at(0, j);
        if (f->q() <= 10) {
            s += static_cast<char>('0' + coord);
        } else {
            if (j) {
                s += ',';
            }
            s += std::to_string(coord);
        }
    }
    return s;
}

std::string format_field(const FieldPtr& f) {
    return f->describe();
}

FieldPtr parse_field(const std::string& text) {
    return parse_field_at(text, 0);
}

std::string format_element(const FieldPtr& f, Elem x) {
    std::vector<std::string> pieces;
    append_element_atoms(pieces, f, x, 0);
    return join_terms(pieces);
}

Elem parse_element(const FieldPtr& f, const std::string& text) {
    return parse_poly_at(f, text, false, 0, 1).coeff(0);
}

std::string format_poly(const Poly& p) {
    std::vector<std::string> pieces;
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
        if (p.coeff(i) != 0) {
            append_element_atoms(pieces, p.field(), p.coeff(i), i);
        }
    }
    return join_terms(pieces);
}

Poly parse_poly(const FieldPtr& f, const std::string& text) {
    return parse_poly_at(f, text, true, 0, 1);
}

std::string format_mat(const Mat& m) {
    std::ostringstream os;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            os << (j ? "; " : "") << format_element(m.field(), m.at(i, j));
        }
        os << '\n';
    }
    return os.str();
}

Mat parse_mat(const FieldPtr& f, const std::string& text) {
    std::vector<NumberedLine> rows;
    const std::vector<std::string> lines = split_lines(text);
    for (std::size_t idx = 0; idx < lines.size(); ++idx) {
        if (!blank_or_comment(lines[idx])) {
            rows.emplace_back(static_cast<int>(idx) + 1, lines[idx]);
        }
    }
    return constant_part(parse_matrix_lines(f, rows, false, 1));
}

std::string format_polymat(const PolyMatrix& g) {
    std::ostringstream os;
    for (std::size_t i = 0; i < g.rows(); ++i) {
        for (std::size_t j = 0; j < g.cols(); ++j) {
            os << (j ? "; " : "") << format_poly(g.at(i, j));
        }
        os << '\n';
    }
    return os.str();
}

PolyMatrix parse_polymat(const FieldPtr& f, const std::string& text) {
    std::vector<NumberedLine> rows;
    const std::vector<std::string> lines = split_lines(text);
    for (std::size_t idx = 0; idx < lines.size(); ++idx) {
        if (!blank_or_comment(lines[idx])) {
            rows.emplace_back(static_cast<int>(idx) + 1, lines[idx]);
        }
    }
    return parse_matrix_lines(f, rows, true, 1);
}

std::string format_weight_enum(const WeightEnum& e) {
    std::vector<std::string> pieces;
    for (const auto& [w, count] : e.coeffs()) {
        std::string term;
        if (w == 0) {
            term = std::to_string(count);
        } else {
            if (count != 1) {
                term += std::to_string(count);
            }
            term += "W";
            if (w > 1) {
                term += "^" + std::to_string(w);
            }
        }
        pieces.push_back(std::move(term));
    }
    return join_terms(pieces);
}

EncoderFile parse_encoder_file(const std::string& text) {
    const std::vector<Section> sections = scan_sections(text);
    FieldPtr field;
    std::string label;
    const Section* matrix_sec = nullptr;
    for (const Section& sec : sections) {
        if (sec.key == "field") {
            if (field) {
                throw ParseError("duplicate field section", sec.line, 1);
            }
            if (!sec.content.empty()) {
                throw ParseError("field section takes a single value", sec.content[0].first, 1);
            }
            field = parse_field_at(sec.inline_value, sec.line);
        } else if (sec.key == "label") {
            if (!sec.content.empty()) {
                throw ParseError("label section takes a single value", sec.content[0].first, 1);
            }
            label = sec.inline_value;
        } else if (sec.key == "matrix") {
            if (matrix_sec) {
                throw ParseError("duplicate matrix section", sec.line, 1);
            }
            matrix_sec = &sec;
        } else {
            throw ParseError("unknown section '" + sec.key + "'", sec.line, 1);
        }
    }
    if (!field) {
        throw ParseError("missing field section");
    }
    if (!matrix_sec) {
        throw ParseError("missing matrix section");
    }
    std::vector<NumberedLine> rows;
    if (!matrix_sec->inline_value.empty()) {
        rows.emplace_back(matrix_sec->line, matrix_sec->inline_value);
    }
    rows.insert(rows.end(), matrix_sec->content.begin(), matrix_sec->content.end());
    PolyMatrix matrix = parse_matrix_lines(field, rows, true, matrix_sec->line);
    if (invariant_factors(matrix).size() != matrix.rows()) {
        throw ParseError("encoder matrix is not full row rank", matrix_sec->line, 1);
    }
    return EncoderFile{std::move(field), std::move(matrix), std::move(label)};
}

std::string format_encoder_file(const EncoderFile& file) {
    std::ostringstream os;
    os << "field: " << format_field(file.field) << '\n';
    if (!file.label.empty()) {
        os << "label: " << file.label << '\n';
    }
    os << "matrix:\n" << format_polymat(file.matrix);
    return os.str();
}

StateSpace parse_system_file(const std::string& text) {
    const std::vector<Section> sections = scan_sections(text);
    FieldPtr field;
    const Section* parts[4] = {nullptr, nullptr, nullptr, nullptr};
    const std::string names = "ABCD";
    for (const Section& sec : sections) {
        if (sec.key == "field") {
            if (field) {
                throw ParseError("duplicate field section", sec.line, 1);
            }
            if (!sec.content.empty()) {
                throw ParseError("field section takes a single value", sec.content[0].first, 1);
            }
            field = parse_field_at(sec.inline_value, sec.line);
        } else if (sec.key == "label") {
            continue;
        } else if (sec.key.size() == 1 && names.find(sec.key[0]) != std::string::npos) {
            const std::size_t which = names.find(sec.key[0]);
            if (parts[which]) {
                throw ParseError("duplicate " + sec.key + " section", sec.line, 1);
            }
            parts[which] = &sec;
        } else {
            throw ParseError("unknown section '" + sec.key + "'", sec.line, 1);
        }
    }
    if (!field) {
        throw ParseError("missing field section");
    }
    if (!parts[3]) {
        throw ParseError("missing D section");
    }
    const auto read_part = [&](const Section* sec) {
        std::vector<NumberedLine> rows;
        if (!sec->inline_value.empty()) {
            rows.emplace_back(sec->line, sec->inline_value);
        }
        rows.insert(rows.end(), sec->content.begin(), sec->content.end());
        return constant_part(parse_matrix_lines(field, rows, false, sec->line));
    };
    const Mat d = read_part(parts[3]);
    const bool have_abc = parts[0] || parts[1] || parts[2];
    if (!have_abc) {
        return StateSpace::block_code(d);
    }
    if (!parts[0] || !parts[1] || !parts[2]) {
        throw ParseError("a system file needs sections A, B, C and D, or D alone");
    }
    try {
        return StateSpace(read_part(parts[0]), read_part(parts[1]), read_part(parts[2]), d);
    } catch (const PreconditionError& e) {
        throw ParseError(std::string("inconsistent system shapes: ") + e.what(),
                         parts[0]->line, 1);
    }
}

std::string format_system_file(const StateSpace& sys, const std::string& label) {
    std::ostringstream os;
    os << "field: " << format_field(sys.field()) << '\n';
    if (!label.empty()) {
        os << "label: " << label << '\n';
    }
    if (sys.delta() > 0) {
        os << "A:\n" << format_mat(sys.a);
        os << "B:\n" << format_mat(sys.b);
        os << "C:\n" << format_mat(sys.c);
    }
    os << "D:\n" << format_mat(sys.d);
    return os.str();
}

TextFileKind classify_file(const std::string& text) {
    bool has_matrix = false;
    bool has_system = false;
    for (const Section& sec : scan_sections(text)) {
        if (sec.key == "matrix") {
            has_matrix = true;
        }
        if (sec.key.size() == 1 && std::string("ABCD").find(sec.key[0]) != std::string::npos) {
            has_system = true;
        }
    }
    if (has_matrix && has_system) {
        throw ParseError("file mixes encoder and system sections");
    }
    if (has_matrix) {
        return TextFileKind::encoder;
    }
    if (has_system) {
        return TextFileKind::system;
    }
    throw ParseError("file has neither a matrix section nor system sections");
}

nlohmann::json wam_to_json(const Wam& lam) {
    nlohmann::json j;
    j["field"] = format_field(lam.field());
    j["delta"] = lam.delta();
    nlohmann::json entries = nlohmann::json::array();
    for (const auto& [key, e] : lam.entries()) {
        nlohmann::json rec;
        rec["from"] = format_state(lam.field(), lam.delta(), key.first);
        rec["to"] = format_state(lam.field(), lam.delta(), key.second);
        nlohmann::json en = nlohmann::json::object();
        for (const auto& [w, count] : e.coeffs()) {
            en[std::to_string(w)] = count;
        }
        rec["enum"] = std::move(en);
        entries.push_back(std::move(rec));
    }
    j["entries"] = std::move(entries);
    return j;
}

Wam wam_from_json(const nlohmann::json& j) {
    try {
        const FieldPtr f = parse_field(j.at("field").get<std::string>());
        const std::uint32_t delta = j.at("delta").get<std::uint32_t>();
        Wam lam(f, delta);
        for (const auto& rec : j.at("entries")) {
            const std::uint64_t from = state_code(f, delta, rec.at("from").get<std::string>());
            const std::uint64_t to = state_code(f, delta, rec.at("to").get<std::string>());
            WeightEnum e;
            for (const auto& [key, value] : rec.at("enum").items()) {
                std::uint64_t w = 0;
                if (key.empty()) {
                    throw ParseError("empty weight key");
                }
                for (const char ch : key) {
                    if (!is_digit(ch)) {
                        throw ParseError("weight key '" + key + "' is not a number");
                    }
                    w = w * 10 + static_cast<std::uint64_t>(ch - '0');
                    if (w > 1'000'000'000) {
                        throw ParseError("weight key '" + key + "' is too large");
                    }
                }
                e.add(static_cast<unsigned>(w), value.get<std::uint64_t>());
            }
            lam.add(from, to, e);
        }
        return lam;
    } catch (const nlohmann::json::exception& ex) {
        throw ParseError(std::string("malformed wam json: ") + ex.what());
    }
}

}  // namespace convcode
