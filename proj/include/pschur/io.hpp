//
// pschur : matrix file formats and report serialization.
//
// JSON form: {"rows": R, "cols": C, "row_split": r, "col_split": c,
//             "data": [[...], ...]}
// with numeric entries in float mode and "p/q" strings (or integers) in
// rational mode. Splits are optional and live in the file, so a block
// matrix is one self-contained artifact.
//
// Text form: an optional "# split r c" header line, then one whitespace-
// separated row per line.
//
#pragma once

#include <cstdio>
#include <fstream>
#include <istream>
#include <optional>
#include <sstream>
#include <string>

#include "json.hpp"
#include "pschur/blockinv.hpp"
#include "pschur/verify.hpp"

namespace pschur::io {

using nlohmann::json;

class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

template <class T>
struct MatrixFile {
    Matrix<T> matrix;
    std::optional<std::pair<std::size_t, std::size_t>> split;

    BlockMatrix<T> block() const {
        if (!split) throw ParseError("matrix file carries no block split");
        return BlockMatrix<T>(matrix, split->first, split->second);
    }
};

// ---------------------------------------------------------------------------
// entries
// ---------------------------------------------------------------------------

namespace detail {

// correctly-rounded float parse; "p/q" fractions go through the exact path
inline double float_from_token(const std::string& token) {
    if (token.find('/') != std::string::npos)
        return Rational::from_string(token).to_double();
    std::size_t used = 0;
    const double v = std::stod(token, &used);
    if (used != token.size()) throw std::invalid_argument("trailing characters");
    if (!std::isfinite(v)) throw std::invalid_argument("non-finite value");
    return v;
}

template <class T>
T entry_from_json(const json& v, std::size_t i, std::size_t j) {
    const auto where = [&] {
        return "data[" + std::to_string(i) + "][" + std::to_string(j) + "]";
    };
    if constexpr (scalar_traits<T>::exact) {
        if (v.is_string()) {
            try {
                return Rational::from_string(v.get<std::string>());
            } catch (const std::exception& e) {
                throw ParseError(where() + ": " + e.what());
            }
        }
        if (v.is_number_integer()) return Rational(v.get<long long>());
        if (v.is_number())
            throw ParseError(where() +
                             ": rational mode needs integer or \"p/q\" string entries");
        throw ParseError(where() + ": not a numeric entry");
    } else {
        if (v.is_number()) return v.get<double>();
        if (v.is_string()) {
            // rational fixtures are readable in float mode
            try {
                return float_from_token(v.get<std::string>());
            } catch (const std::exception& e) {
                throw ParseError(where() + ": " + e.what());
            }
        }
        throw ParseError(where() + ": not a numeric entry");
    }
}

template <class T>
json entry_to_json(const T& v) {
    if constexpr (scalar_traits<T>::exact)
        return v.to_string();
    else
        return v;
}

template <class T>
T entry_from_token(const std::string& token, std::size_t line_no) {
    try {
        if constexpr (scalar_traits<T>::exact) {
            return Rational::from_string(token);
        } else {
            return float_from_token(token);
        }
    } catch (const std::exception& e) {
        throw ParseError("line " + std::to_string(line_no) + ": bad entry '" + token +
                         "': " + e.what());
    }
}

inline std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

template <class T>
std::string entry_to_text(const T& v) {
    if constexpr (scalar_traits<T>::exact)
        return v.to_string();
    else
        return format_double(v);
}

}  // namespace detail

// ---------------------------------------------------------------------------
// JSON matrices
// ---------------------------------------------------------------------------

template <class T>
MatrixFile<T> from_json(const json& j) {
    if (!j.is_object()) throw ParseError("matrix file: top level is not an object");
    for (const char* field : {"rows", "cols", "data"})
        if (!j.contains(field))
            throw ParseError(std::string("matrix file: missing field '") + field + "'");
    if (!j["rows"].is_number_unsigned() || !j["cols"].is_number_unsigned())
        throw ParseError("matrix file: rows/cols must be nonnegative integers");
    const std::size_t rows = j["rows"].get<std::size_t>();
    const std::size_t cols = j["cols"].get<std::size_t>();
    if (rows == 0 || cols == 0) throw ParseError("matrix file: dimensions must be positive");
    const auto& data = j["data"];
    if (!data.is_array() || data.size() != rows)
        throw ParseError("matrix file: data must hold exactly 'rows' rows");

    Matrix<T> m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        const auto& row = data[i];
        if (!row.is_array() || row.size() != cols)
            throw ParseError("data[" + std::to_string(i) + "]: expected " +
                             std::to_string(cols) + " entries");
        for (std::size_t jj = 0; jj < cols; ++jj)
            m(i, jj) = detail::entry_from_json<T>(row[jj], i, jj);
    }

    MatrixFile<T> out{std::move(m), std::nullopt};
    const bool has_r = j.contains("row_split"), has_c = j.contains("col_split");
    if (has_r != has_c)
        throw ParseError("matrix file: row_split and col_split must appear together");
    if (has_r) {
        const std::size_t r = j["row_split"].get<std::size_t>();
        const std::size_t c = j["col_split"].get<std::size_t>();
        if (r == 0 || r >= rows || c == 0 || c >= cols)
            throw ParseError("matrix file: splits must cut strictly inside the matrix");
        out.split = {r, c};
    }
    return out;
}

template <class T>
json to_json(const Matrix<T>& m,
             std::optional<std::pair<std::size_t, std::size_t>> split = std::nullopt) {
    json j;
    j["rows"] = m.rows();
    j["cols"] = m.cols();
    if (split) {
        j["row_split"] = split->first;
        j["col_split"] = split->second;
    }
    json data = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t jj = 0; jj < m.cols(); ++jj)
            row.push_back(detail::entry_to_json(m(i, jj)));
        data.push_back(std::move(row));
    }
    j["data"] = std::move(data);
    return j;
}

// ---------------------------------------------------------------------------
// text matrices
// ---------------------------------------------------------------------------

template <class T>
MatrixFile<T> from_text(std::istream& in) {
    std::vector<std::vector<T>> rows;
    std::optional<std::pair<std::size_t, std::size_t>> split;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ls(line);
        std::string tok;
        ls >> tok;
        if (!ls && tok.empty()) continue;  // blank line
        if (tok == "#") {
            std::string kw;
            ls >> kw;
            if (kw != "split")
                throw ParseError("line " + std::to_string(line_no) + ": unknown directive");
            std::size_t r = 0, c = 0;
            if (!(ls >> r >> c))
                throw ParseError("line " + std::to_string(line_no) + ": bad split header");
            split = {r, c};
            continue;
        }
        std::vector<T> row;
        row.push_back(detail::entry_from_token<T>(tok, line_no));
        while (ls >> tok) row.push_back(detail::entry_from_token<T>(tok, line_no));
        if (!rows.empty() && row.size() != rows.front().size())
            throw ParseError("line " + std::to_string(line_no) + ": ragged row");
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw ParseError("matrix file: no rows");
    Matrix<T> m(rows.size(), rows.front().size());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = rows[i][j];
    if (split && (split->first == 0 || split->first >= m.rows() || split->second == 0 ||
                  split->second >= m.cols()))
        throw ParseError("matrix file: splits must cut strictly inside the matrix");
    return {std::move(m), split};
}

template <class T>
void to_text(std::ostream& os, const Matrix<T>& m,
             std::optional<std::pair<std::size_t, std::size_t>> split = std::nullopt) {
    if (split) os << "# split " << split->first << " " << split->second << "\n";
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j)
            os << (j ? " " : "") << detail::entry_to_text(m(i, j));
        os << "\n";
    }
}

// ---------------------------------------------------------------------------
// files
// ---------------------------------------------------------------------------

template <class T>
MatrixFile<T> read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    // sniff: a JSON document starts with '{'
    int first = in.peek();
    while (first == ' ' || first == '\n' || first == '\t' || first == '\r') {
        in.get();
        first = in.peek();
    }
    if (first == '{') {
        json j;
        try {
            in >> j;
        } catch (const json::exception& e) {
            throw ParseError(path + ": " + e.what());
        }
        return from_json<T>(j);
    }
    return from_text<T>(in);
}

// ---------------------------------------------------------------------------
// reports
// ---------------------------------------------------------------------------

// exact zeros serialize as the integer 0, so rational-mode output stays
// free of decimal notation
inline json residual_json(double r) {
    if (r == 0.0) return 0;
    return r;
}

inline json to_json(const InclusionVerdict& v) {
    json j;
    j["holds"] = v.holds;
    j["residual"] = residual_json(v.residual);
    if (v.marginal) j["marginal"] = true;
    return j;
}

inline json to_json(const InclusionReport& r) {
    json j;
    const auto verdicts = r.all();
    for (std::size_t i = 0; i < verdicts.size(); ++i)
        j[InclusionReport::names[i]] = to_json(*verdicts[i]);
    j["a_side"] = r.a_side_holds();
    j["d_side"] = r.d_side_holds();
    j["all_eight"] = r.all_hold();
    return j;
}

inline json to_json(const PinvCertificate& c) {
    json j;
    j["r1"] = residual_json(c.r1);
    j["r2"] = residual_json(c.r2);
    j["r3"] = residual_json(c.r3);
    j["r4"] = residual_json(c.r4);
    j["tol"] = residual_json(c.tol);
    j["ok"] = c.ok;
    return j;
}

inline json to_json(const TheoremStats& s) {
    json j;
    j["name"] = s.name;
    j["trials"] = s.trials;
    j["passes"] = s.passes;
    j["worst_residual"] = residual_json(s.worst_residual);
    j["failing_seeds"] = s.failing_seeds;
    if (!s.note.empty()) j["note"] = s.note;
    return j;
}

inline json to_json(const VerifyReport& r) {
    json j;
    j["backend"] = r.backend;
    j["trials"] = r.trials;
    j["seed"] = r.seed;
    j["tolerances"] = {{"eq", r.tol.eq},
                       {"incl", r.tol.incl},
                       {"cert_scale", r.tol.cert_scale},
                       {"rank_scale", r.tol.rank_scale}};
    json sections = json::array();
    for (const auto& s : r.sections) sections.push_back(to_json(s));
    j["sections"] = std::move(sections);
    j["all_passed"] = r.all_passed();
    return j;
}

}  // namespace pschur::io
