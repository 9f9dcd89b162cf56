#ifndef CVM_PROBLEM_IO_HPP
#define CVM_PROBLEM_IO_HPP

#include <charconv>
#include <cstddef>
#include <fstream>
#include <sstream>
#include <string>
#include <system_error>
#include <vector>

#include "json.hpp"

#include "cvm/dense_matrix.hpp"
#include "cvm/errors.hpp"
#include "cvm/poly.hpp"

namespace cvm {

/// On-disk problem description: the roots, plus an optional right-hand
/// side for solves and optional derivative samples for interpolation
/// (one list per root, aligned with the multiplicities).
struct ProblemSpec {
    RootSpec roots;
    std::vector<double> rhs;
    std::vector<std::vector<double>> hermite;

    bool has_rhs() const { return !rhs.empty(); }
    bool has_hermite() const { return !hermite.empty(); }
};

/// Shortest decimal string that parses back to the identical double.
inline std::string format_double(double value) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), value);
    return std::string(buf, res.ptr);
}

/// Parses one decimal token; the whole token must be consumed.
inline double parse_double_token(const std::string& token) {
    double value = 0.0;
    const char* first = token.data();
    const char* last = token.data() + token.size();
    const auto res = std::from_chars(first, last, value);
    if (res.ec != std::errc() || res.ptr != last)
        throw invalid_spec_error("parse: bad decimal value '" + token + "'");
    return value;
}

namespace detail {

inline double require_number(const nlohmann::json& j, const std::string& field) {
    if (!j.is_number())
        throw invalid_spec_error(field + ": must be a number");
    return j.get<double>();
}

inline int require_integer(const nlohmann::json& j, const std::string& field) {
    if (!j.is_number_integer())
        throw invalid_spec_error(field + ": must be an integer");
    return j.get<int>();
}

} // namespace detail

/**
 * Parses a ProblemSpec from JSON text.
 *
 * Schema: {"roots": [{"lambda": number, "multiplicity": int}, ...],
 *          "rhs": [number, ...],        (optional)
 *          "hermite": [[number, ...], ...]} (optional)
 *
 * Malformed JSON and schema violations throw invalid_spec_error naming the
 * offending field; RootSpec invariants (distinctness, positive
 * multiplicities) are enforced by construction.
 */
inline ProblemSpec parse_problem(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw invalid_spec_error(std::string("parse: ") + e.what());
    }
    if (!doc.is_object())
        throw invalid_spec_error("parse: top-level value must be an object");
    if (!doc.contains("roots"))
        throw invalid_spec_error("roots: missing required field");
    const nlohmann::json& jroots = doc["roots"];
    if (!jroots.is_array() || jroots.empty())
        throw invalid_spec_error("roots: must be a non-empty array");

    std::vector<Root> roots;
    roots.reserve(jroots.size());
    for (std::size_t i = 0; i < jroots.size(); ++i) {
        const nlohmann::json& jr = jroots[i];
        const std::string where = "roots[" + std::to_string(i) + "]";
        if (!jr.is_object())
            throw invalid_spec_error(where + ": must be an object");
        if (!jr.contains("lambda"))
            throw invalid_spec_error(where + ".lambda: missing required field");
        if (!jr.contains("multiplicity"))
            throw invalid_spec_error(where + ".multiplicity: missing required field");
        roots.push_back({detail::require_number(jr["lambda"], where + ".lambda"),
                         detail::require_integer(jr["multiplicity"],
                                                 where + ".multiplicity")});
    }

    ProblemSpec ps;
    ps.roots = RootSpec(std::move(roots));

    if (doc.contains("rhs")) {
        const nlohmann::json& jrhs = doc["rhs"];
        if (!jrhs.is_array())
            throw invalid_spec_error("rhs: must be an array of numbers");
        for (std::size_t i = 0; i < jrhs.size(); ++i)
            ps.rhs.push_back(
                detail::require_number(jrhs[i], "rhs[" + std::to_string(i) + "]"));
        if (static_cast<int>(ps.rhs.size()) != ps.roots.n())
            throw invalid_spec_error("rhs: expected " + std::to_string(ps.roots.n()) +
                                     " entries, got " + std::to_string(ps.rhs.size()));
    }

    if (doc.contains("hermite")) {
        const nlohmann::json& jh = doc["hermite"];
        if (!jh.is_array())
            throw invalid_spec_error("hermite: must be an array of arrays");
        if (static_cast<int>(jh.size()) != ps.roots.r())
            throw invalid_spec_error("hermite: expected " +
                                     std::to_string(ps.roots.r()) + " lists, got " +
                                     std::to_string(jh.size()));
        for (std::size_t k = 0; k < jh.size(); ++k) {
            const std::string where = "hermite[" + std::to_string(k) + "]";
            if (!jh[k].is_array())
                throw invalid_spec_error(where + ": must be an array of numbers");
            std::vector<double> row;
            for (std::size_t j = 0; j < jh[k].size(); ++j)
                row.push_back(detail::require_number(
                    jh[k][j], where + "[" + std::to_string(j) + "]"));
            if (static_cast<int>(row.size()) !=
                ps.roots.multiplicity(static_cast<int>(k)))
                throw invalid_spec_error(
                    where + ": expected " +
                    std::to_string(ps.roots.multiplicity(static_cast<int>(k))) +
                    " derivative values, got " + std::to_string(row.size()));
            ps.hermite.push_back(std::move(row));
        }
    }
    return ps;
}

/// Reads a whole file; io_error when it cannot be opened or read.
inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw io_error(path + ": cannot open for reading");
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad())
        throw io_error(path + ": read failed");
    return buf.str();
}

/// Writes a whole file; io_error when the write cannot complete.
inline void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw io_error(path + ": cannot open for writing");
    out << content;
    out.flush();
    if (!out)
        throw io_error(path + ": write failed");
}

inline ProblemSpec load_problem(const std::string& path) {
    return parse_problem(read_file(path));
}

/// CSV serialization: comma separator, one row per line, every line
/// newline-terminated, no header. Values use shortest round-trip
/// formatting, so re-parsing reproduces the matrix bit for bit.
inline std::string matrix_to_csv(const DenseMatrix& m) {
    std::string out;
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) {
            if (j > 0) out += ',';
            out += format_double(m(i, j));
        }
        out += '\n';
    }
    return out;
}

/// One value per line, newline-terminated.
inline std::string vector_to_lines(const std::vector<double>& v) {
    std::string out;
    for (double x : v) {
        out += format_double(x);
        out += '\n';
    }
    return out;
}

/// Inverse of matrix_to_csv. Requires a rectangular table.
inline DenseMatrix parse_matrix_csv(const std::string& text) {
    std::vector<std::vector<double>> rows;
    std::string line;
    std::istringstream stream(text);
    while (std::getline(stream, line)) {
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (line.empty())
            continue;
        std::vector<double> row;
        std::size_t start = 0;
        while (true) {
            const std::size_t comma = line.find(',', start);
            const std::string token = line.substr(
                start, comma == std::string::npos ? std::string::npos : comma - start);
            row.push_back(parse_double_token(token));
            if (comma == std::string::npos)
                break;
            start = comma + 1;
        }
        if (!rows.empty() && row.size() != rows.front().size())
            throw invalid_spec_error("parse: ragged CSV row");
        rows.push_back(std::move(row));
    }
    if (rows.empty())
        throw invalid_spec_error("parse: empty matrix");
    DenseMatrix m(static_cast<int>(rows.size()),
                  static_cast<int>(rows.front().size()));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            m(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    return m;
}

} // namespace cvm

#endif // CVM_PROBLEM_IO_HPP
