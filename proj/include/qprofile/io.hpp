#ifndef QPROFILE_IO_HPP
#define QPROFILE_IO_HPP

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "qprofile/fqlinalg.hpp"
#include "qprofile/fqpoly.hpp"
#include "qprofile/oracle.hpp"
#include "qprofile/partition.hpp"
#include "qprofile/qpolynomial.hpp"

namespace qprofile {

using json = nlohmann::json;

// Inline values or @file indirection for CLI arguments.
inline std::string resolve_arg(const std::string& s) {
    if (s.empty() || s[0] != '@') return s;
    std::ifstream in(s.substr(1));
    if (!in) throw std::runtime_error("cannot read file: " + s.substr(1));
    std::ostringstream ss;
    ss << in.rdbuf();
    std::string out = ss.str();
    while (!out.empty() && (out.back() == '\n' || out.back() == '\r')) out.pop_back();
    return out;
}

inline std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else if (!std::isspace(static_cast<unsigned char>(c))) {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

inline fq_t parse_code(const FieldCtx& F, const std::string& s) {
    std::size_t pos = 0;
    unsigned long v = std::stoul(s, &pos);
    if (pos != s.size() || v >= F.q)
        throw std::invalid_argument("element code out of range for F_" + std::to_string(F.q) +
                                    ": " + s);
    return static_cast<fq_t>(v);
}

// Rows separated by ';', entries by ',', each entry a FieldElem code.
inline MatrixFq parse_matrix(const FieldCtx& F, const std::string& text) {
    std::vector<VecFq> rows;
    for (const auto& rs : split(resolve_arg(text), ';')) {
        VecFq row;
        for (const auto& es : split(rs, ',')) row.push_back(parse_code(F, es));
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw std::invalid_argument("empty matrix");
    for (const auto& r : rows)
        if (r.size() != rows[0].size())
            throw std::invalid_argument("ragged matrix rows");
    return MatrixFq::from_rows(F, rows, rows[0].size());
}

inline std::string format_matrix(const MatrixFq& m) {
    std::string s;
    for (std::size_t i = 0; i < m.nrows; ++i) {
        if (i) s += ";";
        for (std::size_t j = 0; j < m.ncols; ++j) {
            if (j) s += ",";
            s += std::to_string(m.at(i, j));
        }
    }
    return s;
}

// Comma-separated coefficient codes, constant term first.
inline PolyFq parse_poly(const FieldCtx& F, const std::string& text) {
    std::vector<fq_t> coeffs;
    for (const auto& es : split(resolve_arg(text), ','))
        coeffs.push_back(parse_code(F, es));
    return PolyFq(F, std::move(coeffs));
}

inline std::string format_poly_coeffs(const PolyFq& f) {
    if (f.is_zero()) return "0";
    std::string s;
    for (std::size_t i = 0; i < f.coeffs.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(f.coeffs[i]);
    }
    return s;
}

// Human form like x^3 + x + 1, codes shown for nontrivial coefficients.
inline std::string format_poly_pretty(const PolyFq& f) {
    if (f.is_zero()) return "0";
    std::string s;
    for (std::size_t i = f.coeffs.size(); i-- > 0;) {
        if (f.coeffs[i] == 0) continue;
        if (!s.empty()) s += " + ";
        bool show = f.coeffs[i] != 1 || i == 0;
        if (show) s += std::to_string(f.coeffs[i]);
        if (i > 0) {
            if (show) s += "*";
            s += "x";
            if (i > 1) s += "^" + std::to_string(i);
        }
    }
    return s;
}

inline Partition parse_partition(const std::string& text) {
    std::string t = resolve_arg(text);
    // accept both "2,1" and "(2,1)"
    if (!t.empty() && t.front() == '(') t = t.substr(1);
    if (!t.empty() && t.back() == ')') t.pop_back();
    std::vector<std::size_t> parts;
    if (!t.empty())
        for (const auto& ps : split(t, ',')) {
            std::size_t pos = 0;
            unsigned long v = std::stoul(ps, &pos);
            if (pos != ps.size() || v == 0)
                throw std::invalid_argument("partition parts must be positive integers");
            parts.push_back(v);
        }
    return Partition(std::move(parts));
}

inline json partition_to_json(const Partition& mu) {
    json a = json::array();
    for (std::size_t p : mu.parts) a.push_back(p);
    return a;
}

inline json qpoly_to_json(const QPolynomial& p) {
    json a = json::array();
    for (const auto& c : p.coeffs) a.push_back(c.str());
    return a;
}

inline QPolynomial qpoly_from_json(const json& a) {
    std::vector<BigInt> c;
    for (const auto& v : a) c.emplace_back(v.get<std::string>());
    return QPolynomial(std::move(c));
}

inline json report_to_json(const VerificationReport& rep) {
    json j;
    j["description"] = rep.description;
    j["pass"] = rep.pass;
    j["seconds"] = rep.seconds;
    j["seed"] = rep.seed;
    json rows = json::array();
    for (const auto& r : rep.rows) {
        json row;
        row["partition"] = partition_to_json(r.mu);
        row["enumerated"] = r.enumerated.str();
        row["formula"] = r.formula.str();
        row["match"] = r.match;
        rows.push_back(std::move(row));
    }
    j["rows"] = std::move(rows);
    return j;
}

inline std::string report_to_text(const VerificationReport& rep) {
    std::ostringstream os;
    std::size_t wmu = 9, wcnt = 10;
    for (const auto& r : rep.rows) {
        wmu = std::max(wmu, r.mu.to_string().size());
        wcnt = std::max(wcnt, std::max(r.enumerated.str().size(), r.formula.str().size()));
    }
    char buf[160];
    std::snprintf(buf, sizeof buf, "%-*s  %*s  %*s  %s\n", static_cast<int>(wmu),
                  "partition", static_cast<int>(wcnt), "enumerated",
                  static_cast<int>(wcnt), "formula", "match");
    os << rep.description << "\n" << buf;
    for (const auto& r : rep.rows) {
        std::snprintf(buf, sizeof buf, "%-*s  %*s  %*s  %s\n", static_cast<int>(wmu),
                      r.mu.to_string().c_str(), static_cast<int>(wcnt),
                      r.enumerated.str().c_str(), static_cast<int>(wcnt),
                      r.formula.str().c_str(), r.match ? "ok" : "MISMATCH");
        os << buf;
    }
    std::snprintf(buf, sizeof buf, "result: %s (%.3fs)\n", rep.pass ? "PASS" : "FAIL",
                  rep.seconds);
    os << buf;
    return os.str();
}

}  // namespace qprofile

#endif
