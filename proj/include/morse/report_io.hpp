#pragma once

// Report persistence. JSON carries every field of the scan with scalars as exact
// strings; CSV is the flat per-cell table.

#include "morse/diff_op.hpp"
#include "morse/exact_scalar.hpp"
#include "morse/scan.hpp"
#include "morse/spectral.hpp"

#include <json.hpp>

#include <fstream>
#include <iterator>
#include <sstream>
#include <stdexcept>
#include <string>

namespace morse {

class IoError : public std::runtime_error {
public:
    explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

enum class ReportFormat { Json, Csv };

inline ReportFormat parse_report_format(const std::string& text) {
    if (text == "json") return ReportFormat::Json;
    if (text == "csv") return ReportFormat::Csv;
    throw std::invalid_argument("unknown report format '" + text + "'");
}

namespace detail {

using ojson = nlohmann::ordered_json;

inline OperatorClass parse_operator_class(const std::string& text) {
    for (auto c : {OperatorClass::Proper, OperatorClass::Zero, OperatorClass::Undefined})
        if (text == to_string(c)) return c;
    throw std::invalid_argument("unknown operator class '" + text + "'");
}

inline SignClass parse_sign_class(const std::string& text) {
    if (text == "NonNegative") return SignClass::NonNegative;
    if (text == "Negative") return SignClass::Negative;
    throw std::invalid_argument("unknown sign class '" + text + "'");
}

inline ojson eigen_to_json(const EigenResult& e) { return {{"value", e.value.str()}, {"status", to_string(e.status)}}; }

inline EigenResult eigen_from_json(const ojson& j) {
    return {parse_radical(j.at("value").get<std::string>()), parse_eigen_status(j.at("status").get<std::string>())};
}

inline ojson cell_to_json(const CellRecord& c) {
    return {{"n", c.n},
            {"v", c.v},
            {"s", to_string(c.s)},
            {"s_sign", to_string(c.s_sign)},
            {"op_class", to_string(c.op_class)},
            {"ev1", eigen_to_json(c.ev1)},
            {"ev2", eigen_to_json(c.ev2)},
            {"k0", c.k0.str()},
            {"ev3", to_string(c.ev3)},
            {"equal_12", c.equal_12},
            {"equal_13", c.equal_13},
            {"all_equal", c.all_equal}};
}

inline CellRecord cell_from_json(const ojson& j) {
    CellRecord c;
    c.n = j.at("n").get<long>();
    c.v = j.at("v").get<long>();
    c.s = parse_rational(j.at("s").get<std::string>());
    c.s_sign = parse_sign_class(j.at("s_sign").get<std::string>());
    c.op_class = parse_operator_class(j.at("op_class").get<std::string>());
    c.ev1 = eigen_from_json(j.at("ev1"));
    c.ev2 = eigen_from_json(j.at("ev2"));
    c.k0 = parse_radical(j.at("k0").get<std::string>());
    c.ev3 = parse_rational(j.at("ev3").get<std::string>());
    c.equal_12 = j.at("equal_12").get<bool>();
    c.equal_13 = j.at("equal_13").get<bool>();
    c.all_equal = j.at("all_equal").get<bool>();
    return c;
}

inline ojson summary_to_json(const ScanSummary& s) {
    ojson mismatches = ojson::array();
    for (const auto& [n, v] : s.mismatches) mismatches.push_back({{"n", n}, {"v", v}});
    return {{"cells", s.cells},
            {"s_nonnegative", s.s_nonnegative},
            {"s_negative", s.s_negative},
            {"op_proper", s.op_proper},
            {"op_zero", s.op_zero},
            {"op_undefined", s.op_undefined},
            {"equal_12", s.equal_12},
            {"equal_13", s.equal_13},
            {"all_equal", s.all_equal},
            {"all_equal_proper", s.all_equal_proper},
            {"all_equal_trivial", s.all_equal_trivial},
            {"not_all_equal", s.not_all_equal},
            {"mismatches", mismatches}};
}

inline ScanSummary summary_from_json(const ojson& j) {
    ScanSummary s;
    s.cells = j.at("cells").get<long>();
    s.s_nonnegative = j.at("s_nonnegative").get<long>();
    s.s_negative = j.at("s_negative").get<long>();
    s.op_proper = j.at("op_proper").get<long>();
    s.op_zero = j.at("op_zero").get<long>();
    s.op_undefined = j.at("op_undefined").get<long>();
    s.equal_12 = j.at("equal_12").get<long>();
    s.equal_13 = j.at("equal_13").get<long>();
    s.all_equal = j.at("all_equal").get<long>();
    s.all_equal_proper = j.at("all_equal_proper").get<long>();
    s.all_equal_trivial = j.at("all_equal_trivial").get<long>();
    s.not_all_equal = j.at("not_all_equal").get<long>();
    for (const auto& m : j.at("mismatches")) s.mismatches.emplace_back(m.at("n").get<long>(), m.at("v").get<long>());
    return s;
}

inline std::string csv_cell(const EigenResult& e) { return e.value.str() + "," + to_string(e.status); }

inline std::string bool_str(bool b) { return b ? "true" : "false"; }

}  // namespace detail

inline std::string report_to_json(const ScanReport& r) {
    detail::ojson cells = detail::ojson::array();
    for (const auto& c : r.cells) cells.push_back(detail::cell_to_json(c));
    detail::ojson j = {{"n_max", r.n_max},
                       {"v_max", r.v_max},
                       {"beta", to_string(r.beta)},
                       {"summary", detail::summary_to_json(r.summary)},
                       {"cells", cells}};
    return j.dump(1) + "\n";
}

inline ScanReport report_from_json(const std::string& text) {
    try {
        const auto j = detail::ojson::parse(text);
        ScanReport r;
        r.n_max = j.at("n_max").get<long>();
        r.v_max = j.at("v_max").get<long>();
        r.beta = parse_rational(j.at("beta").get<std::string>());
        r.summary = detail::summary_from_json(j.at("summary"));
        for (const auto& c : j.at("cells")) r.cells.push_back(detail::cell_from_json(c));
        return r;
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("malformed report: ") + e.what());
    }
}

inline const char* csv_header() {
    return "n,v,s,s_sign,op_class,ev1,ev1_status,ev2,ev2_status,ev3,equal_12,equal_13,all_equal";
}

inline std::string csv_row(const CellRecord& c) {
    std::ostringstream os;
    os << c.n << ',' << c.v << ',' << to_string(c.s) << ',' << to_string(c.s_sign) << ',' << to_string(c.op_class)
       << ',' << detail::csv_cell(c.ev1) << ',' << detail::csv_cell(c.ev2) << ',' << to_string(c.ev3) << ','
       << detail::bool_str(c.equal_12) << ',' << detail::bool_str(c.equal_13) << ',' << detail::bool_str(c.all_equal);
    return os.str();
}

inline std::string report_to_csv(const ScanReport& r) {
    std::string out = csv_header();
    out += '\n';
    for (const auto& c : r.cells) {
        out += csv_row(c);
        out += '\n';
    }
    return out;
}

/// Rebuilds a report from the CSV table. The raw k0 column is absent from CSV and is
/// restored as ev2 / 2; grid bounds are taken from the largest n and v present.
inline ScanReport report_from_csv(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line) || line != csv_header()) throw std::invalid_argument("malformed report: bad CSV header");
    std::vector<CellRecord> cells;
    long n_max = 0, v_max = 0;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<std::string> f;
        std::stringstream ls(line);
        for (std::string tok; std::getline(ls, tok, ',');) f.push_back(tok);
        if (f.size() != 13) throw std::invalid_argument("malformed report: CSV row with " + std::to_string(f.size()) + " fields");
        CellRecord c;
        c.n = std::stol(f[0]);
        c.v = std::stol(f[1]);
        c.s = parse_rational(f[2]);
        c.s_sign = detail::parse_sign_class(f[3]);
        c.op_class = detail::parse_operator_class(f[4]);
        c.ev1 = {parse_radical(f[5]), parse_eigen_status(f[6])};
        c.ev2 = {parse_radical(f[7]), parse_eigen_status(f[8])};
        c.k0 = c.ev2.value * RadicalScalar(make_rational(1, 2));
        c.ev3 = parse_rational(f[9]);
        c.equal_12 = f[10] == "true";
        c.equal_13 = f[11] == "true";
        c.all_equal = f[12] == "true";
        n_max = std::max(n_max, c.n);
        v_max = std::max(v_max, c.v);
        cells.push_back(std::move(c));
    }
    if (cells.empty()) throw std::invalid_argument("malformed report: no cells");
    return assemble_report(n_max, v_max, std::move(cells));
}

inline void write_text_file(const std::string& path, const std::string& content) {
    if (path.empty()) throw IoError("empty output path");
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open '" + path + "' for writing");
    out << content;
    out.flush();
    if (!out) throw IoError("write to '" + path + "' failed");
}

inline std::string read_text_file(const std::string& path) {
    if (path.empty()) throw IoError("empty input path");
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open '" + path + "' for reading");
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

inline void write_report(const ScanReport& r, ReportFormat format, const std::string& path) {
    write_text_file(path, format == ReportFormat::Json ? report_to_json(r) : report_to_csv(r));
}

/// Reads either format; JSON is recognised by a leading '{'.
inline ScanReport read_report(const std::string& path) {
    const std::string text = read_text_file(path);
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') return report_from_json(text);
    return report_from_csv(text);
}

}  // namespace morse
