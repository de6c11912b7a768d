#ifndef VILENKIN_CSV_HPP
#define VILENKIN_CSV_HPP

// Locale-free CSV for step functions, spectra and convergence records.
// Doubles use the shortest round-trip representation.

#include <charconv>
#include <cmath>
#include <cstddef>
#include <istream>
#include <limits>
#include <ostream>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "vilenkin/analysis.hpp"
#include "vilenkin/transform.hpp"

namespace vilenkin::csv {

inline std::string format_double(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    if (v == 0.0) return "0";  // folds -0
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    if (ec != std::errc{}) throw std::runtime_error("format_double: conversion failed");
    return std::string(buf, ptr);
}

inline double parse_double(std::string_view text) {
    if (text == "inf") return std::numeric_limits<double>::infinity();
    if (text == "-inf") return -std::numeric_limits<double>::infinity();
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc{} || ptr != text.data() + text.size())
        throw std::invalid_argument("csv: bad number '" + std::string(text) + "'");
    return v;
}

namespace detail {

inline void write_complex_rows(std::ostream& os, const char* index_name, std::span<const cplx> values) {
    os << index_name << ",re,im\n";
    for (std::size_t i = 0; i < values.size(); ++i)
        os << i << ',' << format_double(values[i].real()) << ',' << format_double(values[i].imag()) << '\n';
}

inline std::vector<std::string> split(const std::string& line) {
    std::vector<std::string> out;
    std::string cell;
    std::istringstream in(line);
    while (std::getline(in, cell, ',')) out.push_back(cell);
    if (!line.empty() && line.back() == ',') out.emplace_back();
    return out;
}

inline std::vector<cplx> read_complex_rows(std::istream& is, const char* index_name, std::size_t expected) {
    std::string line;
    if (!std::getline(is, line)) throw std::invalid_argument("csv: missing header");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != std::string(index_name) + ",re,im")
        throw std::invalid_argument("csv: expected header '" + std::string(index_name) + ",re,im', got '" + line + "'");
    std::vector<cplx> values(expected);
    std::vector<bool> seen(expected, false);
    while (std::getline(is, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        const auto cells = split(line);
        if (cells.size() != 3) throw std::invalid_argument("csv: expected 3 columns in '" + line + "'");
        const auto index = static_cast<std::size_t>(parse_double(cells[0]));
        if (index >= expected || seen[index]) throw std::invalid_argument("csv: bad or repeated index in '" + line + "'");
        seen[index] = true;
        values[index] = {parse_double(cells[1]), parse_double(cells[2])};
    }
    for (bool s : seen)
        if (!s) throw std::invalid_argument("csv: missing rows");
    return values;
}

}  // namespace detail

inline void write(std::ostream& os, const StepFunction& f) { detail::write_complex_rows(os, "rank", f.values()); }
inline void write(std::ostream& os, const Spectrum& s) { detail::write_complex_rows(os, "n", s.coeffs()); }

inline StepFunction read_step_function(std::istream& is, const VilenkinBase& base) {
    return StepFunction(base, detail::read_complex_rows(is, "rank", base.size()));
}

inline Spectrum read_spectrum(std::istream& is, const VilenkinBase& base) {
    return Spectrum(base, detail::read_complex_rows(is, "n", base.size()));
}

inline constexpr const char* convergence_header = "mean_kind,n,p,error,point_rank,point_error";

/// One row per (record, point); records without points get empty point cells.
inline void write(std::ostream& os, std::span<const ConvergenceRecord> records, bool header = true) {
    if (header) os << convergence_header << '\n';
    for (const auto& r : records) {
        const std::string prefix = r.mean_kind + ',' + std::to_string(r.n) + ',' + format_double(r.p) + ',' +
                                   format_double(r.error) + ',';
        if (r.points.empty()) {
            os << prefix << ",\n";
            continue;
        }
        for (const auto& pt : r.points) os << prefix << pt.rank << ',' << format_double(pt.error) << '\n';
    }
}

}  // namespace vilenkin::csv

#endif  // VILENKIN_CSV_HPP
