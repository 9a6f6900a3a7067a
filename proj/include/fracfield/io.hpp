#pragma once

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "fracfield/grid.hpp"
#include "fracfield/sampled_line.hpp"
#include "fracfield/scheme.hpp"
#include "fracfield/specwave.hpp"

namespace fracfield {

using ordered_json = nlohmann::ordered_json;

namespace detail {

/// Shortest exact decimal form, stable across runs.
inline std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

[[noreturn]] inline void parse_fail(const std::string& path, std::size_t row,
                                    const std::string& what) {
    throw std::runtime_error(path + ":" + std::to_string(row) + ": " + what);
}

inline double parse_double(const std::string& tok, const std::string& path, std::size_t row) {
    try {
        std::size_t used = 0;
        const double v = std::stod(tok, &used);
        if (used != tok.size()) parse_fail(path, row, "trailing characters in number '" + tok + "'");
        return v;
    } catch (const std::invalid_argument&) {
        parse_fail(path, row, "expected a number, got '" + tok + "'");
    } catch (const std::out_of_range&) {
        parse_fail(path, row, "number out of range: '" + tok + "'");
    }
}

inline std::vector<std::string> split_csv_row(const std::string& line) {
    std::vector<std::string> out;
    std::string tok;
    std::stringstream ss(line);
    while (std::getline(ss, tok, ',')) out.push_back(tok);
    if (!line.empty() && line.back() == ',') out.emplace_back();
    return out;
}

inline std::string strip_cr(std::string s) {
    if (!s.empty() && s.back() == '\r') s.pop_back();
    return s;
}

} // namespace detail

/// Read `x,value` CSV into a SampledLine. The header row is required and
/// the x column must be uniformly spaced.
inline SampledLine read_sampled_line_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error(path + ": cannot open for reading");

    std::string line;
    std::size_t row = 0;
    if (!std::getline(in, line)) detail::parse_fail(path, 1, "empty file, header row required");
    ++row;
    if (detail::strip_cr(line) != "x,value")
        detail::parse_fail(path, row, "expected header 'x,value'");

    std::vector<double> xs, vs;
    while (std::getline(in, line)) {
        ++row;
        line = detail::strip_cr(line);
        if (line.empty()) continue;
        const auto tok = detail::split_csv_row(line);
        if (tok.size() != 2) detail::parse_fail(path, row, "expected 2 columns");
        xs.push_back(detail::parse_double(tok[0], path, row));
        vs.push_back(detail::parse_double(tok[1], path, row));
    }
    if (xs.size() < 2) detail::parse_fail(path, row, "need at least 2 samples");

    SampledLine out;
    out.origin = xs.front();
    out.h = (xs.back() - xs.front()) / static_cast<double>(xs.size() - 1);
    out.values = std::move(vs);
    if (!(out.h > 0.0)) detail::parse_fail(path, row, "x column must be increasing");
    for (std::size_t i = 0; i < xs.size(); ++i)
        if (std::fabs(xs[i] - out.x(i)) > 1e-9 * std::max(1.0, std::fabs(xs[i])))
            detail::parse_fail(path, i + 2, "non-uniform sample spacing");
    return out;
}

inline void write_sampled_line_csv(std::ostream& out, const SampledLine& f) {
    out << "x,value\n";
    for (std::size_t i = 0; i < f.size(); ++i)
        out << detail::fmt(f.x(i)) << ',' << detail::fmt(f.values[i]) << '\n';
}

inline void write_sampled_line_csv(const std::string& path, const SampledLine& f) {
    std::ofstream out(path, std::ios::binary); // binary keeps LF endings everywhere
    if (!out) throw std::runtime_error(path + ": cannot open for writing");
    write_sampled_line_csv(out, f);
}

/// Field snapshot component: `i0,i1,i2,i3,value` rows in storage order.
inline void write_field_component_csv(const std::string& path, const ScalarField& f) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error(path + ": cannot open for writing");
    out << "i0,i1,i2,i3,value\n";
    const Grid& g = f.grid;
    for (int i0 = 0; i0 < g.n[0]; ++i0)
        for (int i1 = 0; i1 < g.n[1]; ++i1)
            for (int i2 = 0; i2 < g.n[2]; ++i2)
                for (int i3 = 0; i3 < g.n[3]; ++i3)
                    out << i0 << ',' << i1 << ',' << i2 << ',' << i3 << ','
                        << detail::fmt(f(i0, i1, i2, i3)) << '\n';
}

inline ScalarField read_field_component_csv(const std::string& path, const Grid& grid) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error(path + ": cannot open for reading");
    std::string line;
    std::size_t row = 0;
    if (!std::getline(in, line)) detail::parse_fail(path, 1, "empty file, header row required");
    ++row;
    if (detail::strip_cr(line) != "i0,i1,i2,i3,value")
        detail::parse_fail(path, row, "expected header 'i0,i1,i2,i3,value'");

    ScalarField f(grid);
    while (std::getline(in, line)) {
        ++row;
        line = detail::strip_cr(line);
        if (line.empty()) continue;
        const auto tok = detail::split_csv_row(line);
        if (tok.size() != 5) detail::parse_fail(path, row, "expected 5 columns");
        int idx[4];
        for (int d = 0; d < 4; ++d) {
            idx[d] = static_cast<int>(detail::parse_double(tok[d], path, row));
            if (idx[d] < 0 || idx[d] >= grid.n[d])
                detail::parse_fail(path, row, "index out of range for the grid");
        }
        f(idx[0], idx[1], idx[2], idx[3]) = detail::parse_double(tok[4], path, row);
    }
    return f;
}

inline ordered_json grid_to_json(const Grid& g) {
    return ordered_json{{"n", g.n}, {"a", g.a}, {"b", g.b}};
}

inline ordered_json scheme_to_json(const FracScheme& s) {
    return ordered_json{{"alpha", s.alpha}, {"beta", s.beta}, {"a", s.a}, {"b", s.b}};
}

inline Grid grid_from_json(const ordered_json& j) {
    Grid g;
    j.at("n").get_to(g.n);
    j.at("a").get_to(g.a);
    j.at("b").get_to(g.b);
    g.validate();
    return g;
}

inline FracScheme scheme_from_json(const ordered_json& j) {
    FracScheme s;
    j.at("alpha").get_to(s.alpha);
    j.at("beta").get_to(s.beta);
    j.at("a").get_to(s.a);
    j.at("b").get_to(s.b);
    s.validate();
    return s;
}

/// JSON sidecar naming the lattice and differentiation convention of a
/// set of snapshot CSVs.
inline void write_snapshot_sidecar(const std::string& path, const Grid& grid,
                                   const FracScheme& scheme) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error(path + ": cannot open for writing");
    ordered_json doc{{"grid", grid_to_json(grid)}, {"scheme", scheme_to_json(scheme)}};
    out << doc.dump(2) << '\n';
}

inline std::pair<Grid, FracScheme> read_snapshot_sidecar(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error(path + ": cannot open for reading");
    ordered_json doc;
    try {
        in >> doc;
        return {grid_from_json(doc.at("grid")), scheme_from_json(doc.at("scheme"))};
    } catch (const nlohmann::json::exception& e) {
        throw std::runtime_error(path + ": " + e.what());
    }
}

/// Long-format wave output: one `t,x,u` row per sample of every snapshot.
inline void write_wave_series_csv(std::ostream& out, const WaveSeries& series) {
    out << "t,x,u\n";
    for (std::size_t s = 0; s < series.times.size(); ++s) {
        const SampledLine& snap = series.snapshots[s];
        for (std::size_t m = 0; m < snap.size(); ++m)
            out << detail::fmt(series.times[s]) << ',' << detail::fmt(snap.x(m)) << ','
                << detail::fmt(snap.values[m]) << '\n';
    }
}

inline void write_wave_series_csv(const std::string& path, const WaveSeries& series) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error(path + ": cannot open for writing");
    write_wave_series_csv(out, series);
}

struct DispersionRow {
    double k, alpha, omega;
};

inline void write_dispersion_csv(std::ostream& out, const std::vector<DispersionRow>& rows) {
    out << "k,alpha,omega\n";
    for (const auto& r : rows)
        out << detail::fmt(r.k) << ',' << detail::fmt(r.alpha) << ','
            << detail::fmt(r.omega) << '\n';
}

} // namespace fracfield
