#pragma once

// JSON and CSV forms of the library types.
//
//   GridFunction    {"n": 8, "values": [...]} or {"n": 8, "values_complex": [[re, im], ...]}
//                   CSV: one sample per row, "re" or "re,im"
//   FourierSeries   {"degree": N, "coeffs": {"-1": [re, im], "0": [re, im], ...}}
//   SpectralFactor  {"a": [[re, im], ...], "method": ..., ...}
//   NFunction       {"kind": "power", "q": 2.0} or {"kind": "density", "u_grid": [[t, u], ...]}
//   BoundReport     {"name", "lhs", "rhs", "slack", "pass", "details", "notes"}
//
// Non-finite numbers are written as null and read back as +inf.

#include <string>
#include <variant>

#include "json.hpp"

#include "specfact/circle_fn.hpp"
#include "specfact/counterexample.hpp"
#include "specfact/orlicz.hpp"
#include "specfact/report.hpp"

namespace specfact {

using Json = nlohmann::json;

Json to_json(const GridFunction& f);
Json to_json(const FourierSeries& s);
Json to_json(const SpectralFactor& a);
Json to_json(const NFunction& phi);
Json to_json(const BoundReport& r);
/// One plot-ready row for family index n.
Json to_json(const CounterexampleFamily& fam, const FamilyMetrics& m);

GridFunction grid_from_json(const Json& j);
FourierSeries series_from_json(const Json& j);
SpectralFactor factor_from_json(const Json& j);
NFunction nfunction_from_json(const Json& j);
BoundReport report_from_json(const Json& j);

/// Parses a JSON document; throws ParseError with the parser message.
Json parse_json(const std::string& text);

GridFunction grid_from_csv(const std::string& text);
std::string to_csv(const GridFunction& f);

/// Either a sampled function or a Fourier series, as accepted by the CLI.
using CircleInput = std::variant<GridFunction, FourierSeries>;

/// Detects JSON (leading '{') or CSV and parses accordingly.
CircleInput parse_circle_input(const std::string& text);

/// Whole contents of a file, or of standard input when path is "-".
std::string read_text(const std::string& path);

}  // namespace specfact
