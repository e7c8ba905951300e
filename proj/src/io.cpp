#include "specfact/io.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "specfact/errors.hpp"

namespace specfact {
namespace {

Json number(double x) { return std::isfinite(x) ? Json(x) : Json(nullptr); }

double read_number(const Json& j) {
  if (j.is_null()) return kInfinity;
  if (!j.is_number()) throw ParseError("expected a number, got " + j.dump());
  return j.get<double>();
}

Json pair(cplx z) { return Json::array({z.real(), z.imag()}); }

cplx read_pair(const Json& j) {
  if (j.is_number()) return j.get<double>();
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    throw ParseError("expected [re, im], got " + j.dump());
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

const Json& member(const Json& j, const char* key) {
  if (!j.is_object()) throw ParseError("expected a JSON object");
  const auto it = j.find(key);
  if (it == j.end()) throw ParseError(std::string("missing field '") + key + "'");
  return *it;
}

template <class Fn>
auto guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const Json::exception& e) {
    throw ParseError(e.what());
  }
}

}  // namespace

Json to_json(const GridFunction& f) {
  Json j{{"n", f.size()}};
  if (f.is_real()) {
    j["values"] = std::vector<double>(f.re().begin(), f.re().end());
  } else {
    Json v = Json::array();
    for (std::size_t k = 0; k < f.size(); ++k) v.push_back(pair(f[k]));
    j["values_complex"] = std::move(v);
  }
  return j;
}

Json to_json(const FourierSeries& s) {
  Json c = Json::object();
  for (int k = -s.bandwidth(); k <= s.bandwidth(); ++k) {
    if (s[k] != cplx{}) c[std::to_string(k)] = pair(s[k]);
  }
  return {{"degree", s.bandwidth()}, {"coeffs", std::move(c)}};
}

Json to_json(const SpectralFactor& a) {
  Json coeffs = Json::array();
  for (cplx z : a.coefficients()) coeffs.push_back(pair(z));
  const FactorProvenance& p = a.provenance();
  Json j{{"a", std::move(coeffs)},
         {"method", p.method},
         {"negative_energy", number(p.negative_energy)},
         {"modulus_error", number(p.modulus_error)}};
  if (p.floor) {
    j["floor"] = *p.floor;
    j["floored_samples"] = p.floored_samples;
  }
  return j;
}

Json to_json(const NFunction& phi) {
  if (phi.is_power()) return {{"kind", "power"}, {"q", phi.exponent()}};
  Json grid = Json::array();
  for (const auto& [t, u] : phi.table()) grid.push_back(Json::array({t, u}));
  return {{"kind", "density"}, {"u_grid", std::move(grid)}};
}

Json to_json(const BoundReport& r) {
  Json details = Json::object();
  for (const auto& [k, v] : r.details) details[k] = number(v);
  Json j{{"name", r.name},       {"lhs", number(r.lhs)}, {"rhs", number(r.rhs)},
         {"slack", number(r.slack)}, {"pass", r.pass},       {"details", std::move(details)}};
  if (!r.notes.empty()) j["notes"] = r.notes;
  return j;
}

Json to_json(const CounterexampleFamily& fam, const FamilyMetrics& m) {
  return {{"n", fam.n},
          {"eps", fam.eps},
          {"variant", to_string(fam.variant)},
          {"l1_diff", m.m1},
          {"log_l1_diff", m.m2},
          {"h2_lower", std::sqrt(std::max(m.m3, 0.0))},
          {"h2_identity", std::sqrt(std::max(m.m4, 0.0))},
          {"t1", m.t1},
          {"t2", m.t2},
          {"t3", m.t3},
          {"f_l1", m.f_l1},
          {"log_f_l1", m.log_f_l1},
          {"delta_R", m.delta_r},
          {"log_bump_height", fam.log_bump_height},
          {"budget", m.budget}};
}

GridFunction grid_from_json(const Json& j) {
  return guarded([&] {
    std::optional<std::size_t> n;
    if (j.contains("n")) n = member(j, "n").get<std::size_t>();
    GridFunction f = [&] {
      if (j.contains("values")) {
        std::vector<double> v;
        for (const Json& x : member(j, "values")) {
          if (!x.is_number()) throw ParseError("values: expected numbers");
          v.push_back(x.get<double>());
        }
        return GridFunction::real(std::move(v));
      }
      std::vector<cplx> v;
      for (const Json& x : member(j, "values_complex")) v.push_back(read_pair(x));
      return GridFunction::complex(std::move(v));
    }();
    if (n && *n != f.size()) {
      throw ParseError("grid function: n = " + std::to_string(*n) + " but " + std::to_string(f.size()) +
                       " values given");
    }
    return f;
  });
}

FourierSeries series_from_json(const Json& j) {
  return guarded([&] {
    std::map<int, cplx> coeffs;
    for (const auto& [key, value] : member(j, "coeffs").items()) {
      int k = 0;
      const auto res = std::from_chars(key.data(), key.data() + key.size(), k);
      if (res.ec != std::errc{} || res.ptr != key.data() + key.size()) {
        throw ParseError("coeffs: frequency '" + key + "' is not an integer");
      }
      coeffs[k] = read_pair(value);
    }
    FourierSeries s = FourierSeries::from_map(coeffs);
    if (j.contains("degree")) {
      const int degree = member(j, "degree").get<int>();
      if (degree < s.bandwidth()) throw ParseError("coeffs exceed the declared degree");
      std::vector<cplx> padded(2 * degree + 1);
      for (int k = -s.bandwidth(); k <= s.bandwidth(); ++k) padded[k + degree] = s[k];
      s = FourierSeries(degree, std::move(padded));
    }
    return s;
  });
}

SpectralFactor factor_from_json(const Json& j) {
  return guarded([&] {
    std::vector<cplx> a;
    for (const Json& x : member(j, "a")) a.push_back(read_pair(x));
    FactorProvenance p;
    if (j.contains("method")) p.method = j["method"].get<std::string>();
    if (j.contains("floor")) p.floor = j["floor"].get<double>();
    if (j.contains("floored_samples")) p.floored_samples = j["floored_samples"].get<std::size_t>();
    if (j.contains("negative_energy")) p.negative_energy = read_number(j["negative_energy"]);
    if (j.contains("modulus_error")) p.modulus_error = read_number(j["modulus_error"]);
    return SpectralFactor(std::move(a), std::move(p));
  });
}

NFunction nfunction_from_json(const Json& j) {
  return guarded([&] {
    const std::string kind = member(j, "kind").get<std::string>();
    if (kind == "power") return NFunction::power(member(j, "q").get<double>());
    if (kind == "density") {
      std::vector<std::pair<double, double>> table;
      for (const Json& row : member(j, "u_grid")) {
        if (!row.is_array() || row.size() != 2) throw ParseError("u_grid rows must be [t, u]");
        table.emplace_back(row[0].get<double>(), row[1].get<double>());
      }
      return NFunction::density(std::move(table));
    }
    throw ParseError("unknown N-function kind '" + kind + "'");
  });
}

BoundReport report_from_json(const Json& j) {
  return guarded([&] {
    BoundReport r;
    r.name = member(j, "name").get<std::string>();
    r.lhs = read_number(member(j, "lhs"));
    r.rhs = read_number(member(j, "rhs"));
    r.slack = read_number(member(j, "slack"));
    r.pass = member(j, "pass").get<bool>();
    for (const auto& [k, v] : member(j, "details").items()) r.details[k] = read_number(v);
    if (j.contains("notes")) r.notes = j["notes"].get<std::map<std::string, std::string>>();
    return r;
  });
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(e.what());
  }
}

GridFunction grid_from_csv(const std::string& text) {
  std::vector<double> re;
  std::vector<double> im;
  bool complex = false;
  std::istringstream in(text);
  std::string line;
  std::size_t row = 0;
  while (std::getline(in, line)) {
    ++row;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::vector<double> fields;
    std::istringstream cells(line);
    std::string cell;
    while (std::getline(cells, cell, ',')) {
      std::size_t used = 0;
      double x = 0.0;
      try {
        x = std::stod(cell, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used == 0 || cell.find_first_not_of(" \t\r", used) != std::string::npos) {
        if (re.empty() && fields.empty()) break;  // header row
        throw ParseError("csv row " + std::to_string(row) + ": '" + cell + "' is not a number");
      }
      fields.push_back(x);
    }
    if (fields.empty()) continue;
    if (fields.size() > 2) throw ParseError("csv row " + std::to_string(row) + ": expected 1 or 2 columns");
    if (fields.size() == 2) complex = true;
    re.push_back(fields[0]);
    im.push_back(fields.size() == 2 ? fields[1] : 0.0);
  }
  if (re.empty()) throw ParseError("csv: no samples");
  return complex ? GridFunction::complex(std::move(re), std::move(im)) : GridFunction::real(std::move(re));
}

std::string to_csv(const GridFunction& f) {
  std::ostringstream out;
  out.precision(17);
  for (std::size_t j = 0; j < f.size(); ++j) {
    out << f.re()[j];
    if (!f.is_real()) out << ',' << f.im()[j];
    out << '\n';
  }
  return out.str();
}

CircleInput parse_circle_input(const std::string& text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) throw ParseError("empty input");
  if (text[first] != '{') return grid_from_csv(text);
  const Json j = parse_json(text);
  if (j.contains("coeffs")) return series_from_json(j);
  return grid_from_json(j);
}

std::string read_text(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(in), {}};
}

}  // namespace specfact
