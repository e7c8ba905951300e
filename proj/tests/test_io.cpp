#include "doctest.h"
#include "specfact/errors.hpp"
#include "specfact/factorization.hpp"
#include "specfact/io.hpp"

#include <cmath>

using namespace specfact;

TEST_CASE("grid function json") {
  const GridFunction f = GridFunction::sample(8, [](double t) { return 1.5 + std::cos(t); });
  const Json j = to_json(f);
  CHECK(j["n"] == 8);
  const GridFunction back = grid_from_json(parse_json(j.dump()));
  CHECK(back.is_real());
  for (std::size_t k = 0; k < 8; ++k) CHECK(back.re()[k] == f.re()[k]);

  const GridFunction z = GridFunction::sample(8, [](double t) { return std::polar(1.0, t); });
  const GridFunction zb = grid_from_json(to_json(z));
  CHECK_FALSE(zb.is_real());
  for (std::size_t k = 0; k < 8; ++k) CHECK(zb[k] == z[k]);

  CHECK_THROWS_AS(grid_from_json(parse_json(R"({"n": 16, "values": [1,1,1,1,1,1,1,1]})")), ParseError);
  CHECK_THROWS_AS(grid_from_json(parse_json(R"({"values": [1, "a"]})")), ParseError);
  CHECK_THROWS_AS(grid_from_json(parse_json(R"({"n": 8})")), ParseError);
  CHECK_THROWS_AS(grid_from_json(parse_json(R"({"values": [1,1,1]})")), ParameterError);
  CHECK_THROWS_AS(parse_json("{"), ParseError);
}

TEST_CASE("fourier series json") {
  const FourierSeries s = series_from_json(parse_json(R"({"coeffs": {"-1": [-0.5, 0], "0": [1.25, 0], "1": [-0.5, 0]}})"));
  CHECK(s.bandwidth() == 1);
  CHECK(s[0] == cplx(1.25));
  CHECK(s[-1] == cplx(-0.5));
  const FourierSeries padded = series_from_json(parse_json(R"({"degree": 3, "coeffs": {"0": 2}})"));
  CHECK(padded.bandwidth() == 3);
  CHECK(padded[0] == cplx(2.0));
  const FourierSeries back = series_from_json(to_json(s));
  for (int k = -1; k <= 1; ++k) CHECK(back[k] == s[k]);
  CHECK_THROWS_AS(series_from_json(parse_json(R"({"coeffs": {"x": [1, 0]}})")), ParseError);
  CHECK_THROWS_AS(series_from_json(parse_json(R"({"coeffs": {"0": [1, 0, 3]}})")), ParseError);
  CHECK_THROWS_AS(series_from_json(parse_json(R"({"degree": 0, "coeffs": {"2": [1, 0]}})")), ParseError);
}

TEST_CASE("factor json") {
  const GridFunction f = GridFunction::sample(64, [](double t) { return 1.25 - std::cos(t); });
  const SpectralFactor a = factorize_boundary(f, {0.5}).trimmed(1e-13);
  const Json j = to_json(a);
  CHECK(j["a"].size() == a.size());
  CHECK(j["method"] == "boundary");
  const SpectralFactor b = factor_from_json(parse_json(j.dump()));
  CHECK(b.size() == a.size());
  for (std::size_t k = 0; k < a.size(); ++k) CHECK(b[k] == a[k]);
  CHECK(b.provenance().floor == a.provenance().floor);
}

TEST_CASE("n-function json") {
  const NFunction p = nfunction_from_json(parse_json(R"({"kind": "power", "q": 3})"));
  CHECK(p.is_power());
  CHECK(p.exponent() == 3.0);
  const NFunction d = nfunction_from_json(parse_json(R"({"kind": "density", "u_grid": [[0.1, 0.1], [1, 1], [10, 10]]})"));
  CHECK_FALSE(d.is_power());
  const NFunction d2 = nfunction_from_json(to_json(d));
  for (double x : {0.05, 0.5, 5.0, 50.0}) CHECK(d2(x) == d(x));
  CHECK(nfunction_from_json(to_json(p)).exponent() == 3.0);
  CHECK_THROWS_AS(nfunction_from_json(parse_json(R"({"kind": "exp"})")), ParseError);
  CHECK_THROWS_AS(nfunction_from_json(parse_json(R"({"kind": "power", "q": 0.5})")), ParameterError);
}

TEST_CASE("report json") {
  BoundReport r = BoundReport::inequality("thing", 1.0, kInfinity, 0.0, 0.0, {{"x", 2.0}});
  r.notes["why"] = "test";
  const Json j = to_json(r);
  CHECK(j["rhs"].is_null());
  const BoundReport b = report_from_json(parse_json(j.dump()));
  CHECK(b.name == "thing");
  CHECK(b.rhs == kInfinity);
  CHECK(b.pass);
  CHECK(b.details.at("x") == 2.0);
  CHECK(b.notes.at("why") == "test");
}

TEST_CASE("counterexample rows") {
  const CounterexampleFamily fam = build_family(1);
  const Json row = to_json(fam, family_metrics(fam));
  for (const char* key : {"n", "l1_diff", "log_l1_diff", "h2_lower", "h2_identity", "budget"}) CHECK(row.contains(key));
  CHECK(row["log_l1_diff"].get<double>() == doctest::Approx(0.5));
}

TEST_CASE("csv") {
  const GridFunction f = grid_from_csv("value\n1\n2\n3\n4\n\n5\n6\n7\n# comment\n8\n");
  CHECK(f.size() == 8);
  CHECK(f.re()[7] == 8.0);
  const GridFunction z = grid_from_csv("1,0\n1,1\n1,0\n1,0\n1,0\n1,0\n1,0\n1,0\n");
  CHECK_FALSE(z.is_real());
  CHECK(z[1] == cplx(1, 1));
  const GridFunction back = grid_from_csv(to_csv(z));
  for (std::size_t k = 0; k < 8; ++k) CHECK(back[k] == z[k]);
  CHECK_THROWS_AS(grid_from_csv("1\n2\nx\n"), ParseError);
  CHECK_THROWS_AS(grid_from_csv(""), ParseError);
  CHECK_THROWS_AS(grid_from_csv("1,2,3\n"), ParseError);
}

TEST_CASE("input detection") {
  CHECK(std::holds_alternative<FourierSeries>(parse_circle_input(R"( {"coeffs": {"0": 1}})")));
  CHECK(std::holds_alternative<GridFunction>(parse_circle_input(R"({"values": [1,1,1,1,1,1,1,1]})")));
  CHECK(std::holds_alternative<GridFunction>(parse_circle_input("1\n1\n1\n1\n1\n1\n1\n1\n")));
  CHECK_THROWS_AS(parse_circle_input("  \n"), ParseError);
  CHECK_THROWS_AS(read_text("/nonexistent/file.json"), ParseError);
}
