#include "specfact/report.hpp"

namespace specfact {

BoundReport BoundReport::inequality(std::string name, double lhs, double rhs, double tol, double atol,
                                    std::map<std::string, double> details) {
  BoundReport r;
  r.name = std::move(name);
  r.lhs = lhs;
  r.rhs = rhs;
  r.slack = rhs - lhs;
  r.pass = lhs <= rhs * (1.0 + tol) + atol;
  r.details = std::move(details);
  r.details["tol"] = tol;
  r.details["atol"] = atol;
  return r;
}

}  // namespace specfact
