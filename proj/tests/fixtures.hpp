#pragma once

#include <string>
#include <vector>

#include "tate/module.hpp"
#include "tate/poly_parse.hpp"

namespace fixtures {

using namespace tate;

/// Cyclic module S / (ideal) generated in degree 0.
template <class F>
ModulePresentation<F> cyclic(const Ring& R, const std::vector<std::string>& ideal) {
  std::vector<std::vector<Poly<F>>> cols;
  for (const auto& f : ideal) cols.push_back({parse_poly<F>(R, f)});
  return build_presentation<F>(R, {{0, 0}}, cols);
}

/// Matrix presentation from strings; columns[c][r].
template <class F>
ModulePresentation<F> presented(const Ring& R, std::vector<Bidegree> gens,
                                const std::vector<std::vector<std::string>>& columns,
                                std::vector<std::string> names = {}) {
  std::vector<std::vector<Poly<F>>> cols;
  for (const auto& c : columns) {
    std::vector<Poly<F>> col;
    for (const auto& e : c) col.push_back(parse_poly<F>(R, e));
    cols.push_back(std::move(col));
  }
  return build_presentation<F>(R, std::move(gens), cols, std::move(names));
}

/// Example 1: A = K[a], generators 1 (2,0) and x^2, xy, y^2 at (2,1).
template <class F>
ModulePresentation<F> ex1() {
  Ring R{{"x", "y"}, {"a"}, {1}};
  return presented<F>(R, {{2, 0}, {2, 1}, {2, 1}, {2, 1}}, {{"-a*x", "y", "-x", "0"}, {"0", "0", "y", "-x"}},
                      {"1", "x2", "xy", "y2"});
}

inline Ring p3() { return Ring{{"x0", "x1", "x2", "x3"}, {}, {}}; }

/// The special fiber S_0 / i of the Caviglia family on P^3 (the quoted
/// generator "x0 x^2" is read as x0*x2^2 so that it is homogeneous).
template <class F>
ModulePresentation<F> caviglia_special() {
  return cyclic<F>(p3(), {"x0^3", "x1^3", "x0*x2^2 + x1*x3^2"});
}

/// The generic fiber S / (x0^3, x1^3, x0 x2^2 + x1 x3^2 + t x2^3) over K(t).
template <class F>
ModulePresentation<F> caviglia_generic() {
  return cyclic<F>(p3(), {"x0^3", "x1^3", "x0*x2^2 + x1*x3^2 + t*x2^3"});
}

}  // namespace fixtures
