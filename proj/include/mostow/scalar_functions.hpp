#pragma once

#include <functional>
#include <string>
#include <vector>

namespace mostow {

// Level-`depth` approximant of the Cantor staircase on [0,1], clamped to a
// constant outside. Exact dyadic values at ternary-digit inputs; the level-10
// member is the standard non-AC specimen.
double cantor_staircase(double x, int depth = 10);

// Named continuous function on [0,1].
struct Func1D {
  std::string name;
  std::function<double(double)> f;

  double operator()(double x) const { return f(x); }
};

// identity, square, abs-kink, scaled sine, cantor10
const std::vector<Func1D>& func_registry();
const Func1D& func_by_name(const std::string& name);

}  // namespace mostow
