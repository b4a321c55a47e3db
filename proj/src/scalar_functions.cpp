#include "mostow/scalar_functions.hpp"

#include <cmath>
#include <stdexcept>

namespace mostow {

double cantor_staircase(double x, int depth) {
  if (x <= 0.0) return 0.0;
  if (x >= 1.0) return 1.0;
  double value = 0.0;
  double scale = 1.0;
  for (int level = 0; level < depth; ++level) {
    x *= 3.0;
    if (x < 1.0) {
      scale *= 0.5;
    } else if (x < 2.0) {
      return value + 0.5 * scale;
    } else {
      value += 0.5 * scale;
      scale *= 0.5;
      x -= 2.0;
    }
  }
  // below the cut depth interpolate linearly; keeps the approximant continuous
  return value + scale * x;
}

const std::vector<Func1D>& func_registry() {
  static const std::vector<Func1D> registry = {
      {"identity", [](double x) { return x; }},
      {"square", [](double x) { return x * x; }},
      {"abskink", [](double x) { return std::abs(x - 0.5); }},
      {"sine", [](double x) { return std::sin(2.0 * M_PI * x) / (2.0 * M_PI); }},
      {"cantor10", [](double x) { return cantor_staircase(x, 10); }},
  };
  return registry;
}

const Func1D& func_by_name(const std::string& name) {
  for (const Func1D& f : func_registry())
    if (f.name == name) return f;
  throw std::invalid_argument("unknown function: " + name);
}

}  // namespace mostow
