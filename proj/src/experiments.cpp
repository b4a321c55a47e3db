#include "mostow/experiments.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "mostow/covering.hpp"
#include "mostow/diskpack.hpp"
#include "mostow/dyadic.hpp"
#include "mostow/func_analysis.hpp"
#include "mostow/morse.hpp"
#include "mostow/rng.hpp"
#include "mostow/serialization.hpp"
#include "mostow/stretch.hpp"
#include "mostow/tolerances.hpp"
#include "mostow/zoom.hpp"

namespace mostow {

namespace {

constexpr const char* kVersion = "0.1.0";

namespace fs = std::filesystem;
using Json = nlohmann::json;

std::string fnv1a(const std::string& data) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string fmt_bool(bool b) { return b ? "1" : "0"; }

struct RowBuilder {
  RunReport& report;
  std::vector<std::string> row{};
  RowBuilder& add(const std::string& s) {
    row.push_back(s);
    return *this;
  }
  RowBuilder& add(double v) { return add(format_double(v)); }
  RowBuilder& add(long long v) { return add(std::to_string(v)); }
  RowBuilder& add(int v) { return add(std::to_string(v)); }
  RowBuilder& add(bool b) { return add(fmt_bool(b)); }
  void done() { report.rows.push_back(std::move(row)); }
};

RowBuilder row(RunReport& r) { return RowBuilder{r}; }

double param_double(const Json& params, const std::string& key, double fallback) {
  if (!params.contains(key)) return fallback;
  if (!params.at(key).is_number()) throw ConfigError("config: '" + key + "' must be a number");
  return params.at(key).get<double>();
}

long long param_int(const Json& params, const std::string& key, long long fallback) {
  if (!params.contains(key)) return fallback;
  if (!params.at(key).is_number_integer())
    throw ConfigError("config: '" + key + "' must be an integer");
  return params.at(key).get<long long>();
}

std::string param_str(const Json& params, const std::string& key, const std::string& fallback) {
  if (!params.contains(key)) return fallback;
  if (!params.at(key).is_string()) throw ConfigError("config: '" + key + "' must be a string");
  return params.at(key).get<std::string>();
}

std::vector<double> param_list(const Json& params, const std::string& key,
                               std::vector<double> fallback) {
  if (!params.contains(key)) return fallback;
  const Json& v = params.at(key);
  if (v.is_number()) return {v.get<double>()};
  if (!v.is_array()) throw ConfigError("config: '" + key + "' must be a number or array");
  std::vector<double> out;
  for (const Json& x : v) {
    if (!x.is_number()) throw ConfigError("config: '" + key + "' entries must be numbers");
    out.push_back(x.get<double>());
  }
  return out;
}

// ---------------------------------------------------------------------------
// builtin maps and sets

BoundaryHomeo builtin_homeo(const std::string& name) {
  if (name == "identity") return BoundaryHomeo::identity();
  if (name == "diag21")
    return BoundaryHomeo::single(RealAffine::diag(2.0, 1.0));
  if (name == "radial2") return BoundaryHomeo::single(RadialPower{2.0});
  if (name == "shear_abs") return BoundaryHomeo::single(Shear{ShearProfile::Abs});
  if (name == "shear_square") return BoundaryHomeo::single(Shear{ShearProfile::Square});
  if (name == "shear_cantor") return BoundaryHomeo::single(Shear{ShearProfile::Cantor});
  if (name == "cayleyish")  // z -> 1/(1-z)
    return BoundaryHomeo::single(MobiusMap{0.0, 1.0, -1.0, 1.0});
  if (name == "spiral")  // z -> (1+2i) z + 3, conformal but not a homothety
    return BoundaryHomeo::single(RealAffine::from_matrix(1, -2, 2, 1, Complex(3, 0)));
  if (name == "mobius_std")  // z -> (2z+1)/(z+1)
    return BoundaryHomeo::single(MobiusMap{2.0, 1.0, 1.0, 1.0}.normalized());
  if (name == "mobius_small")  // z -> z/(z+2)
    return BoundaryHomeo::single(MobiusMap{1.0, 0.0, 1.0, 2.0}.normalized());
  throw ConfigError("unknown builtin homeo '" + name + "'");
}

BoundaryHomeo homeo_from_params(const Json& params, const std::string& fallback) {
  if (params.contains("homeo")) {
    const Json& h = params.at("homeo");
    if (h.is_string()) return builtin_homeo(h.get<std::string>());
    try {
      return homeo_from_json(h);
    } catch (const std::exception& e) {
      throw ConfigError(std::string("config: bad homeo: ") + e.what());
    }
  }
  return builtin_homeo(fallback);
}

DyadicSet gap_cantor_set(int generations) {
  // keep the outer quarters of each kept interval, `generations` times
  std::vector<std::pair<std::uint32_t, std::uint32_t>> kept = {{0, 1u << (2 * generations)}};
  for (int g = 0; g < generations; ++g) {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> next;
    for (auto [lo, hi] : kept) {
      std::uint32_t q = (hi - lo) / 4;
      next.push_back({lo, lo + q});
      next.push_back({hi - q, hi});
    }
    kept = std::move(next);
  }
  std::vector<std::uint32_t> cells;
  for (auto [lo, hi] : kept)
    for (std::uint32_t i = lo; i < hi; ++i) cells.push_back(i);
  return DyadicSet::from_cells_1d(2 * generations, std::move(cells));
}

// ---------------------------------------------------------------------------
// seeded geometry generators

PointH3 random_point(Rng& rng, double box = 2.0, double log_t = 1.5) {
  return PointH3(Complex(rng.uniform(-box, box), rng.uniform(-box, box)),
                 std::exp(rng.uniform(-log_t, log_t)));
}

MobiusMap random_isometry(Rng& rng) {
  // translation * rotation * homothety, occasionally an inversion
  MobiusMap m = MobiusMap::affine(std::polar(std::exp(rng.uniform(-0.7, 0.7)),
                                             rng.uniform(0.0, 2.0 * M_PI)),
                                  Complex(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)));
  if (rng.uniform() < 0.3) m = compose(m, MobiusMap::inversion());
  return m.normalized();
}

// polygonal path staying clear of the axis by at least r + margin
PathH3 random_tube_path(Rng& rng, double r, const std::string& family) {
  const double margin = 0.05;
  const int pieces = 5;
  bool vary_norm = family != "builtin:arc";
  bool vary_angle = family != "builtin:radial";

  std::vector<PointH3> pts;
  double theta = rng.uniform(0.0, 2.0 * M_PI);
  double log_norm = rng.uniform(-1.0, 1.0);
  double clearance = r + margin + rng.uniform(0.0, 1.5);
  for (int i = 0; i <= pieces; ++i) {
    double tan_phi = std::sinh(clearance);
    double cos_phi = 1.0 / std::sqrt(1.0 + tan_phi * tan_phi);
    double sin_phi = tan_phi * cos_phi;
    double norm = std::exp(log_norm);
    pts.emplace_back(norm * sin_phi * std::polar(1.0, theta), norm * cos_phi);
    if (vary_norm) log_norm += rng.uniform(-0.5, 0.5);
    if (vary_angle) theta += rng.uniform(-0.2, 0.2);
    clearance = r + margin + rng.uniform(0.0, 1.5);
  }
  return PathH3(std::move(pts));
}

// ---------------------------------------------------------------------------
// runners

RunReport run_tube(const ExperimentConfig& cfg) {
  RunReport rep;
  rep.columns = {"case", "r",         "path_len",  "proj_len",   "ratio",
                 "bound", "clearance", "valid",     "euclid_len", "euclid_proj",
                 "euclid_ok", "pass"};
  std::vector<double> r_list = param_list(cfg.params, "r", {1.5, 2.0, 3.0});
  long long count = param_int(cfg.params, "count", 1000);
  std::string family = param_str(cfg.params, "paths", "builtin:radial");
  if (family != "builtin:radial" && family != "builtin:arc" && family != "builtin:mixed")
    throw ConfigError("config: 'paths' must be builtin:radial|builtin:arc|builtin:mixed");

  bool all = true;
  long long case_id = 0;
  for (double r : r_list) {
    if (!(r > 1.0)) throw ConfigError("config: tube requires r > 1");
    for (long long c = 0; c < count; ++c) {
      Rng rng(cfg.seed * 0x10001ull + case_id * 2654435761ull + 17);
      TubeReport t{};
      for (int attempt = 0; attempt < 64; ++attempt) {
        t = tube_check(random_tube_path(rng, r, family), r);
        if (t.valid) break;
      }
      bool ok = t.valid && t.pass && t.euclid_pass;
      all = all && ok;
      row(rep)
          .add(case_id)
          .add(t.r)
          .add(t.path_length)
          .add(t.projected_length)
          .add(t.ratio)
          .add(t.bound)
          .add(t.min_clearance)
          .add(t.valid)
          .add(t.euclid_length)
          .add(t.euclid_projected)
          .add(t.euclid_pass)
          .add(ok)
          .done();
      ++case_id;
    }
  }
  rep.pass = all;
  return rep;
}

RunReport run_morse(const ExperimentConfig& cfg) {
  RunReport rep;
  rep.columns = {"case", "K", "C", "bound", "observed", "degenerate", "pass"};
  std::vector<double> k_list = param_list(cfg.params, "K", {1.0, 1.5, 2.0, 3.0});
  long long count = param_int(cfg.params, "count", 1000);
  double spacing = param_double(cfg.params, "spacing", 0.01);

  bool all = true;
  long long case_id = 0;
  for (double K : k_list) {
    if (!(K >= 1.0)) throw ConfigError("config: morse requires K >= 1");
    double empirical_max = 0.0;
    for (long long c = 0; c < count; ++c) {
      Rng rng(cfg.seed * 0x20003ull + case_id * 2654435761ull + 29);
      BLMap stretch = make_stretch_diag(K, 1.0);
      std::vector<BLMap> parts = {make_isometry(random_isometry(rng)), stretch,
                                  make_isometry(random_isometry(rng))};
      BLMap H = compose_bl(parts);

      PointH3 p = random_point(rng);
      PointH3 q = random_point(rng);
      while (dist_h3(p, q) < 0.3) q = random_point(rng);
      int samples = std::min(1500, std::max(2, static_cast<int>(dist_h3(p, q) / spacing)));
      MorseReport m = segment_deviation(H, p, q, samples);
      empirical_max = std::max(empirical_max, m.observed_deviation);
      all = all && m.pass;
      row(rep)
          .add(case_id)
          .add(m.K)
          .add(m.C)
          .add(m.bound)
          .add(m.observed_deviation)
          .add(m.degenerate)
          .add(m.pass)
          .done();
      ++case_id;
    }
    row(rep)
        .add(std::string("max_K_") + format_double(K))
        .add(K)
        .add(4 * K * K * K + 2 * K)
        .add(4 * K * K * K + 2 * K)
        .add(empirical_max)
        .add(false)
        .add(empirical_max <= 4 * K * K * K + 2 * K + tol::morse_abs)
        .done();
  }
  rep.pass = all;
  return rep;
}

RunReport run_triangle_core(const ExperimentConfig& cfg) {
  RunReport rep;
  rep.columns = {"R", "nonempty", "count", "diameter", "re_min", "re_max",
                 "im_min", "im_max", "t_min", "t_max", "pass"};
  std::vector<double> r_list = param_list(cfg.params, "R", {0.0, 0.5, 0.7, 1.0, 2.0});
  CoreGrid grid;
  grid.re_steps = static_cast<int>(param_int(cfg.params, "re_steps", 21));
  grid.im_steps = static_cast<int>(param_int(cfg.params, "im_steps", 17));
  grid.t_steps = static_cast<int>(param_int(cfg.params, "t_steps", 25));

  bool all = true;
  for (double R : r_list) {
    auto core = triangle_core(R, grid);
    // nesting in R makes emptiness monotone; R = 0 must come out empty
    bool ok = (R == 0.0) ? !core.has_value() : true;
    if (core && !(core->diameter >= 0 && std::isfinite(core->diameter))) ok = false;
    all = all && ok;
    if (core) {
      row(rep)
          .add(R)
          .add(true)
          .add(core->count)
          .add(core->diameter)
          .add(core->re_min)
          .add(core->re_max)
          .add(core->im_min)
          .add(core->im_max)
          .add(core->t_min)
          .add(core->t_max)
          .add(ok)
          .done();
    } else {
      row(rep).add(R).add(false).add(0).add(0.0).add(0.0).add(0.0).add(0.0).add(0.0).add(0.0).add(0.0).add(ok).done();
    }
  }
  rep.pass = all;
  return rep;
}

RunReport run_zoom(const ExperimentConfig& cfg) {
  RunReport rep;
  rep.columns = {"n", "sup_err", "pass"};
  BoundaryHomeo h = homeo_from_params(cfg.params, "cayleyish");
  Complex z(param_double(cfg.params, "z_re", 0.0), param_double(cfg.params, "z_im", 0.0));
  double err_bound = param_double(cfg.params, "bound", 1e-2);

  DerivativeEstimate d1 = directional_derivative(h, z, Complex(1, 0));
  if (!d1.converged) throw ConfigError("zoom: derivative at the base point did not converge");
  Complex hz = h.apply(z);

  std::vector<Complex> grid;
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j)
      grid.push_back(z + std::polar((i + 1) / 8.0, j * M_PI / 4.0));

  bool all = true;
  double prev = std::numeric_limits<double>::infinity();
  double last = 0;
  for (int e = 4; e <= 10; ++e) {
    long n = 1l << e;
    double sup = 0;
    for (Complex w : grid)
      sup = std::max(sup, std::abs(zoom_step(h, z, n, w) - (hz + d1.value * (w - z))));
    bool nonincreasing = sup <= prev * (1.0 + 1e-12);
    all = all && nonincreasing;
    row(rep).add(static_cast<long long>(n)).add(sup).add(nonincreasing).done();
    prev = sup;
    last = sup;
  }
  rep.pass = all && last <= err_bound;
  return rep;
}

RunReport run_asterisk_scan(const ExperimentConfig& cfg) {
  RunReport rep;
  rep.columns = {"re", "im", "converged_all", "abs_d1", "is_asterisk"};
  BoundaryHomeo h = homeo_from_params(cfg.params, "radial2");
  GridSpec grid;
  grid.re_min = param_double(cfg.params, "re_min", -0.5);
  grid.re_max = param_double(cfg.params, "re_max", 0.5);
  grid.im_min = param_double(cfg.params, "im_min", -0.5);
  grid.im_max = param_double(cfg.params, "im_max", 0.5);
  grid.spacing = param_double(cfg.params, "spacing", 0.25);
  if (!(grid.spacing > 0)) throw ConfigError("config: spacing must be positive");

  int passing = 0;
  const double eps = grid.spacing * 1e-9;
  for (double x = grid.re_min; x <= grid.re_max + eps; x += grid.spacing) {
    for (double y = grid.im_min; y <= grid.im_max + eps; y += grid.spacing) {
      AsteriskReport a = asterisk_test(h, Complex(x, y));
      bool conv = true;
      for (const auto& [dir, est] : a.derivatives) conv = conv && est.converged;
      if (a.is_asterisk) ++passing;
      row(rep).add(x).add(y).add(conv).add(std::abs(a.d1)).add(a.is_asterisk).done();
    }
  }
  rep.pass = passing > 0;
  return rep;
}

RunReport run_good_lines(const ExperimentConfig&) {
  RunReport rep;
  rep.columns = {"map", "dir1_good", "dir2_good", "fit_residual", "verdict",
                 "expected", "pass"};
  struct Case {
    std::string name;
    std::string expected;  // conformal | rejected | not_affine
  };
  // mobius_std restricts to circle arcs on lines, so its lines are not good;
  // the conformal member of the battery is the affine spiral similarity
  const std::vector<Case> battery = {{"identity", "conformal"},
                                     {"spiral", "conformal"},
                                     {"diag21", "rejected"},
                                     {"mobius_std", "not_affine"},
                                     {"shear_abs", "not_affine"}};
  Complex base(0.25, 0.25);
  bool all = true;
  for (const Case& c : battery) {
    BoundaryHomeo h = builtin_homeo(c.name);
    GoodDirectionsReport g = good_directions_check(h, base, Complex(1, 0), Complex(0, 1));
    std::string verdict;
    double residual = std::numeric_limits<double>::quiet_NaN();
    if (g.fit) {
      residual = g.fit->max_residual;
      verdict = residual < 1e-6 ? "conformal" : "rejected";
    } else {
      verdict = "not_affine";
    }
    bool ok;
    if (c.expected == "conformal")
      ok = g.dir1_good && g.dir2_good && verdict == "conformal";
    else if (c.expected == "rejected")
      ok = g.dir1_good && g.dir2_good && g.fit && g.fit->max_residual >= 0.1;
    else
      ok = verdict == "not_affine";
    all = all && ok;
    row(rep)
        .add(c.name)
        .add(g.dir1_good)
        .add(g.dir2_good)
        .add(residual)
        .add(verdict)
        .add(c.expected)
        .add(ok)
        .done();
  }
  rep.pass = all;
  return rep;
}

RunReport run_disk_ratio(const ExperimentConfig& cfg) {
  RunReport rep;
  rep.columns = {"map", "center_re", "center_im", "radius", "inner", "outer",
                 "ratio", "lo", "hi", "pass"};
  int resolution = static_cast<int>(param_int(cfg.params, "resolution", 1000));
  struct Case {
    std::string name;
    Complex center;
    double radius;
    double lo, hi;
  };
  // the conformal rows allow one-ulp dips under 1 from the support solve
  const std::vector<Case> battery = {
      {"identity", {0, 0}, 1.0, 1.0 - 1e-6, 1.0 + 1e-6},
      {"diag21", {0, 0}, 1.0, 2.0, 2.02},
      {"mobius_std", {1, 0}, 0.5, 1.0 - 1e-6, 1.0 + 1e-6},  // pole at -1 stays clear
      {"mobius_small", {0.5, 0.5}, 0.5, 1.0 - 1e-6, 1.0 + 1e-6},  // pole at -2
  };
  bool all = true;
  for (const Case& c : battery) {
    DiskRatioReport d = disk_ratio(builtin_homeo(c.name), c.center, c.radius, resolution);
    bool ok = d.ratio >= c.lo && d.ratio <= c.hi;
    all = all && ok;
    row(rep)
        .add(c.name)
        .add(c.center.real())
        .add(c.center.imag())
        .add(c.radius)
        .add(d.inner)
        .add(d.outer)
        .add(d.ratio)
        .add(c.lo)
        .add(c.hi)
        .add(ok)
        .done();
  }
  rep.pass = all;
  return rep;
}

// random family over a random dyadic set; centers in cells, every cell covered
IntervalFamily random_besicovich_family(Rng& rng) {
  int level = 3 + static_cast<int>(rng.below(4));
  std::uint32_t n = 1u << level;
  std::vector<std::uint32_t> cells;
  for (std::uint32_t i = 0; i < n; ++i)
    if (rng.uniform() < 0.4) cells.push_back(i);
  if (cells.empty()) cells.push_back(static_cast<std::uint32_t>(rng.below(n)));
  IntervalFamily fam{{}, DyadicSet::from_cells_1d(level, cells)};

  Dyadic w = Dyadic::pow2(-level);
  for (std::uint32_t i : cells) {
    // center somewhere in the closed cell, interval long enough to cover it
    Dyadic lo = Dyadic(i, 0) * w;
    Dyadic center = lo + Dyadic(static_cast<long long>(rng.below(9)), 3) * w;
    Dyadic reach = max(center - lo, lo + w - center);
    Dyadic extra = Dyadic(static_cast<long long>(rng.below(9)), 3) * w;
    fam.intervals.push_back({center, reach + extra});
    // occasional extra clutter interval centered in the same cell
    if (rng.uniform() < 0.3) {
      Dyadic c2 = lo + Dyadic(static_cast<long long>(rng.below(9)), 3) * w;
      fam.intervals.push_back({c2, Dyadic(1, 1 + static_cast<int>(rng.below(5))) * w});
    }
  }
  return fam;
}

RunReport run_besicovich(const ExperimentConfig& cfg) {
  RunReport rep;
  rep.columns = {"family", "mu_S", "n_intervals", "n_picked", "total_len",
                 "bound_ok", "tripled_covers", "disjoint", "pass"};
  long long count = param_int(cfg.params, "count", 10000);
  bool all = true;
  for (long long c = 0; c < count; ++c) {
    Rng rng(cfg.seed * 0x30005ull + c * 2654435761ull + 71);
    IntervalFamily fam = random_besicovich_family(rng);
    BesicovichResult res = besicovich_select(fam);
    // re-verify disjointness of the picks independently
    bool disjoint = true;
    for (std::size_t i = 0; i < res.picked.size() && disjoint; ++i) {
      DInterval a = fam.intervals[res.picked[i]].interval();
      for (std::size_t j = i + 1; j < res.picked.size(); ++j) {
        DInterval b = fam.intervals[res.picked[j]].interval();
        if (!(a.hi < b.lo || b.hi < a.lo)) {
          disjoint = false;
          break;
        }
      }
    }
    bool ok = res.bound_ok && res.tripled_covers && disjoint;
    all = all && ok;
    row(rep)
        .add(c)
        .add(res.mu_S.to_double())
        .add(static_cast<long long>(fam.intervals.size()))
        .add(static_cast<long long>(res.picked.size()))
        .add(res.total_length.to_double())
        .add(res.bound_ok)
        .add(res.tripled_covers)
        .add(disjoint)
        .add(ok)
        .done();
  }
  rep.pass = all;
  return rep;
}

RunReport run_vitali(const ExperimentConfig& cfg) {
  RunReport rep;
  rep.columns = {"set", "eps", "lambda", "picked", "symdiff", "pass"};
  std::vector<double> eps_list = param_list(cfg.params, "eps", {0.0625, 0.015625, 0.00390625});
  struct Specimen {
    std::string name;
    DyadicSet set;
  };
  std::vector<std::uint32_t> half_cells;
  for (std::uint32_t i = 0; i < 32; ++i) half_cells.push_back(i);
  const std::vector<Specimen> sets = {
      {"full6", DyadicSet::full(1, 6)},
      {"half6", DyadicSet::from_cells_1d(6, half_cells)},
      {"gapcantor8", gap_cantor_set(4)},
  };
  bool all = true;
  for (const Specimen& s : sets) {
    for (double eps_d : eps_list) {
      int k = static_cast<int>(std::lround(-std::log2(eps_d)));
      if (std::abs(std::ldexp(1.0, -k) - eps_d) > 1e-15)
        throw ConfigError("config: vitali eps values must be dyadic 2^-k");
      Dyadic eps = Dyadic::pow2(-k);
      VitaliResult res = vitali_select(s.set, all_dyadic_intervals(), eps);
      bool ok = res.symdiff < eps;
      all = all && ok;
      row(rep)
          .add(s.name)
          .add(eps.to_double())
          .add(res.lambda.to_double())
          .add(static_cast<long long>(res.picked.size()))
          .add(res.symdiff.to_double())
          .add(ok)
          .done();
    }
  }
  rep.pass = all;
  return rep;
}

RunReport run_porosity(const ExperimentConfig& cfg) {
  RunReport rep;
  rep.columns = {"set", "point", "porous", "expected_porous", "pass"};
  std::vector<int> scales = {2, 4, 6};
  if (cfg.params.contains("scales")) {
    scales.clear();
    for (const Json& s : cfg.params.at("scales")) scales.push_back(s.get<int>());
  }
  Dyadic delta(1, 2);  // 1/4

  struct Specimen {
    std::string name;
    DyadicSet set;
    bool expected;
  };
  const std::vector<Specimen> sets = {
      {"gapcantor8", gap_cantor_set(4), true},
      {"full6", DyadicSet::full(1, 6), false},
  };
  bool all = true;
  for (const Specimen& s : sets) {
    std::vector<PorosityVerdict> verdicts = porosity_check(s.set, delta, scales);
    for (const PorosityVerdict& v : verdicts) {
      bool ok = v.porous == s.expected;
      all = all && ok;
      row(rep).add(s.name).add(v.point.to_double()).add(v.porous).add(s.expected).add(ok).done();
    }
  }
  rep.pass = all;
  return rep;
}

RunReport run_fubini(const ExperimentConfig& cfg) {
  RunReport rep;
  rep.columns = {"batch", "count", "violations", "pass"};
  Dyadic t(1, 1);  // 1/2

  // exhaustive over every level-2 planar set
  long long violations = 0;
  for (std::uint32_t mask = 0;; ++mask) {
    DyadicSet s(2, 2);
    for (std::uint32_t bit = 0; bit < 16; ++bit)
      if (mask & (1u << bit)) s.insert(DyadicSet::key2(bit / 4, bit % 4));
    if (!fubini_check(s, t).pass) ++violations;
    if (mask == 65535) break;
  }
  bool ex_ok = violations == 0;
  row(rep).add(std::string("exhaustive_level2")).add(65536ll).add(violations).add(ex_ok).done();

  long long count = param_int(cfg.params, "count", 10000);
  long long rand_violations = 0;
  for (long long c = 0; c < count; ++c) {
    Rng rng(cfg.seed * 0x40007ull + c * 2654435761ull + 103);
    DyadicSet s(2, 6);
    double density = rng.uniform(0.0, 0.35);
    for (std::uint32_t i = 0; i < 64; ++i)
      for (std::uint32_t j = 0; j < 64; ++j)
        if (rng.uniform() < density) s.insert(DyadicSet::key2(i, j));
    Dyadic tc = Dyadic(1 + static_cast<long long>(rng.below(7)), 3);  // k/8
    if (!fubini_check(s, tc).pass) ++rand_violations;
  }
  bool rand_ok = rand_violations == 0;
  row(rep).add(std::string("random_level6")).add(count).add(rand_violations).add(rand_ok).done();

  rep.pass = ex_ok && rand_ok;
  return rep;
}

RunReport run_ac(const ExperimentConfig&) {
  RunReport rep;
  rep.columns = {"check", "param", "value", "bound", "pass"};
  bool all = true;
  auto push = [&](const std::string& name, double param, double value, double bound, bool ok) {
    all = all && ok;
    row(rep).add(name).add(param).add(value).add(bound).add(ok).done();
  };

  std::vector<double> deltas;
  for (int k = 2; k <= 10; ++k) deltas.push_back(std::ldexp(1.0, -k));

  // identity: the adversary attains exactly delta
  for (const ACModulusRow& r : ac_modulus(func_by_name("identity"), deltas))
    push("modulus_identity", r.delta, r.sup_image, r.delta, std::abs(r.sup_image - r.delta) <= 1e-12);

  // square: slope bound 2 on [0,1]
  for (const ACModulusRow& r : ac_modulus(func_by_name("square"), deltas))
    push("modulus_square", r.delta, r.sup_image, 2.0 * r.delta,
         r.sup_image <= 2.0 * r.delta * (1.0 + 1e-9));

  // cantor witness: tiny |I| carrying |I'| = 1
  PartialPartition cantor = cantor_partition(10);
  double len = cantor.total_length();
  double image = image_endpoint_length(func_by_name("cantor10"), cantor);
  double expect_len = std::pow(2.0 / 3.0, 10);
  push("cantor_witness_length", 10, len, expect_len, std::abs(len - expect_len) <= 1e-9);
  push("cantor_witness_image", 10, image, 1.0, std::abs(image - 1.0) <= 1e-9);

  // variation decomposition at 2^10 samples
  for (const char* cname : {"identity", "abskink", "sine"}) {
    std::string name(cname);
    const Func1D& f = func_by_name(name);
    VariationResult v = variation_decompose(f, (1 << 10) + 1);
    bool monotone = true, exact = true;
    for (std::size_t i = 0; i < v.x.size(); ++i) {
      if (i > 0 && (v.f_plus[i] < v.f_plus[i - 1] || v.f_minus[i] < v.f_minus[i - 1]))
        monotone = false;
      if (v.f_plus[i] - v.f_minus[i] != v.f_samples[i]) exact = false;
    }
    push("variation_monotone_" + name, 0, monotone, 1, monotone);
    push("variation_exact_" + name, 0, exact, 1, exact);
    if (name == "abskink") {
      push("variation_fplus1_abskink", 1, v.f_plus.back(), 1.0,
           std::abs(v.f_plus.back() - 1.0) <= 1e-12);
      push("variation_fminus1_abskink", 1, v.f_minus.back(), 0.5,
           std::abs(v.f_minus.back() - 0.5) <= 1e-12);
    }
    if (name == "sine")
      push("variation_total_sine", 1, v.total_variation, 2.0 / M_PI,
           std::abs(v.total_variation - 2.0 / M_PI) <= 1e-6);
  }

  rep.pass = all;
  return rep;
}

RunReport run_stiff_line(const ExperimentConfig& cfg) {
  RunReport rep;
  rep.columns = {"map", "y", "stiff_N", "stretchy", "slope_bound", "ac_consistent", "pass"};
  double y = param_double(cfg.params, "y", 0.5);
  std::vector<int> scales = {2, 3, 4};
  std::vector<double> deltas;
  for (int k = 2; k <= 6; ++k) deltas.push_back(std::ldexp(1.0, -k));

  bool all = true;
  for (const char* cname : {"identity", "diag21", "mobius_small"}) {
    std::string name(cname);
    StiffLineReport r = stiff_line_ac_check(builtin_homeo(name), y, Complex(1, 0),
                                            scales, deltas);
    bool ok = r.stretch.stiff_N > 0 && r.ac_consistent;
    all = all && ok;
    row(rep)
        .add(name)
        .add(r.y)
        .add(r.stretch.stiff_N)
        .add(r.stretch.stretchy)
        .add(r.slope_bound)
        .add(r.ac_consistent)
        .add(ok)
        .done();
  }
  rep.pass = all;
  return rep;
}

// ---------------------------------------------------------------------------
// plots: minimal static SVG derived from report rows

void write_polyline_svg(const fs::path& path, const std::vector<double>& ys,
                        const std::string& title) {
  if (ys.empty()) return;
  double lo = ys[0], hi = ys[0];
  for (double v : ys) {
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  if (hi <= lo) hi = lo + 1;
  const int W = 640, H = 360, pad = 40;
  std::ofstream out(path);
  out << "<svg xmlns='http://www.w3.org/2000/svg' width='" << W << "' height='" << H << "'>\n";
  out << "<text x='10' y='20'>" << title << "</text>\n<polyline fill='none' stroke='black' points='";
  for (std::size_t i = 0; i < ys.size(); ++i) {
    double x = pad + (W - 2.0 * pad) * (ys.size() == 1 ? 0.5 : static_cast<double>(i) / (ys.size() - 1));
    double y = H - pad - (H - 2.0 * pad) * (ys[i] - lo) / (hi - lo);
    out << x << "," << y << " ";
  }
  out << "'/>\n</svg>\n";
}

void write_scan_heatmap_svg(const fs::path& path, const RunReport& rep) {
  // columns re, im, is_asterisk
  std::size_t re_c = 0, im_c = 0, ok_c = 0;
  for (std::size_t c = 0; c < rep.columns.size(); ++c) {
    if (rep.columns[c] == "re") re_c = c;
    if (rep.columns[c] == "im") im_c = c;
    if (rep.columns[c] == "is_asterisk") ok_c = c;
  }
  if (rep.rows.empty()) return;
  double xmin = 0, xmax = 0, ymin = 0, ymax = 0;
  bool first = true;
  for (const auto& r : rep.rows) {
    double x = std::stod(r[re_c]), y = std::stod(r[im_c]);
    if (first) {
      xmin = xmax = x;
      ymin = ymax = y;
      first = false;
    }
    xmin = std::min(xmin, x);
    xmax = std::max(xmax, x);
    ymin = std::min(ymin, y);
    ymax = std::max(ymax, y);
  }
  const int W = 480, pad = 30;
  double span = std::max({xmax - xmin, ymax - ymin, 1e-9});
  double cell = 0.0;
  if (rep.rows.size() > 1) cell = span / (std::sqrt(static_cast<double>(rep.rows.size())) - 1);
  double px = (W - 2.0 * pad) / span;
  std::ofstream out(path);
  out << "<svg xmlns='http://www.w3.org/2000/svg' width='" << W << "' height='" << W << "'>\n";
  for (const auto& r : rep.rows) {
    double x = pad + (std::stod(r[re_c]) - xmin) * px;
    double y = W - pad - (std::stod(r[im_c]) - ymin) * px;
    double s = std::max(4.0, cell * px * 0.9);
    out << "<rect x='" << x - s / 2 << "' y='" << y - s / 2 << "' width='" << s
        << "' height='" << s << "' fill='" << (r[ok_c] == "1" ? "#2c7" : "#c33")
        << "'/>\n";
  }
  out << "</svg>\n";
}

void maybe_plot(const RunReport& rep, const fs::path& dir) {
  auto column = [&](const std::string& name) {
    std::vector<double> vals;
    for (std::size_t c = 0; c < rep.columns.size(); ++c) {
      if (rep.columns[c] != name) continue;
      for (const auto& r : rep.rows) {
        try {
          vals.push_back(std::stod(r[c]));
        } catch (...) {
        }
      }
    }
    return vals;
  };
  if (rep.id == "tube")
    write_polyline_svg(dir / "tube.svg", column("ratio"), "projection ratio per case");
  else if (rep.id == "morse")
    write_polyline_svg(dir / "morse.svg", column("observed"), "observed deviation per case");
  else if (rep.id == "zoom")
    write_polyline_svg(dir / "zoom.svg", column("sup_err"), "zoom sup error per n");
  else if (rep.id == "asterisk-scan")
    write_scan_heatmap_svg(dir / "asterisk-scan.svg", rep);
}

}  // namespace

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

const std::vector<ExperimentInfo>& list_experiments() {
  static const std::vector<ExperimentInfo> table = {
      {"tube", "Tube Lemma: projected length ratio e^{-r+1}"},
      {"morse", "Morse Lemma segment bound C = 4K^3 + 2K"},
      {"triangle-core", "ideal triangle compact core"},
      {"zoom", "zoom sequence convergence to the linear part"},
      {"asterisk-scan", "asterisk screening over a grid"},
      {"good-lines", "good directions and the circle criterion"},
      {"disk-ratio", "Disk Theorem diameter ratio"},
      {"besicovich", "Besicovich covering: greedy disjoint third"},
      {"vitali", "Vitali covering: small symmetric difference"},
      {"porosity", "Porous Lemma: porous sets are null"},
      {"fubini", "baby Fubini slice bound"},
      {"ac", "absolute continuity suite"},
      {"stiff-line", "stiff lines are absolutely continuous"},
  };
  return table;
}

RunReport run_experiment(const ExperimentConfig& config) {
  auto start = std::chrono::steady_clock::now();
  RunReport rep;
  if (config.id == "tube") rep = run_tube(config);
  else if (config.id == "morse") rep = run_morse(config);
  else if (config.id == "triangle-core") rep = run_triangle_core(config);
  else if (config.id == "zoom") rep = run_zoom(config);
  else if (config.id == "asterisk-scan") rep = run_asterisk_scan(config);
  else if (config.id == "good-lines") rep = run_good_lines(config);
  else if (config.id == "disk-ratio") rep = run_disk_ratio(config);
  else if (config.id == "besicovich") rep = run_besicovich(config);
  else if (config.id == "vitali") rep = run_vitali(config);
  else if (config.id == "porosity") rep = run_porosity(config);
  else if (config.id == "fubini") rep = run_fubini(config);
  else if (config.id == "ac") rep = run_ac(config);
  else if (config.id == "stiff-line") rep = run_stiff_line(config);
  else throw ConfigError("unknown experiment id '" + config.id + "'");

  rep.id = config.id;
  rep.tool_version = kVersion;
  Json canon{{"id", config.id}, {"seed", config.seed}, {"params", config.params}};
  rep.config_digest = fnv1a(canon.dump());
  rep.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

void write_reports(const RunReport& report, const ExperimentConfig& config) {
  fs::path dir(config.out_dir);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw ConfigError("cannot create output directory '" + config.out_dir + "'");

  fs::path csv_path = dir / (report.id + ".csv");
  std::ofstream csv(csv_path);
  if (!csv) throw ConfigError("cannot write '" + csv_path.string() + "'");
  for (std::size_t i = 0; i < report.columns.size(); ++i)
    csv << report.columns[i] << (i + 1 < report.columns.size() ? "," : "");
  csv << "\n";
  for (const auto& r : report.rows) {
    for (std::size_t i = 0; i < r.size(); ++i) csv << r[i] << (i + 1 < r.size() ? "," : "");
    csv << "\n";
  }
  csv.close();

  Json j{{"id", report.id},
         {"tool_version", report.tool_version},
         {"config_digest", report.config_digest},
         {"pass", report.pass},
         {"columns", report.columns},
         {"rows", report.rows}};
  fs::path json_path = dir / (report.id + ".json");
  std::ofstream js(json_path);
  if (!js) throw ConfigError("cannot write '" + json_path.string() + "'");
  js << j.dump(2) << "\n";
  js.close();

  if (config.plot) maybe_plot(report, dir);
}

}  // namespace mostow
