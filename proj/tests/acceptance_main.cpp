// Acceptance suite: every quantitative guarantee the toolkit ships with, run
// end to end at its stated tolerance. One [PASS]/[FAIL] line per criterion;
// exit status 0 only when everything holds.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "mostow/covering.hpp"
#include "mostow/diskpack.hpp"
#include "mostow/dyadic.hpp"
#include "mostow/experiments.hpp"
#include "mostow/func_analysis.hpp"
#include "mostow/morse.hpp"
#include "mostow/rng.hpp"
#include "mostow/stretch.hpp"
#include "mostow/tolerances.hpp"
#include "mostow/zoom.hpp"

using namespace mostow;

namespace {

int failures = 0;

void report(const std::string& name, bool ok, const std::string& detail) {
  std::printf("[%s] %s: %s\n", ok ? "PASS" : "FAIL", name.c_str(), detail.c_str());
  if (!ok) ++failures;
}

std::string fmt(double v) { return format_double(v); }

// same generator the tube experiment uses, kept here so the criterion is
// self-contained and seeded
PathH3 tube_path(Rng& rng, double r) {
  const double margin = 0.05;
  const int pieces = 5;
  std::vector<PointH3> pts;
  double theta = rng.uniform(0.0, 2.0 * M_PI);
  double log_norm = rng.uniform(-1.0, 1.0);
  double clearance = r + margin + rng.uniform(0.0, 1.5);
  for (int i = 0; i <= pieces; ++i) {
    double tan_phi = std::sinh(clearance);
    double cos_phi = 1.0 / std::sqrt(1.0 + tan_phi * tan_phi);
    pts.emplace_back(std::exp(log_norm) * tan_phi * cos_phi * std::polar(1.0, theta),
                     std::exp(log_norm) * cos_phi);
    log_norm += rng.uniform(-0.5, 0.5);
    theta += rng.uniform(-0.2, 0.2);
    clearance = r + margin + rng.uniform(0.0, 1.5);
  }
  return PathH3(std::move(pts));
}

void tube_criteria() {
  auto start = std::chrono::steady_clock::now();
  bool ratio_ok = true, euclid_ok = true;
  double worst_margin = 0;
  int cases = 0;
  for (double r : {1.5, 2.0, 3.0}) {
    for (int c = 0; c < 1000; ++c) {
      Rng rng(0x7b5ull * 1000003ull + static_cast<std::uint64_t>(c) * 2654435761ull +
              static_cast<std::uint64_t>(r * 64));
      TubeReport t{};
      for (int attempt = 0; attempt < 64; ++attempt) {
        t = tube_check(tube_path(rng, r), r);
        if (t.valid) break;
      }
      ++cases;
      if (!t.valid) ratio_ok = false;
      if (!(t.ratio <= t.bound * (1.0 + 1e-3))) ratio_ok = false;
      if (!(t.euclid_projected <= t.euclid_length * (1.0 + 1e-12))) euclid_ok = false;
      worst_margin = std::max(worst_margin, t.ratio / t.bound);
    }
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  report("tube ratio bound",
         ratio_ok && secs < 60.0,
         std::to_string(cases) + " paths, worst ratio/bound " + fmt(worst_margin) +
             ", " + fmt(secs) + " s");
  report("tube euclidean non-increase", euclid_ok, std::to_string(cases) + " paths");
}

void morse_criteria() {
  bool seg_ok = true, win_ok = true;
  std::string detail;
  for (double K : {1.0, 1.5, 2.0, 3.0}) {
    double C = 4 * K * K * K + 2 * K;
    double empirical = 0;
    for (int c = 0; c < 1000; ++c) {
      Rng rng(0xa11ull * 1000003ull + static_cast<std::uint64_t>(c) * 2654435761ull +
              static_cast<std::uint64_t>(K * 64));
      std::vector<BLMap> parts = {make_isometry(MobiusMap::affine(
                                      std::polar(std::exp(rng.uniform(-0.7, 0.7)),
                                                 rng.uniform(0.0, 2 * M_PI)),
                                      Complex(rng.uniform(-1, 1), rng.uniform(-1, 1)))),
                                  make_stretch_diag(K, 1.0)};
      BLMap H = compose_bl(parts);
      PointH3 p(Complex(rng.uniform(-2, 2), rng.uniform(-2, 2)), std::exp(rng.uniform(-1.5, 1.5)));
      PointH3 q(Complex(rng.uniform(-2, 2), rng.uniform(-2, 2)), std::exp(rng.uniform(-1.5, 1.5)));
      if (dist_h3(p, q) < 0.3) q = PointH3(p.z + Complex(1, 0), p.t);
      int samples = std::min(1200, std::max(2, static_cast<int>(dist_h3(p, q) / 0.01)));
      MorseReport m = segment_deviation(H, p, q, samples);
      empirical = std::max(empirical, m.observed_deviation);
      if (!(m.observed_deviation <= C + tol::morse_abs)) seg_ok = false;
    }
    detail += "K=" + fmt(K) + " max " + fmt(empirical) + " <= C=" + fmt(C) + "; ";

    Geodesic gamma = geodesic_from_endpoints(SpherePoint(-1.0), SpherePoint(1.0));
    std::vector<double> radii = {2, 4, 8};
    for (const MorseReport& w : morse_window_check(make_stretch_diag(K, 1.0), gamma, radii))
      if (!(w.observed_deviation <= C + 1.0 + tol::morse_abs)) win_ok = false;
  }
  report("morse segment deviation", seg_ok, detail);
  report("morse windows against K' = 4K^3+2K+1", win_ok, "K in {1, 1.5, 2, 3}, radii {2,4,8}");
}

void bl_certificate_criterion() {
  std::vector<BLMap> family = {
      make_stretch_diag(2, 1), make_stretch_diag(1.5, 1.0), make_stretch_diag(1.0 / 3.0, 1.0),
      make_stretch(1.25, 0.5, -0.25, 1.0),
      compose_bl(std::vector<BLMap>{make_isometry(MobiusMap::inversion()),
                                    make_stretch_diag(2, 1),
                                    make_isometry(MobiusMap::affine(Complex(0, 1), 1.0))})};
  bool ok = true;
  double worst = 1.0;
  Rng rng(424242);
  for (const BLMap& H : family) {
    for (int i = 0; i < 100000; ++i) {
      PointH3 p(Complex(rng.uniform(-3, 3), rng.uniform(-3, 3)), std::exp(rng.uniform(-2, 2)));
      PointH3 q(Complex(rng.uniform(-3, 3), rng.uniform(-3, 3)), std::exp(rng.uniform(-2, 2)));
      double d = dist_h3(p, q);
      if (d < 1e-9) continue;
      double di = dist_h3(H(p), H(q));
      double hi = di / (H.K * d), lo = d / (H.K * di);
      if (!(hi <= 1.0 + tol::bl_slack) || !(lo <= 1.0 + tol::bl_slack)) ok = false;
      worst = std::max({worst, hi, lo});
    }
  }
  report("bi-Lipschitz certificate sandwich", ok,
         "5 maps x 1e5 pairs, worst normalized distortion " + fmt(worst));
}

void zoom_criterion() {
  BoundaryHomeo h = BoundaryHomeo::single(MobiusMap{0.0, 1.0, -1.0, 1.0});  // 1/(1-z)
  std::vector<Complex> grid;
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) grid.push_back(std::polar((i + 1) / 8.0, j * M_PI / 4.0));
  bool decreasing = true;
  double prev = std::numeric_limits<double>::infinity(), last = 0;
  for (int e = 4; e <= 10; ++e) {
    double sup = 0;
    for (Complex w : grid)
      sup = std::max(sup, std::abs(zoom_step(h, 0.0, 1l << e, w) - (1.0 + w)));
    if (!(sup <= prev)) decreasing = false;
    prev = sup;
    last = sup;
  }
  report("zoom convergence to the linear part", decreasing && last <= 1e-2,
         "sup error at n=1024 is " + fmt(last));
}

void asterisk_criterion() {
  BoundaryHomeo rp = BoundaryHomeo::single(RadialPower{2.0});
  AsteriskReport at0 = asterisk_test(rp, Complex(0, 0));
  AsteriskReport at1 = asterisk_test(rp, Complex(1, 0));
  bool ok = !at0.is_asterisk && at1.is_asterisk && std::abs(at1.d1 - Complex(2, 0)) < 1e-6;
  report("asterisk screening of the radial power", ok,
         "D_1 at 0 -> " + fmt(std::abs(at0.d1)) + ", at 1 -> " + fmt(std::abs(at1.d1)));
}

void disk_ratio_criterion() {
  DiskRatioReport st = disk_ratio(BoundaryHomeo::single(RealAffine::diag(2, 1)),
                                  Complex(0, 0), 1.0, 1000);
  bool ok = st.ratio >= 2.0 && st.ratio <= 2.02;
  std::string detail = "diag(2,1) ratio " + fmt(st.ratio);
  std::vector<MobiusMap> mobs = {MobiusMap{2.0, 1.0, 1.0, 1.0}.normalized(),
                                 MobiusMap{1.0, 0.0, 1.0, 2.0}.normalized(),
                                 MobiusMap::affine(Complex(0, 1.5), Complex(1, -1))};
  std::vector<Complex> centers = {Complex(1, 0), Complex(0.5, 0.5), Complex(0, 0)};
  for (std::size_t i = 0; i < mobs.size(); ++i) {
    DiskRatioReport m = disk_ratio(BoundaryHomeo::single(mobs[i]), centers[i], 0.5, 1000);
    if (!(m.ratio <= 1.0 + 1e-6)) ok = false;
    detail += ", mobius" + std::to_string(i) + " " + fmt(m.ratio);
  }
  report("disk ratio bounds", ok, detail);
}

void besicovich_criterion() {
  ExperimentConfig cfg;
  cfg.id = "besicovich";
  cfg.seed = 7;
  cfg.params["count"] = 10000;
  RunReport rep = run_experiment(cfg);
  report("besicovich third bound on seeded families", rep.pass,
         std::to_string(rep.rows.size()) + " families, exact arithmetic");
}

DyadicSet acceptance_gap_cantor(int generations) {
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

void vitali_criterion() {
  std::vector<std::uint32_t> half_cells;
  for (std::uint32_t i = 0; i < 32; ++i) half_cells.push_back(i);
  std::vector<DyadicSet> sets = {DyadicSet::full(1, 6),
                                 DyadicSet::from_cells_1d(6, half_cells),
                                 acceptance_gap_cantor(4)};
  bool ok = true;
  std::string detail;
  for (std::size_t s = 0; s < sets.size(); ++s) {
    for (int k : {4, 6, 8}) {
      VitaliResult r = vitali_select(sets[s], all_dyadic_intervals(), Dyadic::pow2(-k));
      if (!(r.symdiff < Dyadic::pow2(-k))) ok = false;
      detail += "set" + std::to_string(s) + "@2^-" + std::to_string(k) + " symdiff " +
                fmt(r.symdiff.to_double()) + "; ";
    }
  }
  report("vitali symmetric difference", ok, detail);
}

void fubini_criterion() {
  Dyadic t(1, 1);
  long long violations = 0;
  for (std::uint32_t mask = 0;; ++mask) {
    DyadicSet s(2, 2);
    for (std::uint32_t bit = 0; bit < 16; ++bit)
      if (mask & (1u << bit)) s.insert(DyadicSet::key2(bit / 4, bit % 4));
    if (!fubini_check(s, t).pass) ++violations;
    if (mask == 65535) break;
  }
  Rng rng(31007);
  for (int c = 0; c < 10000; ++c) {
    DyadicSet s(2, 6);
    double density = rng.uniform(0.0, 0.35);
    for (std::uint32_t i = 0; i < 64; ++i)
      for (std::uint32_t j = 0; j < 64; ++j)
        if (rng.uniform() < density) s.insert(DyadicSet::key2(i, j));
    Dyadic tc(1 + static_cast<long long>(rng.below(7)), 3);
    if (!fubini_check(s, tc).pass) ++violations;
  }
  report("baby fubini exhaustive + random", violations == 0,
         "65536 level-2 sets and 10000 level-6 sets, " + std::to_string(violations) +
             " violations");
}

void porosity_criterion() {
  ExperimentConfig cfg;
  cfg.id = "porosity";
  RunReport rep = run_experiment(cfg);
  report("porosity verdicts", rep.pass,
         "gap cantor flagged porous at delta=1/4, full interval clean");
}

void ac_criterion() {
  ExperimentConfig cfg;
  cfg.id = "ac";
  RunReport rep = run_experiment(cfg);
  report("absolute continuity suite", rep.pass,
         "staircase witness, square modulus, variation decomposition");
}

void stiff_line_criterion() {
  ExperimentConfig cfg;
  cfg.id = "stiff-line";
  RunReport rep = run_experiment(cfg);
  report("stiff lines stay absolutely continuous", rep.pass,
         "identity, diag(2,1), pole-free mobius at y = 1/2");
}

void determinism_criterion() {
  namespace fs = std::filesystem;
  fs::path base = fs::temp_directory_path() / "mostow_acceptance";
  fs::remove_all(base);
  ExperimentConfig cfg;
  cfg.id = "tube";
  cfg.seed = 7;
  cfg.params["count"] = 40;
  cfg.params["r"] = {2.0};

  auto run_into = [&](const std::string& leaf) {
    cfg.out_dir = (base / leaf).string();
    write_reports(run_experiment(cfg), cfg);
    std::ifstream csv(base / leaf / "tube.csv", std::ios::binary);
    std::ifstream json(base / leaf / "tube.json", std::ios::binary);
    return std::string(std::istreambuf_iterator<char>(csv), {}) + "\x1e" +
           std::string(std::istreambuf_iterator<char>(json), {});
  };
  std::string first = run_into("a"), second = run_into("b");
  report("deterministic reports for a fixed seed", !first.empty() && first == second,
         "tube rerun byte-identical (csv + json)");
}

}  // namespace

int main() {
  tube_criteria();
  morse_criteria();
  bl_certificate_criterion();
  zoom_criterion();
  asterisk_criterion();
  disk_ratio_criterion();
  besicovich_criterion();
  vitali_criterion();
  fubini_criterion();
  porosity_criterion();
  ac_criterion();
  stiff_line_criterion();
  determinism_criterion();

  if (failures == 0) {
    std::printf("all acceptance criteria hold\n");
    return 0;
  }
  std::printf("%d criteria failed\n", failures);
  return 1;
}
