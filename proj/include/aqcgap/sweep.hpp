// Copyright 2026 The aqcgap Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Spectral sweeps of H(t) = a(t) H_i + b(t) H_p over t in [0, 1), with gap
// minima refined between grid points and crossings localized by bisection.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "aqcgap/error.hpp"
#include "aqcgap/paulialg.hpp"
#include "aqcgap/specfile.hpp"
#include "aqcgap/spectral.hpp"

namespace aqcgap {

struct GapMinimum {
  double value = std::numeric_limits<double>::infinity();
  double s = 0.0;
};

/// A parameter interval on which epsilon_1 - epsilon_0 <= crossing tolerance.
struct CrossingInterval {
  double lo = 0.0;
  double hi = 0.0;
  double s_star = 0.0;
  double min_gap = 0.0;
  /// Minimum is at roundoff level, 1e-13 (1 + width), rather than merely
  /// below tolerance.
  bool at_roundoff = false;
};

struct GapProfile {
  /// Path the profile was taken on; linear for gap_sweep.
  ScheduleSpec schedule;
  std::vector<double> grid;
  /// levels[k] holds the m lowest eigenvalues at grid[k], ascending.
  std::vector<std::vector<double>> levels;
  std::vector<double> gap1;
  std::vector<double> coeff_a;
  std::vector<double> coeff_b;
  /// 1 for points inserted by refinement between uniform grid points.
  std::vector<char> refined;
  /// Minimum of gap1 over the grid, refined points included.
  GapMinimum min_gap;
  std::vector<CrossingInterval> crossings;
  double crossing_tolerance = 0.0;
  double spectral_width = 0.0;
  std::size_t m_levels = 0;
  /// Low eigenvectors per grid point when requested.
  std::vector<DenseMatrix> vectors;
};

struct SweepOptions {
  std::size_t grid_points = 1001;
  std::size_t m_levels = 4;
  bool keep_vectors = false;
  bool refine = true;
};

/// 1e-8 (1 + spectral width).
inline double crossing_tolerance(double spectral_width) { return 1e-8 * (1.0 + spectral_width); }

/// {k / N}, k = 0..N-1: uniform on [0, 1 - 1/N].
inline std::vector<double> uniform_grid(std::size_t points) {
  if (points < 2) throw InvalidArgument("sweep grid needs at least 2 points");
  std::vector<double> grid(points);
  for (std::size_t k = 0; k < points; ++k) grid[k] = static_cast<double>(k) / static_cast<double>(points);
  return grid;
}

namespace detail {

inline HermitianMatrix path_matrix(const HamiltonianPair& pair, const ScheduleSpec& schedule,
                                   double t) {
  if (schedule.kind == ScheduleSpec::Kind::linear) return interpolate(pair.h_i, pair.h_p, t);
  const auto [a, b] = schedule.at(t);
  return combine(a, pair.h_i, b, pair.h_p);
}

inline double path_gap(const HamiltonianPair& pair, const ScheduleSpec& schedule, double t) {
  const auto ev = low_eigenvalues(path_matrix(pair, schedule, t), 2);
  return std::max(0.0, ev(1) - ev(0));
}

template <typename Fn>
GapMinimum golden_minimize(Fn&& f, double lo, double hi, double tol = 1e-12) {
  constexpr double kInvPhi = 0.6180339887498949;
  GapMinimum best{f(lo), lo};
  const double f_hi = f(hi);
  if (f_hi < best.value) best = {f_hi, hi};
  double x1 = hi - kInvPhi * (hi - lo);
  double x2 = lo + kInvPhi * (hi - lo);
  double f1 = f(x1);
  double f2 = f(x2);
  for (int it = 0; it < 200 && hi - lo > tol; ++it) {
    if (f1 <= f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - kInvPhi * (hi - lo);
      f1 = f(x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + kInvPhi * (hi - lo);
      f2 = f(x2);
    }
  }
  if (f1 < best.value) best = {f1, x1};
  if (f2 < best.value) best = {f2, x2};
  return best;
}

/// Point between `inside` (g <= tol) and `outside` (g > tol) where g crosses
/// tol, to 1e-12 in the parameter.
template <typename Fn>
double bisect_boundary(Fn&& g, double inside, double outside, double tol) {
  for (int it = 0; it < 100 && std::abs(outside - inside) > 1e-12; ++it) {
    const double mid = 0.5 * (inside + outside);
    if (g(mid) <= tol) inside = mid;
    else outside = mid;
  }
  return inside;
}

/// Upper bound on |d gap / dt| along the path: 2 ||dH/dt||_2.
inline double gap_lipschitz(const HamiltonianPair& pair, const ScheduleSpec& schedule) {
  if (schedule.kind == ScheduleSpec::Kind::linear) {
    return 2.0 * spectral_norm(combine(1.0, pair.h_p, -1.0, pair.h_i));
  }
  const auto [sa, sb] = schedule.max_slopes();
  return 2.0 * (sa * spectral_norm(pair.h_i) + sb * spectral_norm(pair.h_p));
}

inline GapProfile sweep_path(const HamiltonianPair& pair, const ScheduleSpec& schedule,
                             const std::vector<double>& grid, const SweepOptions& opts) {
  if (pair.h_i.dim() != pair.h_p.dim()) throw DimensionMismatch("H_i and H_p dims differ");
  if (pair.dim() < 2) throw InvalidArgument("a gap sweep needs dimension >= 2");
  if (opts.m_levels < 2) throw InvalidArgument("a gap sweep needs at least 2 levels");
  if (grid.size() < 2) throw InvalidArgument("sweep grid needs at least 2 points");
  schedule.validate();

  GapProfile prof;
  prof.schedule = schedule;
  prof.grid = grid;
  prof.m_levels = std::min(opts.m_levels, pair.dim());
  double width = 0.0;
  const RealVector ei = eigenvalues(pair.h_i);
  const RealVector ep = eigenvalues(pair.h_p);
  const double wi = ei.maxCoeff() - ei.minCoeff();
  const double wp = ep.maxCoeff() - ep.minCoeff();
  for (double t : grid) {
    if (!(t >= 0.0 && t < 1.0)) throw InvalidArgument("sweep grid must lie in [0, 1)");
    const auto [a, b] = schedule.at(t);
    prof.coeff_a.push_back(a);
    prof.coeff_b.push_back(b);
    width = std::max(width, a * wi + b * wp);
  }
  prof.spectral_width = width;
  prof.crossing_tolerance = crossing_tolerance(width);
  const double tol = prof.crossing_tolerance;

  const auto evaluate = [&](GapProfile& out, double t) {
    const auto h = path_matrix(pair, schedule, t);
    RealVector ev;
    if (opts.keep_vectors) {
      auto low = low_spectrum(h, prof.m_levels);
      ev = std::move(low.eigenvalues);
      out.vectors.push_back(std::move(low.eigenvectors));
    } else {
      ev = low_eigenvalues(h, prof.m_levels);
    }
    out.levels.emplace_back(ev.begin(), ev.end());
    out.gap1.push_back(std::max(0.0, ev(1) - ev(0)));
  };
  for (std::size_t k = 0; k < grid.size(); ++k) {
    if (k > 0 && !(grid[k] > grid[k - 1])) throw InvalidArgument("sweep grid must be increasing");
    evaluate(prof, grid[k]);
  }
  prof.refined.assign(grid.size(), 0);
  std::vector<GapMinimum> extra;

  const auto gap = [&](double t) { return path_gap(pair, schedule, t); };
  const std::size_t n = grid.size();
  const auto& g = prof.gap1;

  // Contiguous grid runs already below tolerance.
  std::vector<char> in_run(n, 0);
  for (std::size_t k = 0; k < n;) {
    if (g[k] > tol) {
      ++k;
      continue;
    }
    std::size_t q = k;
    while (q + 1 < n && g[q + 1] <= tol) ++q;
    CrossingInterval c;
    c.lo = k > 0 ? bisect_boundary(gap, grid[k], grid[k - 1], tol) : grid[k];
    c.hi = q + 1 < n ? bisect_boundary(gap, grid[q], grid[q + 1], tol) : grid[q];
    std::size_t arg = k;
    for (std::size_t j = k; j <= q; ++j) {
      in_run[j] = 1;
      if (g[j] < g[arg]) arg = j;
    }
    c.s_star = grid[arg];
    c.min_gap = g[arg];
    if (opts.refine) {
      const auto m = golden_minimize(gap, grid[arg > 0 ? arg - 1 : 0], grid[std::min(arg + 1, n - 1)]);
      if (m.value < c.min_gap) {
        c.min_gap = m.value;
        c.s_star = m.s;
        extra.push_back(m);
      }
    }
    prof.crossings.push_back(c);
    k = q + 1;
  }

  if (opts.refine) {
    // A zero within one grid step of t_k forces gap(t_k) <= L * dt.
    const double lipschitz = gap_lipschitz(pair, schedule);
    std::size_t global = 0;
    for (std::size_t k = 1; k < n; ++k) {
      if (g[k] < g[global]) global = k;
    }
    for (std::size_t k = 0; k < n; ++k) {
      if (in_run[k]) continue;
      const bool left_ok = k == 0 || g[k] < g[k - 1];
      const bool right_ok = k + 1 == n || g[k] <= g[k + 1];
      if (!(left_ok && right_ok)) continue;
      const std::size_t lo_i = k > 0 ? k - 1 : 0;
      const std::size_t hi_i = std::min(k + 1, n - 1);
      const double step = std::max(grid[hi_i] - grid[k], grid[k] - grid[lo_i]);
      if (k != global && g[k] > lipschitz * step) continue;
      const auto m = golden_minimize(gap, grid[lo_i], grid[hi_i]);
      if (m.value < g[k]) extra.push_back(m);
      if (m.value <= tol) {
        CrossingInterval c;
        c.s_star = m.s;
        c.min_gap = m.value;
        c.lo = bisect_boundary(gap, m.s, grid[lo_i], tol);
        c.hi = bisect_boundary(gap, m.s, grid[hi_i], tol);
        prof.crossings.push_back(c);
      }
    }
  }

  std::sort(prof.crossings.begin(), prof.crossings.end(),
            [](const CrossingInterval& x, const CrossingInterval& y) { return x.lo < y.lo; });
  std::vector<CrossingInterval> merged;
  for (auto& c : prof.crossings) {
    if (!merged.empty() && c.lo <= merged.back().hi) {
      auto& m = merged.back();
      m.hi = std::max(m.hi, c.hi);
      if (c.min_gap < m.min_gap) {
        m.min_gap = c.min_gap;
        m.s_star = c.s_star;
      }
    } else {
      merged.push_back(c);
    }
  }
  for (auto& c : merged) c.at_roundoff = c.min_gap <= 1e-13 * (1.0 + width);
  prof.crossings = std::move(merged);

  // Refined minima become grid rows so the exported profile shows them.
  std::sort(extra.begin(), extra.end(), [](const auto& x, const auto& y) { return x.s < y.s; });
  if (!extra.empty()) {
    GapProfile merged_rows;
    std::size_t e = 0;
    for (std::size_t k = 0; k <= n; ++k) {
      const double upto = k < n ? grid[k] : std::numeric_limits<double>::infinity();
      for (; e < extra.size() && extra[e].s < upto; ++e) {
        const double t = extra[e].s;
        if (!merged_rows.grid.empty() && t <= merged_rows.grid.back()) continue;
        if (!(t < 1.0)) continue;
        merged_rows.grid.push_back(t);
        merged_rows.refined.push_back(1);
        const auto [a, b] = schedule.at(t);
        merged_rows.coeff_a.push_back(a);
        merged_rows.coeff_b.push_back(b);
        evaluate(merged_rows, t);
      }
      if (k == n) break;
      if (e < extra.size() && extra[e].s == grid[k]) ++e;
      merged_rows.grid.push_back(grid[k]);
      merged_rows.refined.push_back(0);
      merged_rows.coeff_a.push_back(prof.coeff_a[k]);
      merged_rows.coeff_b.push_back(prof.coeff_b[k]);
      merged_rows.levels.push_back(std::move(prof.levels[k]));
      merged_rows.gap1.push_back(prof.gap1[k]);
      if (opts.keep_vectors) merged_rows.vectors.push_back(std::move(prof.vectors[k]));
    }
    prof.grid = std::move(merged_rows.grid);
    prof.refined = std::move(merged_rows.refined);
    prof.coeff_a = std::move(merged_rows.coeff_a);
    prof.coeff_b = std::move(merged_rows.coeff_b);
    prof.levels = std::move(merged_rows.levels);
    prof.gap1 = std::move(merged_rows.gap1);
    prof.vectors = std::move(merged_rows.vectors);
  }
  for (std::size_t k = 0; k < prof.grid.size(); ++k) {
    if (prof.gap1[k] < prof.min_gap.value) prof.min_gap = {prof.gap1[k], prof.grid[k]};
  }
  for (auto& c : prof.crossings) {
    for (std::size_t k = 0; k < prof.grid.size(); ++k) {
      if (prof.grid[k] >= c.lo && prof.grid[k] <= c.hi && prof.gap1[k] < c.min_gap) {
        c.min_gap = prof.gap1[k];
        c.s_star = prof.grid[k];
      }
    }
  }
  return prof;
}

}  // namespace detail

/// Gap of H(s) = (1 - s) H_i + s H_p at a single s in [0, 1].
inline double gap_at(const HamiltonianPair& pair, double s) {
  return detail::path_gap(pair, ScheduleSpec::linear(), s);
}

/// Gap of a(t) H_i + b(t) H_p at a single t in [0, 1].
inline double gap_at(const HamiltonianPair& pair, const ScheduleSpec& schedule, double t) {
  return detail::path_gap(pair, schedule, t);
}

/// Linear-path sweep on the uniform grid {k / grid_points}.
inline GapProfile gap_sweep(const HamiltonianPair& pair, const SweepOptions& opts = {}) {
  return detail::sweep_path(pair, ScheduleSpec::linear(), uniform_grid(opts.grid_points), opts);
}

inline GapProfile gap_sweep(const InstanceSpec& instance, std::size_t grid_points = 1001,
                            std::size_t m_levels = 4) {
  SweepOptions opts;
  opts.grid_points = grid_points;
  opts.m_levels = m_levels;
  return gap_sweep(instance.realize(), opts);
}

/// Sweep over t/T of a(t) H_i + b(t) H_p for a monotone schedule.
inline GapProfile schedule_sweep(const HamiltonianPair& pair, const ScheduleSpec& schedule,
                                 const SweepOptions& opts = {}) {
  return detail::sweep_path(pair, schedule, uniform_grid(opts.grid_points), opts);
}

inline GapProfile schedule_sweep(const InstanceSpec& instance, const ScheduleSpec& schedule,
                                 std::size_t grid_points = 1001, std::size_t m_levels = 4) {
  SweepOptions opts;
  opts.grid_points = grid_points;
  opts.m_levels = m_levels;
  return schedule_sweep(instance.realize(), schedule, opts);
}

struct RuntimeEstimate {
  /// max over grid and m >= 1 of |<psi_m| dH |psi_0>| / (eps_m - eps_0)^2.
  double worst_ratio = 0.0;
  double suggested_T = 0.0;
  double target_epsilon = 0.0;
  double worst_s = 0.0;
  std::size_t worst_level = 0;
};

/// Adiabatic-condition runtime estimate over the profile's grid, taking the
/// maximum over excited levels. Throws CrossingPresent if the profile has
/// crossings or an excited gap falls below the crossing tolerance.
inline RuntimeEstimate estimate_runtime(const HamiltonianPair& pair, const GapProfile& profile,
                                        double target_epsilon) {
  if (!(target_epsilon > 0.0 && target_epsilon < 1.0)) {
    throw InvalidArgument("target epsilon must lie in (0, 1)");
  }
  if (!profile.crossings.empty()) {
    throw CrossingPresent("runtime undefined: the ground gap closes near s = " +
                          std::to_string(profile.crossings.front().s_star));
  }
  RuntimeEstimate est;
  est.target_epsilon = target_epsilon;
  const auto& sched = profile.schedule;
  for (std::size_t k = 0; k < profile.grid.size(); ++k) {
    const double t = profile.grid[k];
    DenseMatrix vecs;
    RealVector ev;
    if (k < profile.vectors.size()) {
      vecs = profile.vectors[k];
      ev = RealVector::Map(profile.levels[k].data(), static_cast<Eigen::Index>(profile.levels[k].size()));
    } else {
      auto low = low_spectrum(detail::path_matrix(pair, sched, t), profile.m_levels);
      vecs = std::move(low.eigenvectors);
      ev = std::move(low.eigenvalues);
    }
    const auto [da, db] = sched.derivative(t);
    const DenseMatrix dh = da * pair.h_i.entries() + db * pair.h_p.entries();
    const ComplexVector dh_psi0 = dh * vecs.col(0);
    for (Eigen::Index m = 1; m < vecs.cols(); ++m) {
      const double delta = ev(m) - ev(0);
      if (delta <= profile.crossing_tolerance) {
        throw CrossingPresent("runtime undefined: level " + std::to_string(m) +
                              " is degenerate with the ground level at s = " + std::to_string(t));
      }
      const double ratio = std::abs(vecs.col(m).dot(dh_psi0)) / (delta * delta);
      if (ratio > est.worst_ratio) {
        est.worst_ratio = ratio;
        est.worst_s = t;
        est.worst_level = static_cast<std::size_t>(m);
      }
    }
  }
  est.suggested_T = est.worst_ratio / target_epsilon;
  return est;
}

inline RuntimeEstimate estimate_runtime(const InstanceSpec& instance, const GapProfile& profile,
                                        double target_epsilon) {
  return estimate_runtime(instance.realize(), profile, target_epsilon);
}

inline std::string format_csv_real(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

/// CSV with header `s,eps0,...,eps{m-1},gap1`, one row per grid point,
/// 17 significant digits.
inline std::string export_profile(const GapProfile& profile) {
  std::string out = "s";
  for (std::size_t m = 0; m < profile.m_levels; ++m) out += ",eps" + std::to_string(m);
  out += ",gap1\n";
  for (std::size_t k = 0; k < profile.grid.size(); ++k) {
    out += format_csv_real(profile.grid[k]);
    for (double e : profile.levels[k]) out += "," + format_csv_real(e);
    out += "," + format_csv_real(profile.gap1[k]) + "\n";
  }
  return out;
}

struct ProfileTable {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};

/// Reads back export_profile output.
inline ProfileTable parse_profile_csv(std::string_view csv) {
  ProfileTable table;
  std::istringstream in{std::string(csv)};
  std::string line;
  if (!std::getline(in, line)) throw InvalidArgument("empty profile CSV");
  {
    std::istringstream header(line);
    std::string col;
    while (std::getline(header, col, ',')) table.columns.push_back(col);
  }
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<double> row;
    std::istringstream cells(line);
    std::string cell;
    while (std::getline(cells, cell, ',')) {
      std::size_t used = 0;
      row.push_back(std::stod(cell, &used));
      if (used != cell.size()) throw InvalidArgument("bad CSV cell \"" + cell + "\"");
    }
    if (row.size() != table.columns.size()) throw InvalidArgument("CSV row width mismatch");
    table.rows.push_back(std::move(row));
  }
  return table;
}

}  // namespace aqcgap
