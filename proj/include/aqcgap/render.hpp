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

// Plain-text and structured (flat JSON) renderings of the report types, plus
// an SVG level plot for gap profiles.

#include <algorithm>
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "aqcgap/cases.hpp"
#include "aqcgap/certifier.hpp"
#include "aqcgap/perron.hpp"
#include "aqcgap/sweep.hpp"

namespace aqcgap {

inline std::string fmt(double v, int digits = 12) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.*g", digits, v);
  return buf;
}

inline std::string fmt(Complex v) {
  if (v.imag() == 0.0) return fmt(v.real());
  return fmt(v.real()) + (v.imag() < 0 ? " - " : " + ") + fmt(std::abs(v.imag())) + "i";
}

inline std::string verdict_sentence(const CertificateReport& rep) {
  return rep.certified()
             ? "nonzero ground gap guaranteed for s in [0, 1)"
             : "inconclusive about crossings (sufficient condition not met)";
}

inline std::string render_text(const CertificateReport& rep, std::size_t max_violations = 20) {
  std::ostringstream out;
  out << "condition1 = " << to_string(rep.condition1) << "\n";
  out << "condition1_detail = " << rep.condition1_detail << "\n";
  out << "degeneracy_gap = " << fmt(rep.degeneracy_gap) << "\n";
  out << "min_r = " << fmt(rep.min_r) << "\n";
  out << "ground_energy = " << fmt(rep.ground_energy) << "\n";
  out << "condition2 = " << to_string(rep.condition2) << "\n";
  out << "violations = " << rep.violations.size() << "\n";
  for (std::size_t k = 0; k < rep.violations.size() && k < max_violations; ++k) {
    const auto& v = rep.violations[k];
    out << "violation = (" << v.row << ", " << v.col << ") " << fmt(v.value) << "\n";
  }
  if (rep.violations.size() > max_violations) {
    out << "violations_omitted = " << rep.violations.size() - max_violations << "\n";
  }
  if (rep.gauge) {
    out << "gauge = " << (rep.gauge->is_identity() ? "identity" : "diagonal phases") << "\n";
  } else {
    out << "gauge = none\n";
  }
  out << "overall = " << to_string(rep.overall) << "\n";
  out << "verdict = " << verdict_sentence(rep) << "\n";
  return out.str();
}

inline nlohmann::json to_structured(const CertificateReport& rep) {
  nlohmann::json j;
  j["condition1"] = to_string(rep.condition1);
  j["condition1_detail"] = rep.condition1_detail;
  j["degeneracy_gap"] = rep.degeneracy_gap;
  j["min_r"] = rep.min_r;
  j["ground_energy"] = rep.ground_energy;
  j["r"] = std::vector<double>(rep.r.begin(), rep.r.end());
  j["condition2"] = to_string(rep.condition2);
  j["sign_tolerance"] = rep.sign_tolerance;
  auto viol = nlohmann::json::array();
  for (const auto& v : rep.violations) viol.push_back({v.row, v.col, v.value.real(), v.value.imag()});
  j["violations"] = std::move(viol);
  j["overall"] = to_string(rep.overall);
  j["gauge"] = rep.gauge ? nlohmann::json(rep.gauge->phases()) : nlohmann::json(nullptr);
  return j;
}

inline std::string render_text(const RuntimeEstimate& est) {
  std::ostringstream out;
  out << "worst_ratio = " << fmt(est.worst_ratio) << "\n";
  out << "suggested_T = " << fmt(est.suggested_T) << "\n";
  out << "target_epsilon = " << fmt(est.target_epsilon) << "\n";
  out << "worst_s = " << fmt(est.worst_s) << "\n";
  out << "worst_level = " << est.worst_level << "\n";
  return out.str();
}

inline nlohmann::json to_structured(const RuntimeEstimate& est) {
  return {{"worst_ratio", est.worst_ratio},   {"suggested_T", est.suggested_T},
          {"target_epsilon", est.target_epsilon}, {"worst_s", est.worst_s},
          {"worst_level", est.worst_level}};
}

/// One line: min_gap, s*, crossing count.
inline std::string render_summary(const GapProfile& prof) {
  std::ostringstream out;
  out << "min_gap = " << fmt(prof.min_gap.value, 10) << " at s = " << fmt(prof.min_gap.s, 10)
      << ", crossings = " << prof.crossings.size();
  if (!prof.crossings.empty()) {
    out << " (gap below tolerance " << fmt(prof.crossing_tolerance, 3) << " near s =";
    for (const auto& c : prof.crossings) out << " " << fmt(c.s_star, 10);
    out << (std::all_of(prof.crossings.begin(), prof.crossings.end(),
                        [](const auto& c) { return c.at_roundoff; })
                ? "; degenerate to roundoff)"
                : ")");
  }
  out << "\n";
  return out.str();
}

inline nlohmann::json to_structured(const GapProfile& prof) {
  nlohmann::json j;
  j["grid_points"] = prof.grid.size();
  j["m_levels"] = prof.m_levels;
  j["min_gap"] = prof.min_gap.value;
  j["min_gap_s"] = prof.min_gap.s;
  j["refined_points"] = std::count(prof.refined.begin(), prof.refined.end(), 1);
  j["crossing_tolerance"] = prof.crossing_tolerance;
  j["spectral_width"] = prof.spectral_width;
  auto cr = nlohmann::json::array();
  for (const auto& c : prof.crossings) {
    cr.push_back({{"lo", c.lo}, {"hi", c.hi}, {"s_star", c.s_star}, {"min_gap", c.min_gap},
                  {"at_roundoff", c.at_roundoff}});
  }
  j["crossings"] = std::move(cr);
  return j;
}

inline std::string render_text(const ProofChainReport& rep) {
  std::ostringstream out;
  out << "c1 = " << fmt(rep.shifts.c1) << "\n";
  out << "c2 = " << fmt(rep.shifts.c2) << "\n";
  out << "samples = " << rep.samples.size() << "\n";
  std::size_t max_n0 = 0;
  double max_residual = 0.0;
  for (const auto& x : rep.samples) {
    if (x.n0) max_n0 = std::max(max_n0, *x.n0);
    max_residual = std::max(max_residual, x.mirror_residual);
  }
  out << "max_n0 = " << max_n0 << "\n";
  out << "max_mirror_residual = " << fmt(max_residual, 3) << "\n";
  const auto failures = rep.failures();
  out << "failures = " << failures.size() << "\n";
  for (std::size_t k = 0; k < failures.size() && k < 10; ++k) {
    out << "failure = s " << fmt(failures[k]->s) << " at " << to_string(*failures[k]->failed_step)
        << "\n";
  }
  out << "chain = " << (rep.passed() ? "pass" : "fail")
      << " (numerical corroboration on sampled s, not a proof)\n";
  return out.str();
}

inline nlohmann::json to_structured(const ProofChainReport& rep) {
  nlohmann::json j;
  j["c1"] = rep.shifts.c1;
  j["c2"] = rep.shifts.c2;
  j["passed"] = rep.passed();
  auto samples = nlohmann::json::array();
  for (const auto& x : rep.samples) {
    samples.push_back({{"s", x.s},
                       {"nonnegative", x.nonnegative},
                       {"primitive", x.primitive},
                       {"n0", x.n0 ? nlohmann::json(*x.n0) : nlohmann::json(nullptr)},
                       {"perron_simple", x.perron_simple},
                       {"perron_positive", x.perron_positive},
                       {"mirror_residual", x.mirror_residual},
                       {"failed_step", x.failed_step ? to_string(*x.failed_step) : ""}});
  }
  j["samples"] = std::move(samples);
  return j;
}

/// Level curves of a profile as a standalone SVG document.
inline std::string render_svg(const GapProfile& prof, int width = 640, int height = 480) {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (const auto& row : prof.levels) {
    for (double e : row) {
      lo = std::min(lo, e);
      hi = std::max(hi, e);
    }
  }
  if (!(hi > lo)) hi = lo + 1.0;
  const double margin = 40.0;
  const double s0 = prof.grid.front();
  const double s1 = prof.grid.back() > s0 ? prof.grid.back() : s0 + 1.0;
  auto x = [&](double s) { return margin + (s - s0) / (s1 - s0) * (width - 2 * margin); };
  auto y = [&](double e) { return height - margin - (e - lo) / (hi - lo) * (height - 2 * margin); };
  static const char* kColors[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b"};
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
      << "\">\n";
  out << "<rect x=\"" << margin << "\" y=\"" << margin << "\" width=\"" << width - 2 * margin
      << "\" height=\"" << height - 2 * margin << "\" fill=\"none\" stroke=\"black\"/>\n";
  for (std::size_t m = 0; m < prof.m_levels; ++m) {
    out << "<polyline fill=\"none\" stroke=\"" << kColors[m % 6] << "\" points=\"";
    for (std::size_t k = 0; k < prof.grid.size(); ++k) {
      out << fmt(x(prof.grid[k]), 6) << "," << fmt(y(prof.levels[k][m]), 6) << " ";
    }
    out << "\"/>\n";
  }
  out << "<text x=\"" << width / 2 << "\" y=\"" << height - 8 << "\">s</text>\n";
  out << "</svg>\n";
  return out.str();
}

}  // namespace aqcgap
