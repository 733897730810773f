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

// Command-line front end. Exit status: 0 success or certified,
// 2 not certified (inconclusive), 1 error.

#include <charconv>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "aqcgap/aqcgap.hpp"

namespace aqcgap::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitNotCertified = 2;

struct CliConfig {
  std::string command;
  std::string input;
  std::string output;
  std::string plot;
  std::size_t grid_points = 1001;
  std::size_t m_levels = 4;
  double target_epsilon = 0.1;
  std::string format = "text";
  std::string family;
  int n_qubits = 2;
  double a0 = 0.0;
  std::string ai;
  std::string aij;
  double g = 1.0;
  std::string hp;
  std::size_t proof_samples = 101;

  void validate() const {
    if (grid_points < 2) throw InvalidArgument("--grid must be at least 2");
    if (!(target_epsilon > 0.0 && target_epsilon < 1.0)) {
      throw InvalidArgument("--eps must lie in (0, 1)");
    }
    if (format != "text" && format != "csv" && format != "structured") {
      throw InvalidArgument("--format must be text, csv or structured");
    }
  }
};

inline std::vector<double> parse_real_list(const std::string& text, const char* what) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto b = item.find_first_not_of(" \t");
    const auto e = item.find_last_not_of(" \t");
    if (b == std::string::npos) throw InvalidArgument(std::string("empty entry in ") + what);
    item = item.substr(b, e - b + 1);
    double v = 0.0;
    auto res = std::from_chars(item.data(), item.data() + item.size(), v);
    if (res.ec != std::errc{} || res.ptr != item.data() + item.size() || !std::isfinite(v)) {
      throw InvalidArgument(std::string("bad number \"") + item + "\" in " + what);
    }
    out.push_back(v);
  }
  return out;
}

/// Single value broadcast to `count`, or exactly `count` values.
inline std::vector<double> expand_list(const std::string& text, std::size_t count, double fallback,
                                       const char* what) {
  if (text.empty()) return std::vector<double>(count, fallback);
  auto v = parse_real_list(text, what);
  if (v.size() == 1) return std::vector<double>(count, v[0]);
  if (v.size() != count) {
    throw InvalidArgument(std::string(what) + " needs 1 or " + std::to_string(count) +
                          " values, got " + std::to_string(v.size()));
  }
  return v;
}

inline Family parse_family(std::string name) {
  std::replace(name.begin(), name.end(), '-', '_');
  for (auto f : {Family::bit_rotation, Family::xy_hopping, Family::heisenberg,
                 Family::projector_uniform, Family::transverse_positive, Family::counterexample}) {
    if (name == to_string(f)) return f;
  }
  throw InvalidArgument("unknown family \"" + name + "\"");
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidArgument("cannot open \"" + path + "\"");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline InstanceSpec load_instance(const std::string& path) {
  try {
    return parse_instance(read_file(path));
  } catch (const ParseError& e) {
    throw ParseError(e.line(), e.column(), path + ": " + e.what());
  }
}

class Emitter {
 public:
  Emitter(const CliConfig& cfg, std::ostream& out) : cfg_(cfg), out_(out) {}

  /// Writes `text` to --out when given, else to the standard stream.
  void primary(const std::string& text) {
    if (cfg_.output.empty()) {
      out_ << text;
      return;
    }
    std::ofstream f(cfg_.output, std::ios::binary);
    if (!f) throw InvalidArgument("cannot write \"" + cfg_.output + "\"");
    f << text;
  }

 private:
  const CliConfig& cfg_;
  std::ostream& out_;
};

inline GapProfile sweep_instance(const InstanceSpec& inst, const CliConfig& cfg) {
  SweepOptions opts;
  opts.grid_points = cfg.grid_points;
  opts.m_levels = cfg.m_levels;
  const auto pair = inst.realize();
  if (inst.schedule.kind == ScheduleSpec::Kind::linear) return gap_sweep(pair, opts);
  return schedule_sweep(pair, inst.schedule, opts);
}

inline int cmd_certify(const CliConfig& cfg, std::ostream& out) {
  const auto rep = certify(load_instance(cfg.input));
  Emitter(cfg, out).primary(cfg.format == "structured" ? to_structured(rep).dump(2) + "\n"
                                                       : render_text(rep));
  return rep.certified() ? kExitOk : kExitNotCertified;
}

inline int cmd_sweep(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto inst = load_instance(cfg.input);
  const auto prof = sweep_instance(inst, cfg);
  const auto summary = render_summary(prof);
  if (cfg.format == "structured") {
    Emitter(cfg, out).primary(to_structured(prof).dump(2) + "\n");
  } else if (cfg.format == "text") {
    Emitter(cfg, out).primary(summary);
  } else {
    Emitter(cfg, out).primary(export_profile(prof));
    (cfg.output.empty() ? err : out) << summary;
  }
  if (!cfg.plot.empty()) {
    std::ofstream f(cfg.plot, std::ios::binary);
    if (!f) throw InvalidArgument("cannot write \"" + cfg.plot + "\"");
    f << render_svg(prof);
  }
  return kExitOk;
}

inline int cmd_case(const CliConfig& cfg, std::ostream& out) {
  CaseParams p;
  p.family = parse_family(cfg.family);
  p.n_qubits = p.family == Family::counterexample ? 2 : cfg.n_qubits;
  p.a0 = cfg.a0;
  p.g = cfg.g;
  if (p.family == Family::bit_rotation) {
    p.ai = expand_list(cfg.ai, static_cast<std::size_t>(p.n_qubits), -0.5, "--ai");
  }
  if (p.family == Family::heisenberg) {
    p.aij = expand_list(cfg.aij, pair_count(p.n_qubits), -1.0, "--aij");
  }
  auto built = build_case(p);
  const auto d = dimension_for(p.n_qubits);
  DiagonalSpec hp;
  if (!cfg.hp.empty()) {
    hp = {p.n_qubits, parse_real_list(cfg.hp, "--hp")};
  } else if (built.h_p_hint) {
    hp = *built.h_p_hint;
  } else {
    hp.n_qubits = p.n_qubits;
    for (std::size_t z = 0; z < d; ++z) hp.values.push_back(static_cast<double>(z));
  }
  InstanceSpec inst{p.n_qubits, std::move(built.h_i), std::move(hp), ScheduleSpec::linear()};
  inst.validate();
  Emitter(cfg, out).primary(serialize_instance(inst));
  return kExitOk;
}

inline int cmd_blocks(const CliConfig& cfg, std::ostream& out) {
  const auto inst = load_instance(cfg.input);
  const auto pair = inst.realize();
  const auto blocks = weight_blocks(pair.h_i, inst.n_qubits);
  weight_blocks(pair.h_p, inst.n_qubits);
  bool all = true;
  std::ostringstream text;
  nlohmann::json js = nlohmann::json::array();
  for (const auto& b : blocks) {
    const auto rep = certify_block(pair, inst.n_qubits, b.k);
    all = all && rep.certified();
    text << "block k = " << b.k << ", dim = " << b.basis_indices.size()
         << ", overall = " << to_string(rep.overall) << ", min_r = " << fmt(rep.min_r)
         << ", degeneracy_gap = " << fmt(rep.degeneracy_gap) << "\n";
    auto j = to_structured(rep);
    j["k"] = b.k;
    j["dim"] = b.basis_indices.size();
    js.push_back(std::move(j));
  }
  text << "blocks = " << blocks.size() << ", all_certified = " << (all ? "true" : "false") << "\n";
  Emitter(cfg, out).primary(cfg.format == "structured" ? js.dump(2) + "\n" : text.str());
  return all ? kExitOk : kExitNotCertified;
}

inline int cmd_estimate(const CliConfig& cfg, std::ostream& out) {
  const auto inst = load_instance(cfg.input);
  const auto prof = sweep_instance(inst, cfg);
  const auto est = estimate_runtime(inst, prof, cfg.target_epsilon);
  Emitter(cfg, out).primary(cfg.format == "structured" ? to_structured(est).dump(2) + "\n"
                                                       : render_text(est));
  return kExitOk;
}

inline int cmd_verify_proof(const CliConfig& cfg, std::ostream& out) {
  const auto inst = load_instance(cfg.input);
  const auto pair = inst.realize();
  const auto rep = certify(pair);
  if (!rep.certified()) {
    Emitter(cfg, out).primary(render_text(rep) +
                              "chain = skipped (instance is not certified)\n");
    return kExitNotCertified;
  }
  const auto chain = verify_proof_chain(pair.h_i, pair.h_p, *rep.gauge,
                                        default_chain_grid(cfg.proof_samples));
  Emitter(cfg, out).primary(cfg.format == "structured" ? to_structured(chain).dump(2) + "\n"
                                                       : render_text(chain));
  return chain.passed() ? kExitOk : kExitError;
}

/// Parses argv and runs one command; never throws.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CliConfig cfg;
  CLI::App app{"Ground-gap certification and spectral sweeps for adiabatic Hamiltonians", "aqcgap"};
  app.require_subcommand(1);

  auto add_common = [&](CLI::App* sub, bool needs_input) {
    if (needs_input) sub->add_option("input", cfg.input, "instance file")->required();
    sub->add_option("--out", cfg.output, "write the main output to this path");
    sub->add_option("--format", cfg.format, "text | csv | structured");
  };
  auto add_sweep_flags = [&](CLI::App* sub) {
    sub->add_option("--grid", cfg.grid_points, "grid points on [0, 1 - 1/N]");
    sub->add_option("--levels", cfg.m_levels, "number of lowest levels");
  };

  auto* certify_cmd = app.add_subcommand("certify", "test the sufficient gap conditions");
  add_common(certify_cmd, true);
  auto* sweep_cmd = app.add_subcommand("sweep", "sweep the low spectrum of H(s)");
  add_common(sweep_cmd, true);
  add_sweep_flags(sweep_cmd);
  sweep_cmd->add_option("--plot", cfg.plot, "also write an SVG level plot");
  auto* case_cmd = app.add_subcommand("case", "write an instance for a Hamiltonian family");
  add_common(case_cmd, false);
  case_cmd->add_option("family", cfg.family,
                       "bit-rotation | xy-hopping | heisenberg | projector-uniform | "
                       "transverse-positive | counterexample")
      ->required();
  case_cmd->add_option("--n", cfg.n_qubits, "qubit count");
  case_cmd->add_option("--a0", cfg.a0, "identity coefficient");
  case_cmd->add_option("--ai", cfg.ai, "bit-rotation coefficients (one value or n, comma separated)");
  case_cmd->add_option("--aij", cfg.aij, "heisenberg couplings (one value or n(n-1)/2)");
  case_cmd->add_option("--g", cfg.g, "transverse field strength");
  case_cmd->add_option("--hp", cfg.hp, "problem diagonal, 2^n comma-separated values");
  auto* blocks_cmd = app.add_subcommand("blocks", "per Hamming-weight block certification");
  add_common(blocks_cmd, true);
  auto* estimate_cmd = app.add_subcommand("estimate", "adiabatic runtime estimate");
  add_common(estimate_cmd, true);
  add_sweep_flags(estimate_cmd);
  estimate_cmd->add_option("--eps", cfg.target_epsilon, "target adiabatic ratio in (0, 1)");
  auto* proof_cmd = app.add_subcommand("verify-proof", "corroborate the nonnegativity chain");
  add_common(proof_cmd, true);
  proof_cmd->add_option("--grid", cfg.proof_samples, "number of sampled s values");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitError;
  }

  try {
    cfg.command = app.get_subcommands().front()->get_name();
    cfg.validate();
    if (cfg.command == "certify") return cmd_certify(cfg, out);
    if (cfg.command == "sweep") {
      if (sweep_cmd->count("--format") == 0) cfg.format = "csv";
      return cmd_sweep(cfg, out, err);
    }
    if (cfg.command == "case") return cmd_case(cfg, out);
    if (cfg.command == "blocks") return cmd_blocks(cfg, out);
    if (cfg.command == "estimate") return cmd_estimate(cfg, out);
    if (cfg.command == "verify-proof") return cmd_verify_proof(cfg, out);
  } catch (const std::exception& e) {
    err << "aqcgap " << cfg.command << ": error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}

}  // namespace aqcgap::cli
