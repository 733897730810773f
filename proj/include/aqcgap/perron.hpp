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

// Independent corroboration of the positivity argument behind the gap
// condition. With c1 > lambda_max(H_i) and c2 > lambda_max(H_p),
//
//   F(s) = [(1 - s) c1 + s c2] I - U^dagger H(s) U
//        = (1 - s)(c1 I - U^dagger H_i U) + s (c2 I - H_p)
//
// is entrywise nonnegative, some power of it is entrywise positive, and its
// simple Perron root mirrors the ground energy of H(s).

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "aqcgap/certifier.hpp"
#include "aqcgap/error.hpp"
#include "aqcgap/paulialg.hpp"
#include "aqcgap/spectral.hpp"

namespace aqcgap {

struct FShifts {
  double c1 = 0.0;
  double c2 = 0.0;
};

/// c1 = lambda_max(H_i) + 1, c2 = lambda_max(H_p) + 1.
inline FShifts default_shifts(const HermitianMatrix& h_i, const HermitianMatrix& h_p) {
  const auto ei = eigenvalues(h_i);
  const auto ep = eigenvalues(h_p);
  return {ei(ei.size() - 1) + 1.0, ep(ep.size() - 1) + 1.0};
}

struct FSample {
  double s = 0.0;
  FShifts shifts;
  HermitianMatrix matrix;
};

/// F(s) without the sign check.
inline HermitianMatrix f_matrix(const HermitianMatrix& h_i, const HermitianMatrix& h_p,
                                const PhaseGauge& gauge, double s, const FShifts& shifts) {
  const auto h = rotate(interpolate(h_i, h_p, s), gauge);
  const auto d = static_cast<Eigen::Index>(h.dim());
  const double shift = (1.0 - s) * shifts.c1 + s * shifts.c2;
  return HermitianMatrix(shift * DenseMatrix::Identity(d, d) - h.entries());
}

/// (1 - s)(c1 I - U^dagger H_i U), the lower bound F(s) dominates entrywise.
inline HermitianMatrix f_lower_bound(const HermitianMatrix& h_i, const PhaseGauge& gauge,
                                     double s, const FShifts& shifts) {
  const auto m = rotate(h_i, gauge);
  const auto d = static_cast<Eigen::Index>(m.dim());
  return HermitianMatrix((1.0 - s) * (shifts.c1 * DenseMatrix::Identity(d, d) - m.entries()));
}

inline double nonnegativity_tolerance(const DenseMatrix& a) {
  return 1e-12 * (1.0 + a.cwiseAbs().maxCoeff());
}

/// First entry that is not real and nonnegative within tolerance, if any.
inline std::optional<SignViolation> first_negative_entry(const DenseMatrix& a) {
  const double tol = nonnegativity_tolerance(a);
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      const Complex v = a(i, j);
      if (v.real() < -tol || std::abs(v.imag()) > tol) {
        return SignViolation{static_cast<std::size_t>(i), static_cast<std::size_t>(j), v};
      }
    }
  }
  return std::nullopt;
}

/// F(s) with default shifts. Throws EntryNegative when an entry falls below
/// -1e-12 (1 + max|F|), which happens exactly when condition (2) fails.
inline FSample build_f(const HermitianMatrix& h_i, const HermitianMatrix& h_p,
                       const PhaseGauge& gauge, double s,
                       std::optional<FShifts> shifts = std::nullopt) {
  if (!(s >= 0.0 && s < 1.0)) throw InvalidArgument("F(s) is defined for s in [0, 1)");
  const FShifts sh = shifts.value_or(default_shifts(h_i, h_p));
  auto f = f_matrix(h_i, h_p, gauge, s, sh);
  if (auto bad = first_negative_entry(f.entries())) {
    throw EntryNegative(bad->row, bad->col, bad->value,
                        "F(" + std::to_string(s) + ") has entry (" + std::to_string(bad->row) +
                            ", " + std::to_string(bad->col) + ") = " +
                            std::to_string(bad->value.real()) + " below zero");
  }
  return {s, sh, std::move(f)};
}

struct PrimitivityCertificate {
  bool is_irreducible = false;
  bool is_primitive = false;
  /// Least k with A^k entrywise positive.
  std::optional<std::size_t> n0;
  /// Index of imprimitivity; 0 when reducible.
  std::size_t period = 0;
  /// Strongly connected components of the pattern graph, each sorted.
  std::vector<std::vector<std::size_t>> reducible_blocks;
};

inline std::size_t wielandt_bound(std::size_t d) { return (d - 1) * (d - 1) + 1; }

namespace detail {

/// Row-major boolean matrix with 64-bit words.
class BitMatrix {
 public:
  explicit BitMatrix(std::size_t d) : d_(d), words_((d + 63) / 64), bits_(d * words_, 0) {}

  void set(std::size_t i, std::size_t j) { bits_[i * words_ + j / 64] |= std::uint64_t{1} << (j % 64); }
  bool get(std::size_t i, std::size_t j) const {
    return (bits_[i * words_ + j / 64] >> (j % 64)) & 1U;
  }

  bool all_set() const {
    const std::uint64_t tail = d_ % 64 == 0 ? ~std::uint64_t{0} : (std::uint64_t{1} << (d_ % 64)) - 1;
    for (std::size_t i = 0; i < d_; ++i) {
      for (std::size_t w = 0; w < words_; ++w) {
        const std::uint64_t want = w + 1 == words_ ? tail : ~std::uint64_t{0};
        if ((bits_[i * words_ + w] & want) != want) return false;
      }
    }
    return true;
  }

  /// this * rhs over the boolean semiring.
  BitMatrix times(const BitMatrix& rhs) const {
    BitMatrix out(d_);
    for (std::size_t i = 0; i < d_; ++i) {
      std::uint64_t* dst = &out.bits_[i * words_];
      for (std::size_t j = 0; j < d_; ++j) {
        if (!get(i, j)) continue;
        const std::uint64_t* src = &rhs.bits_[j * words_];
        for (std::size_t w = 0; w < words_; ++w) dst[w] |= src[w];
      }
    }
    return out;
  }

 private:
  std::size_t d_;
  std::size_t words_;
  std::vector<std::uint64_t> bits_;
};

/// Kosaraju SCCs, iterative.
inline std::vector<std::vector<std::size_t>> strong_components(
    const std::vector<std::vector<std::size_t>>& out_edges) {
  const std::size_t d = out_edges.size();
  std::vector<std::vector<std::size_t>> in_edges(d);
  for (std::size_t u = 0; u < d; ++u) {
    for (auto v : out_edges[u]) in_edges[v].push_back(u);
  }
  std::vector<std::size_t> order;
  order.reserve(d);
  std::vector<char> seen(d, 0);
  for (std::size_t root = 0; root < d; ++root) {
    if (seen[root]) continue;
    std::vector<std::pair<std::size_t, std::size_t>> stack{{root, 0}};
    seen[root] = 1;
    while (!stack.empty()) {
      auto& [u, next] = stack.back();
      if (next < out_edges[u].size()) {
        const auto v = out_edges[u][next++];
        if (!seen[v]) {
          seen[v] = 1;
          stack.emplace_back(v, 0);
        }
      } else {
        order.push_back(u);
        stack.pop_back();
      }
    }
  }
  std::vector<std::vector<std::size_t>> comps;
  std::vector<char> placed(d, 0);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    if (placed[*it]) continue;
    std::vector<std::size_t> comp;
    std::vector<std::size_t> stack{*it};
    placed[*it] = 1;
    while (!stack.empty()) {
      const auto u = stack.back();
      stack.pop_back();
      comp.push_back(u);
      for (auto v : in_edges[u]) {
        if (!placed[v]) {
          placed[v] = 1;
          stack.push_back(v);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  std::sort(comps.begin(), comps.end());
  return comps;
}

}  // namespace detail

/// Decides primitivity of the zero pattern of a nonnegative matrix: edge
/// i -> j iff a_ij > 1e-12 (1 + max a). Primitive iff the graph is strongly
/// connected and its cycle lengths have gcd 1. n0 is found by boolean powers,
/// searched up to the Wielandt bound (d - 1)^2 + 1.
inline PrimitivityCertificate primitivity(const Eigen::MatrixXd& a) {
  if (a.rows() != a.cols() || a.rows() == 0) {
    throw DimensionMismatch("primitivity needs a nonempty square matrix");
  }
  const auto d = static_cast<std::size_t>(a.rows());
  const double scale = 1.0 + a.maxCoeff();
  const double threshold = 1e-12 * scale;
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      if (a(i, j) < -threshold) {
        throw EntryNegative(static_cast<std::size_t>(i), static_cast<std::size_t>(j), a(i, j),
                            "matrix entry (" + std::to_string(i) + ", " + std::to_string(j) +
                                ") is negative");
      }
    }
  }

  std::vector<std::vector<std::size_t>> edges(d);
  detail::BitMatrix pattern(d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      if (a(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) > threshold) {
        edges[i].push_back(j);
        pattern.set(i, j);
      }
    }
  }

  PrimitivityCertificate cert;
  cert.reducible_blocks = detail::strong_components(edges);
  const bool has_edge = std::any_of(edges.begin(), edges.end(), [](const auto& e) { return !e.empty(); });
  cert.is_irreducible = cert.reducible_blocks.size() == 1 && has_edge;
  if (!cert.is_irreducible) return cert;

  // Period: gcd of level[u] + 1 - level[v] over all edges, BFS levels from 0.
  std::vector<long> level(d, -1);
  std::vector<std::size_t> queue{0};
  level[0] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const auto u = queue[head];
    for (auto v : edges[u]) {
      if (level[v] < 0) {
        level[v] = level[u] + 1;
        queue.push_back(v);
      }
    }
  }
  long g = 0;
  for (std::size_t u = 0; u < d; ++u) {
    for (auto v : edges[u]) g = std::gcd(g, std::abs(level[u] + 1 - level[v]));
  }
  cert.period = static_cast<std::size_t>(g);
  cert.is_primitive = cert.period == 1;
  if (!cert.is_primitive) return cert;

  const std::size_t bound = wielandt_bound(d);
  detail::BitMatrix power = pattern;
  for (std::size_t k = 1; k <= bound; ++k) {
    if (power.all_set()) {
      cert.n0 = k;
      break;
    }
    power = power.times(pattern);
  }
  return cert;
}

/// Primitivity of a (numerically real) F(s) sample.
inline PrimitivityCertificate primitivity(const HermitianMatrix& f) {
  if (auto bad = first_negative_entry(f.entries())) {
    throw EntryNegative(bad->row, bad->col, bad->value, "matrix is not entrywise nonnegative");
  }
  return primitivity(Eigen::MatrixXd(f.entries().real()));
}

enum class ChainStep { nonnegative, dominates_lower_bound, primitive, perron_simple, perron_positive, spectral_mirror };

inline const char* to_string(ChainStep step) {
  switch (step) {
    case ChainStep::nonnegative: return "nonnegative";
    case ChainStep::dominates_lower_bound: return "dominates_lower_bound";
    case ChainStep::primitive: return "primitive";
    case ChainStep::perron_simple: return "perron_simple";
    case ChainStep::perron_positive: return "perron_positive";
    case ChainStep::spectral_mirror: return "spectral_mirror";
  }
  return "?";
}

struct ChainSample {
  double s = 0.0;
  bool nonnegative = false;
  bool dominates_lower_bound = false;
  bool primitive = false;
  std::optional<std::size_t> n0;
  bool perron_simple = false;
  bool perron_positive = false;
  double lambda_max = 0.0;
  double ground_energy = 0.0;
  /// |lambda_max(F) + eps_0(H(s)) - [(1 - s) c1 + s c2]|.
  double mirror_residual = 0.0;
  std::optional<ChainStep> failed_step;

  bool passed() const { return !failed_step.has_value(); }
};

/// Per-sample results keyed by s; a numerical corroboration, not a proof.
struct ProofChainReport {
  FShifts shifts;
  std::vector<ChainSample> samples;

  bool passed() const {
    return std::all_of(samples.begin(), samples.end(), [](const auto& x) { return x.passed(); });
  }
  std::vector<const ChainSample*> failures() const {
    std::vector<const ChainSample*> out;
    for (const auto& x : samples) {
      if (!x.passed()) out.push_back(&x);
    }
    return out;
  }
};

/// 101 uniform points {k / 101}, k = 0..100, covering [0, 1 - 1/101].
inline std::vector<double> default_chain_grid(std::size_t points = 101) {
  std::vector<double> grid(points);
  for (std::size_t k = 0; k < points; ++k) grid[k] = static_cast<double>(k) / static_cast<double>(points);
  return grid;
}

inline constexpr double kMirrorTolerance = 1e-9;

inline ChainSample check_chain_sample(const HermitianMatrix& h_i, const HermitianMatrix& h_p,
                                      const PhaseGauge& gauge, double s, const FShifts& shifts) {
  ChainSample out;
  out.s = s;
  const auto f = f_matrix(h_i, h_p, gauge, s, shifts);
  const auto fail = [&](ChainStep step) {
    if (!out.failed_step) out.failed_step = step;
  };

  out.nonnegative = !first_negative_entry(f.entries()).has_value();
  if (!out.nonnegative) {
    fail(ChainStep::nonnegative);
    return out;
  }
  const auto lower = f_lower_bound(h_i, gauge, s, shifts);
  const DenseMatrix excess = f.entries() - lower.entries();
  out.dominates_lower_bound =
      !first_negative_entry(excess).has_value() && !first_negative_entry(lower.entries()).has_value();
  if (!out.dominates_lower_bound) fail(ChainStep::dominates_lower_bound);

  const auto cert = primitivity(f);
  out.primitive = cert.is_primitive && cert.n0 && *cert.n0 <= wielandt_bound(f.dim());
  out.n0 = cert.n0;
  if (!out.primitive) fail(ChainStep::primitive);

  const auto es = eigensystem(f);
  const auto d = es.eigenvalues.size();
  out.lambda_max = es.eigenvalues(d - 1);
  const double top_gap = d > 1 ? es.eigenvalues(d - 1) - es.eigenvalues(d - 2)
                               : std::numeric_limits<double>::infinity();
  out.perron_simple = top_gap > degeneracy_tolerance(es.spectral_width());
  if (!out.perron_simple) fail(ChainStep::perron_simple);
  const ComplexVector v = es.eigenvectors.col(d - 1);
  out.perron_positive = true;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (!(v(i).real() > 0.0) || std::abs(v(i).imag()) > 1e-9) out.perron_positive = false;
  }
  if (!out.perron_positive) fail(ChainStep::perron_positive);

  out.ground_energy = eigenvalues(interpolate(h_i, h_p, s))(0);
  const double shift = (1.0 - s) * shifts.c1 + s * shifts.c2;
  out.mirror_residual = std::abs(out.lambda_max + out.ground_energy - shift);
  if (out.mirror_residual > kMirrorTolerance) fail(ChainStep::spectral_mirror);
  return out;
}

inline ProofChainReport verify_proof_chain(const HermitianMatrix& h_i, const HermitianMatrix& h_p,
                                           const PhaseGauge& gauge,
                                           const std::vector<double>& s_samples) {
  ProofChainReport rep;
  rep.shifts = default_shifts(h_i, h_p);
  rep.samples.reserve(s_samples.size());
  for (double s : s_samples) {
    if (!(s >= 0.0 && s < 1.0)) throw InvalidArgument("proof-chain samples must lie in [0, 1)");
    rep.samples.push_back(check_chain_sample(h_i, h_p, gauge, s, rep.shifts));
  }
  std::sort(rep.samples.begin(), rep.samples.end(),
            [](const ChainSample& x, const ChainSample& y) { return x.s < y.s; });
  return rep;
}

inline ProofChainReport verify_proof_chain(const InstanceSpec& instance, const PhaseGauge& gauge,
                                           const std::vector<double>& s_samples = default_chain_grid()) {
  const auto pair = instance.realize();
  return verify_proof_chain(pair.h_i, pair.h_p, gauge, s_samples);
}

struct PowerLimit {
  /// Exponent N = 2^k reached by repeated squaring.
  std::size_t exponent = 1;
  bool converged = false;
  DenseMatrix limit;
};

/// Repeatedly squares (c1 I - U^dagger H_i U) / (c1 - eps_0) until successive
/// iterates agree to `step_tolerance`. The ratio (c1 - eps_1) / (c1 - eps_0)
/// governs how many squarings are needed. Each square is rescaled to unit
/// trace, the trace of the limit |r><r|, so roundoff in eps_0 cannot compound.
inline PowerLimit power_limit(const HermitianMatrix& h_i, const PhaseGauge& gauge,
                              double step_tolerance = 1e-13, std::size_t max_squarings = 60) {
  const auto ev = eigenvalues(h_i);
  const double c1 = ev(ev.size() - 1) + 1.0;
  const double eps0 = ev(0);
  const auto m = rotate(h_i, gauge);
  const auto d = static_cast<Eigen::Index>(m.dim());
  DenseMatrix b = (c1 * DenseMatrix::Identity(d, d) - m.entries()) / (c1 - eps0);
  PowerLimit out;
  for (std::size_t k = 0; k < max_squarings; ++k) {
    DenseMatrix next = b * b;
    next /= next.trace().real();
    const double change = (next - b).cwiseAbs().maxCoeff();
    b = std::move(next);
    out.exponent *= 2;
    if (change <= step_tolerance) {
      out.converged = true;
      break;
    }
  }
  out.limit = std::move(b);
  return out;
}

}  // namespace aqcgap
