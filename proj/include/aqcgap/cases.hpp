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

// Builders for the initial-Hamiltonian families known to satisfy the gap
// condition, the two-qubit family that violates it, and the Hamming-weight
// block decomposition for weight-conserving Hamiltonians.

#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "aqcgap/certifier.hpp"
#include "aqcgap/error.hpp"
#include "aqcgap/paulialg.hpp"
#include "aqcgap/specfile.hpp"

namespace aqcgap {

enum class Family {
  /// a0 I + sum_i a_i X_i, a_i < 0.
  bit_rotation,
  /// -1/2 sum_{i<j} (X_i X_j + Y_i Y_j).
  xy_hopping,
  /// a0 I + sum_{i<j} a_ij (X_i X_j + Y_i Y_j + Z_i Z_j), a_ij <= 0.
  heisenberg,
  /// I - |u><u| with u the uniform superposition.
  projector_uniform,
  /// g sum_i X_i, g > 0.
  transverse_positive,
  /// -2 XI + IX + IZ - 2 XX, violates the sign condition.
  counterexample,
};

inline const char* to_string(Family f) {
  switch (f) {
    case Family::bit_rotation: return "bit_rotation";
    case Family::xy_hopping: return "xy_hopping";
    case Family::heisenberg: return "heisenberg";
    case Family::projector_uniform: return "projector_uniform";
    case Family::transverse_positive: return "transverse_positive";
    case Family::counterexample: return "counterexample";
  }
  return "?";
}

/// Index of pair (i, j), i < j, in row-major upper-triangular order.
inline std::size_t pair_index(int n, int i, int j) {
  return static_cast<std::size_t>(i * n - i * (i + 1) / 2 + (j - i - 1));
}

inline std::size_t pair_count(int n) { return static_cast<std::size_t>(n * (n - 1) / 2); }

struct CaseParams {
  Family family = Family::bit_rotation;
  int n_qubits = 1;
  double a0 = 0.0;
  /// bit_rotation: one negative coefficient per qubit.
  std::vector<double> ai;
  /// heisenberg: n(n-1)/2 nonpositive couplings, see pair_index.
  std::vector<double> aij;
  /// transverse_positive field strength.
  double g = 1.0;

  void validate() const {
    dimension_for(n_qubits);
    if (!std::isfinite(a0)) throw InvalidArgument("a0 must be finite");
    switch (family) {
      case Family::bit_rotation:
        if (ai.size() != static_cast<std::size_t>(n_qubits)) {
          throw InvalidArgument("bit_rotation needs " + std::to_string(n_qubits) +
                                " coefficients a_i, got " + std::to_string(ai.size()));
        }
        for (double a : ai) {
          if (!(a < 0.0) || !std::isfinite(a)) {
            throw InvalidArgument("bit_rotation coefficients a_i must be negative");
          }
        }
        break;
      case Family::heisenberg:
        if (n_qubits < 2) throw InvalidArgument("heisenberg needs at least 2 qubits");
        if (aij.size() != pair_count(n_qubits)) {
          throw InvalidArgument("heisenberg needs " + std::to_string(pair_count(n_qubits)) +
                                " couplings a_ij, got " + std::to_string(aij.size()));
        }
        for (double a : aij) {
          if (!(a <= 0.0) || !std::isfinite(a)) {
            throw InvalidArgument("heisenberg couplings a_ij must be nonpositive");
          }
        }
        break;
      case Family::xy_hopping:
        if (n_qubits < 2) throw InvalidArgument("xy_hopping needs at least 2 qubits");
        break;
      case Family::transverse_positive:
        if (!(g > 0.0) || !std::isfinite(g)) {
          throw InvalidArgument("transverse_positive field g must be positive");
        }
        break;
      case Family::counterexample:
        if (n_qubits != 2) throw InvalidArgument("counterexample is defined on 2 qubits");
        break;
      case Family::projector_uniform:
        break;
    }
  }
};

/// Literature parameterizations expressed through (a0, a_i, a_ij).
namespace presets {

inline CaseParams base_params(Family f, int n) {
  CaseParams p;
  p.family = f;
  p.n_qubits = n;
  return p;
}

/// a0 = sum d_i / 2, a_i = -d_i / 2 with positive integers d_i.
inline CaseParams farhi(const std::vector<int>& d) {
  CaseParams p = base_params(Family::bit_rotation, static_cast<int>(d.size()));
  for (int di : d) {
    if (di <= 0) throw InvalidArgument("d_i must be positive integers");
    p.a0 += di / 2.0;
    p.ai.push_back(-di / 2.0);
  }
  return p;
}

/// a0 = sum w_i / 2, a_i = -w_i / 2 with positive w_i.
inline CaseParams hogg(const std::vector<double>& omega) {
  CaseParams p = base_params(Family::bit_rotation, static_cast<int>(omega.size()));
  for (double w : omega) {
    if (!(w > 0.0)) throw InvalidArgument("omega_i must be positive");
    p.a0 += w / 2.0;
    p.ai.push_back(-w / 2.0);
  }
  return p;
}

/// a0 = 0, a_i = -Delta_i with positive Delta_i.
inline CaseParams amin(const std::vector<double>& delta) {
  CaseParams p = base_params(Family::bit_rotation, static_cast<int>(delta.size()));
  for (double v : delta) {
    if (!(v > 0.0)) throw InvalidArgument("Delta_i must be positive");
    p.ai.push_back(-v);
  }
  return p;
}

/// a0 = n / 2, a_i = -1/2.
inline CaseParams gaitan(int n) {
  CaseParams p = base_params(Family::bit_rotation, n);
  p.a0 = n / 2.0;
  p.ai.assign(static_cast<std::size_t>(n), -0.5);
  return p;
}

/// a0 = 0, a_ij = -M_ij / 2 with nonnegative integers M_ij.
inline CaseParams ralf(int n, const std::vector<int>& m) {
  CaseParams p = base_params(Family::heisenberg, n);
  for (int v : m) {
    if (v < 0) throw InvalidArgument("M_ij must be nonnegative");
    p.aij.push_back(-v / 2.0);
  }
  return p;
}

/// a0 = 0, a_ij = -2 |f_ij|.
inline CaseParams schaller(int n, const std::vector<double>& f) {
  CaseParams p = base_params(Family::heisenberg, n);
  for (double v : f) p.aij.push_back(-2.0 * std::abs(v));
  return p;
}

/// a0 = Omega sum n_ij / 2, a_ij = -Omega n_ij / 2, Omega > 0.
inline CaseParams hofmann(int n, double omega, const std::vector<int>& nij) {
  if (!(omega > 0.0)) throw InvalidArgument("Omega must be positive");
  CaseParams p = base_params(Family::heisenberg, n);
  for (int v : nij) {
    if (v < 0) throw InvalidArgument("n_ij must be nonnegative");
    p.a0 += omega * v / 2.0;
    p.aij.push_back(-omega * v / 2.0);
  }
  return p;
}

}  // namespace presets

inline std::vector<double> counterexample_problem_diagonal() { return {0.0, 2.0, 6.0, 8.0}; }

struct CaseInstance {
  InitialSpec h_i;
  /// Problem diagonal the family is usually paired with, if any.
  std::optional<DiagonalSpec> h_p_hint;
};

inline CaseInstance build_case(const CaseParams& params) {
  params.validate();
  const int n = params.n_qubits;
  PauliExpression expr{n, {}};
  switch (params.family) {
    case Family::bit_rotation:
      if (params.a0 != 0.0) expr.add(params.a0, PauliString::identity(n));
      for (int q = 0; q < n; ++q) {
        expr.add(params.ai[static_cast<std::size_t>(q)], PauliString::single(n, q, PauliAxis::X));
      }
      return {expr, std::nullopt};
    case Family::xy_hopping:
      for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
          expr.add(-0.5, PauliString::pair(n, i, j, PauliAxis::X));
          expr.add(-0.5, PauliString::pair(n, i, j, PauliAxis::Y));
        }
      }
      return {expr, std::nullopt};
    case Family::heisenberg:
      if (params.a0 != 0.0) expr.add(params.a0, PauliString::identity(n));
      for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
          const double a = params.aij[pair_index(n, i, j)];
          for (auto axis : {PauliAxis::X, PauliAxis::Y, PauliAxis::Z}) {
            expr.add(a, PauliString::pair(n, i, j, axis));
          }
        }
      }
      return {expr, std::nullopt};
    case Family::projector_uniform:
      return {ProjectorSpec::uniform(n), std::nullopt};
    case Family::transverse_positive:
      for (int q = 0; q < n; ++q) expr.add(params.g, PauliString::single(n, q, PauliAxis::X));
      return {expr, std::nullopt};
    case Family::counterexample:
      expr.add(-2.0, "XI").add(1.0, "IX").add(1.0, "IZ").add(-2.0, "XX");
      return {expr, DiagonalSpec{2, counterexample_problem_diagonal()}};
  }
  throw InvalidArgument("unknown family");
}

/// Full instance with the given problem diagonal and a linear schedule.
inline InstanceSpec make_instance(const CaseParams& params, DiagonalSpec h_p) {
  auto c = build_case(params);
  InstanceSpec spec{params.n_qubits, std::move(c.h_i), std::move(h_p), ScheduleSpec::linear()};
  spec.validate();
  return spec;
}

/// Bitstrings with Hamming weight k, ascending (lexicographic in bit order).
inline std::vector<std::size_t> weight_basis(int n, int k) {
  std::vector<std::size_t> out;
  const auto d = dimension_for(n);
  for (std::size_t z = 0; z < d; ++z) {
    if (hamming_weight(z) == k) out.push_back(z);
  }
  return out;
}

/// Closed-form ground state as a length-2^n vector. For the weight-conserving
/// families `block` selects the Hamming-weight sector and the result is the
/// uniform superposition over that sector.
inline ComplexVector ground_state_reference(const CaseParams& params,
                                            std::optional<int> block = std::nullopt) {
  params.validate();
  const int n = params.n_qubits;
  const auto d = static_cast<Eigen::Index>(dimension_for(n));
  ComplexVector v = ComplexVector::Zero(d);
  switch (params.family) {
    case Family::bit_rotation:
    case Family::projector_uniform:
      v.setConstant(1.0 / std::sqrt(static_cast<double>(d)));
      return v;
    case Family::transverse_positive:
      for (Eigen::Index z = 0; z < d; ++z) {
        v(z) = ((hamming_weight(static_cast<std::size_t>(z)) & 1) ? -1.0 : 1.0) /
               std::sqrt(static_cast<double>(d));
      }
      return v;
    case Family::xy_hopping:
    case Family::heisenberg: {
      if (!block || *block < 0 || *block > n) {
        throw InvalidArgument(std::string(to_string(params.family)) +
                              " ground states are defined per weight block; pass k in [0, n]");
      }
      const auto basis = weight_basis(n, *block);
      const double amp = 1.0 / std::sqrt(static_cast<double>(basis.size()));
      for (auto z : basis) v(static_cast<Eigen::Index>(z)) = amp;
      return v;
    }
    case Family::counterexample: {
      const double r2 = std::sqrt(2.0);
      const double norm = std::sqrt(4.0 + 2.0 * r2) / 4.0;
      v << norm * (r2 - 1.0), norm, norm * (r2 - 1.0), norm;
      return v;
    }
  }
  return v;
}

struct WeightBlock {
  int k = 0;
  std::vector<std::size_t> basis_indices;
  HermitianMatrix block_matrix;
};

/// max |[h, W]_ij| = max |h_ij| |w(j) - w(i)| for W the total weight.
inline double weight_commutator_defect(const HermitianMatrix& h) {
  double worst = 0.0;
  for (std::size_t i = 0; i < h.dim(); ++i) {
    for (std::size_t j = 0; j < h.dim(); ++j) {
      const int dw = hamming_weight(j) - hamming_weight(i);
      if (dw != 0) worst = std::max(worst, std::abs(h(i, j)) * std::abs(dw));
    }
  }
  return worst;
}

inline constexpr double kWeightSymmetryTolerance = 1e-10;

/// Splits a weight-conserving h into its n + 1 Hamming-weight blocks.
inline std::vector<WeightBlock> weight_blocks(const HermitianMatrix& h, int n) {
  if (h.dim() != dimension_for(n)) throw DimensionMismatch("matrix dim is not 2^n");
  const double defect = weight_commutator_defect(h);
  if (defect > kWeightSymmetryTolerance) {
    throw NotWeightSymmetric("matrix does not conserve Hamming weight (||[H, W]|| = " +
                             std::to_string(defect) + ")");
  }
  std::vector<WeightBlock> out;
  for (int k = 0; k <= n; ++k) {
    auto basis = weight_basis(n, k);
    auto m = restrict_to(h, basis);
    out.push_back({k, std::move(basis), std::move(m)});
  }
  return out;
}

/// Both operators restricted to weight sector k.
inline HamiltonianPair restrict_pair(const HamiltonianPair& pair, int n, int k) {
  for (const auto* h : {&pair.h_i, &pair.h_p}) {
    const double defect = weight_commutator_defect(*h);
    if (defect > kWeightSymmetryTolerance) {
      throw NotWeightSymmetric("operator does not conserve Hamming weight (||[H, W]|| = " +
                               std::to_string(defect) + ")");
    }
  }
  if (k < 0 || k > n) throw InvalidArgument("block index k must lie in [0, n]");
  const auto basis = weight_basis(n, k);
  return {restrict_to(pair.h_i, basis), restrict_to(pair.h_p, basis)};
}

/// Certifier run inside the dimension-(n choose k) sector.
inline CertificateReport certify_block(const HamiltonianPair& pair, int n, int k) {
  return certify(restrict_pair(pair, n, k));
}

}  // namespace aqcgap
