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

// Decision procedure for the sufficient gap condition: H_i has a unique
// ground state psi0 with no vanishing amplitude, and in the gauge
// U = diag(psi0_i / |psi0_i|) every off-diagonal entry of U^dagger H_i U is
// real and nonpositive. When both hold, the interpolation
// (1 - s) H_i + s H_p with diagonal H_p keeps a nonzero ground gap on [0, 1).

#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "aqcgap/error.hpp"
#include "aqcgap/paulialg.hpp"
#include "aqcgap/specfile.hpp"
#include "aqcgap/spectral.hpp"

namespace aqcgap {

/// Smallest admissible ground-state amplitude |psi0_i|.
inline constexpr double kPositivityTolerance = 1e-10;

inline double sign_tolerance(const HermitianMatrix& h_i) {
  return 1e-10 * (1.0 + h_i.max_abs());
}

/// Diagonal unitary U = diag(e^{i alpha_1}, ..., e^{i alpha_d}).
class PhaseGauge {
 public:
  PhaseGauge() = default;

  static PhaseGauge from_phases(const std::vector<double>& phases) {
    PhaseGauge g;
    g.factors_.resize(static_cast<Eigen::Index>(phases.size()));
    for (std::size_t i = 0; i < phases.size(); ++i) {
      g.factors_(static_cast<Eigen::Index>(i)) = std::polar(1.0, phases[i]);
    }
    return g;
  }

  /// Unit factors taken directly from the amplitudes, so real amplitudes give
  /// exactly +-1. Every |amplitude| must be nonzero.
  static PhaseGauge from_amplitudes(const ComplexVector& psi) {
    PhaseGauge g;
    g.factors_ = psi;
    for (Eigen::Index i = 0; i < psi.size(); ++i) {
      const Complex v = psi(i);
      g.factors_(i) = v.imag() == 0.0 ? Complex{v.real() > 0 ? 1.0 : -1.0, 0.0}
                                      : v / std::abs(v);
    }
    return g;
  }

  static PhaseGauge identity(std::size_t d) {
    PhaseGauge g;
    g.factors_ = ComplexVector::Ones(static_cast<Eigen::Index>(d));
    return g;
  }

  std::size_t dim() const { return static_cast<std::size_t>(factors_.size()); }
  const ComplexVector& factors() const { return factors_; }

  /// alpha_i = arg(U_ii) in (-pi, pi].
  std::vector<double> phases() const {
    std::vector<double> out(dim());
    for (std::size_t i = 0; i < dim(); ++i) {
      out[i] = std::arg(factors_(static_cast<Eigen::Index>(i)));
      if (out[i] == -M_PI) out[i] = M_PI;
    }
    return out;
  }

  bool is_identity(double tol = 1e-12) const {
    return (factors_.array() - Complex{1.0}).abs().maxCoeff() <= tol;
  }

 private:
  ComplexVector factors_;
};

/// U^dagger H U.
inline HermitianMatrix rotate(const HermitianMatrix& h, const PhaseGauge& u) {
  if (h.dim() != u.dim()) {
    throw DimensionMismatch("gauge has dim " + std::to_string(u.dim()) + ", matrix " +
                            std::to_string(h.dim()));
  }
  const auto d = static_cast<Eigen::Index>(h.dim());
  const auto& f = u.factors();
  const auto& a = h.entries();
  DenseMatrix m(d, d);
  for (Eigen::Index j = 0; j < d; ++j) {
    m(j, j) = a(j, j).real();
    for (Eigen::Index i = 0; i < j; ++i) {
      m(i, j) = std::conj(f(i)) * a(i, j) * f(j);
      m(j, i) = std::conj(m(i, j));
    }
  }
  return HermitianMatrix(std::move(m));
}

/// U H U^dagger.
inline HermitianMatrix unrotate(const HermitianMatrix& h, const PhaseGauge& u) {
  PhaseGauge inv = PhaseGauge::from_amplitudes(u.factors().conjugate());
  return rotate(h, inv);
}

/// Extracts U from a unique ground state. Throws NonUniqueGround or
/// Condition1Violated (an amplitude below `positivity_tolerance`).
inline PhaseGauge extract_gauge(const GroundState& ground,
                                double positivity_tolerance = kPositivityTolerance) {
  if (!ground.is_unique) {
    throw NonUniqueGround("ground state is degenerate (gap " +
                          std::to_string(ground.degeneracy_gap) + " <= tolerance " +
                          std::to_string(ground.degeneracy_tolerance) + ")");
  }
  const auto& psi = ground.vector;
  for (Eigen::Index i = 0; i < psi.size(); ++i) {
    if (std::abs(psi(i)) < positivity_tolerance) {
      throw Condition1Violated("ground-state amplitude " + std::to_string(i) + " has magnitude " +
                               std::to_string(std::abs(psi(i))) + ", no positive gauge exists");
    }
  }
  return PhaseGauge::from_amplitudes(psi);
}

struct SignViolation {
  std::size_t row = 0;
  std::size_t col = 0;
  Complex value;
};

struct Condition2Result {
  bool pass = true;
  std::vector<SignViolation> violations;
  double tolerance = 0.0;
};

/// Every off-diagonal M_ij of M = U^dagger H_i U must satisfy
/// |Im M_ij| <= tol and Re M_ij <= tol. Zero entries are allowed.
inline Condition2Result check_condition2(const HermitianMatrix& h_i, const PhaseGauge& gauge) {
  const auto m = rotate(h_i, gauge);
  Condition2Result out;
  out.tolerance = sign_tolerance(h_i);
  for (std::size_t i = 0; i < m.dim(); ++i) {
    for (std::size_t j = 0; j < m.dim(); ++j) {
      if (i == j) continue;
      const Complex v = m(i, j);
      if (std::abs(v.imag()) > out.tolerance || v.real() > out.tolerance) {
        out.violations.push_back({i, j, v});
      }
    }
  }
  out.pass = out.violations.empty();
  return out;
}

enum class Verdict { pass, fail, skipped };
enum class Overall { certified, not_certified };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::skipped: return "skipped";
  }
  return "?";
}

inline const char* to_string(Overall o) {
  return o == Overall::certified ? "certified" : "not_certified";
}

struct CertificateReport {
  Verdict condition1 = Verdict::fail;
  double degeneracy_gap = 0.0;
  double min_r = 0.0;
  std::string condition1_detail;
  double ground_energy = 0.0;
  /// r_i = |psi0_i|; psi0 = U r when a gauge exists.
  RealVector r;

  /// `skipped` when condition (1) failed and no gauge is available.
  Verdict condition2 = Verdict::skipped;
  std::vector<SignViolation> violations;
  double sign_tolerance = 0.0;

  Overall overall = Overall::not_certified;
  std::optional<PhaseGauge> gauge;

  bool certified() const { return overall == Overall::certified; }
};

/// Certifies H_i against a diagonal H_p. The verdict depends only on H_i;
/// H_p is checked for diagonality.
inline CertificateReport certify(const HermitianMatrix& h_i, const HermitianMatrix& h_p) {
  if (h_i.dim() != h_p.dim()) {
    throw DimensionMismatch("H_i and H_p dims differ");
  }
  if (!h_p.is_diagonal()) {
    throw InvalidArgument("H_p must be diagonal in the computational basis");
  }
  CertificateReport rep;
  const auto ground = ground_state(h_i);
  rep.degeneracy_gap = ground.degeneracy_gap;
  rep.ground_energy = ground.energy;
  rep.r = ground.vector.cwiseAbs();
  rep.min_r = rep.r.minCoeff();
  rep.sign_tolerance = sign_tolerance(h_i);
  try {
    rep.gauge = extract_gauge(ground);
    rep.condition1 = Verdict::pass;
    rep.condition1_detail = "unique ground state with all amplitudes nonzero";
  } catch (const NonUniqueGround& e) {
    rep.condition1 = Verdict::fail;
    rep.condition1_detail = e.what();
  } catch (const Condition1Violated& e) {
    rep.condition1 = Verdict::fail;
    rep.condition1_detail = e.what();
  }
  if (rep.gauge) {
    auto c2 = check_condition2(h_i, *rep.gauge);
    rep.condition2 = c2.pass ? Verdict::pass : Verdict::fail;
    rep.violations = std::move(c2.violations);
  }
  rep.overall = rep.condition1 == Verdict::pass && rep.condition2 == Verdict::pass
                    ? Overall::certified
                    : Overall::not_certified;
  return rep;
}

inline CertificateReport certify(const HamiltonianPair& pair) {
  return certify(pair.h_i, pair.h_p);
}

inline CertificateReport certify(const InstanceSpec& instance) {
  return certify(instance.realize());
}

}  // namespace aqcgap
