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

#include <Eigen/Eigenvalues>

#include <cmath>
#include <limits>

#include "aqcgap/error.hpp"
#include "aqcgap/paulialg.hpp"

namespace aqcgap {

/// Eigenvalues ascending; column m of `eigenvectors` belongs to eigenvalue m.
struct EigenSystem {
  RealVector eigenvalues;
  DenseMatrix eigenvectors;

  std::size_t dim() const { return static_cast<std::size_t>(eigenvalues.size()); }
  double spectral_width() const {
    return eigenvalues.size() == 0
               ? 0.0
               : eigenvalues(eigenvalues.size() - 1) - eigenvalues(0);
  }
};

struct GroundState {
  double energy = 0.0;
  ComplexVector vector;
  /// epsilon_1 - epsilon_0; +inf for a one-dimensional space.
  double degeneracy_gap = 0.0;
  double degeneracy_tolerance = 0.0;
  bool is_unique = false;
};

struct LowSpectrum {
  RealVector eigenvalues;
  DenseMatrix eigenvectors;
};

/// 1e-8 (1 + width): separates a unique ground level from a degenerate one.
inline double degeneracy_tolerance(double spectral_width) {
  return 1e-8 * (1.0 + spectral_width);
}

/// Rotates `v` by a global phase so its largest-magnitude component is real
/// and nonnegative. Magnitudes within 1e-12 relative of the maximum count as
/// tied; the lowest such index wins.
inline void fix_phase(Eigen::Ref<ComplexVector> v) {
  if (v.size() == 0) return;
  const double top = v.cwiseAbs().maxCoeff();
  if (top == 0.0) return;
  Eigen::Index pivot = 0;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (std::abs(v(i)) >= top * (1.0 - 1e-12)) {
      pivot = i;
      break;
    }
  }
  const Complex rot = std::conj(v(pivot)) / std::abs(v(pivot));
  v *= rot;
  v(pivot) = std::abs(v(pivot));
}

namespace detail {

template <typename Solver>
void check_solver(const Solver& solver) {
  if (solver.info() != Eigen::Success) {
    throw NonConvergence("Hermitian eigensolver failed to converge");
  }
}

}  // namespace detail

/// Full decomposition. Real symmetric inputs take the real solver.
inline EigenSystem eigensystem(const HermitianMatrix& h) {
  EigenSystem out;
  if (h.is_real()) {
    const Eigen::MatrixXd real = h.entries().real();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(real);
    detail::check_solver(solver);
    out.eigenvalues = solver.eigenvalues();
    out.eigenvectors = solver.eigenvectors().cast<Complex>();
  } else {
    Eigen::SelfAdjointEigenSolver<DenseMatrix> solver(h.entries());
    detail::check_solver(solver);
    out.eigenvalues = solver.eigenvalues();
    out.eigenvectors = solver.eigenvectors();
  }
  for (Eigen::Index m = 0; m < out.eigenvectors.cols(); ++m) {
    fix_phase(out.eigenvectors.col(m));
  }
  return out;
}

/// All eigenvalues, ascending, without vectors.
inline RealVector eigenvalues(const HermitianMatrix& h) {
  if (h.is_real()) {
    const Eigen::MatrixXd real = h.entries().real();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(real, Eigen::EigenvaluesOnly);
    detail::check_solver(solver);
    return solver.eigenvalues();
  }
  Eigen::SelfAdjointEigenSolver<DenseMatrix> solver(h.entries(), Eigen::EigenvaluesOnly);
  detail::check_solver(solver);
  return solver.eigenvalues();
}

inline void check_level_count(const HermitianMatrix& h, std::size_t m) {
  if (m < 1 || m > h.dim()) {
    throw InvalidArgument("requested " + std::to_string(m) +
                          " levels from a matrix of dim " + std::to_string(h.dim()));
  }
}

/// The m lowest eigenpairs.
inline LowSpectrum low_spectrum(const HermitianMatrix& h, std::size_t m) {
  check_level_count(h, m);
  auto full = eigensystem(h);
  const auto k = static_cast<Eigen::Index>(m);
  return {full.eigenvalues.head(k), full.eigenvectors.leftCols(k)};
}

inline RealVector low_eigenvalues(const HermitianMatrix& h, std::size_t m) {
  check_level_count(h, m);
  return eigenvalues(h).head(static_cast<Eigen::Index>(m));
}

inline GroundState ground_state(const EigenSystem& es) {
  GroundState g;
  g.energy = es.eigenvalues(0);
  g.vector = es.eigenvectors.col(0);
  g.degeneracy_tolerance = degeneracy_tolerance(es.spectral_width());
  g.degeneracy_gap = es.dim() > 1 ? es.eigenvalues(1) - es.eigenvalues(0)
                                  : std::numeric_limits<double>::infinity();
  g.is_unique = g.degeneracy_gap > g.degeneracy_tolerance;
  return g;
}

inline GroundState ground_state(const HermitianMatrix& h) {
  return ground_state(eigensystem(h));
}

/// 2-norm of a Hermitian matrix, max |eigenvalue|.
inline double spectral_norm(const HermitianMatrix& h) {
  return eigenvalues(h).cwiseAbs().maxCoeff();
}

}  // namespace aqcgap
