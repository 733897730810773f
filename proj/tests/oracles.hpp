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

// Test-only reference computations, kept independent of the library's
// construction and eigensolver paths.

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <random>
#include <string>
#include <vector>

namespace oracle {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

inline Matrix pauli(char c) {
  Matrix m(2, 2);
  switch (c) {
    case 'I': m << 1, 0, 0, 1; break;
    case 'X': m << 0, 1, 1, 0; break;
    case 'Y': m << 0, Complex(0, -1), Complex(0, 1), 0; break;
    case 'Z': m << 1, 0, 0, -1; break;
    default: throw std::invalid_argument("bad Pauli letter");
  }
  return m;
}

inline Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

/// sigma_{s[0]} (x) sigma_{s[1]} (x) ... by repeated Kronecker products.
inline Matrix pauli_string(const std::string& s) {
  Matrix out = pauli(s.at(0));
  for (std::size_t q = 1; q < s.size(); ++q) out = kron(out, pauli(s[q]));
  return out;
}

inline Matrix pauli_sum(const std::vector<std::pair<double, std::string>>& terms) {
  Matrix out = Matrix::Zero(std::int64_t{1} << terms.at(0).second.size(),
                            std::int64_t{1} << terms.at(0).second.size());
  for (const auto& [c, s] : terms) out += c * pauli_string(s);
  return out;
}

/// Number of eigenvalues of Hermitian h strictly below x, from the inertia of
/// h - x I via an unpivoted LDL^dagger factorization (Sylvester's law).
inline int count_below(const Matrix& h, double x) {
  Matrix a = h - x * Matrix::Identity(h.rows(), h.cols());
  const auto n = a.rows();
  int negatives = 0;
  for (Eigen::Index k = 0; k < n; ++k) {
    double pivot = a(k, k).real();
    if (pivot == 0.0) pivot = -1e-300;
    if (pivot < 0) ++negatives;
    for (Eigen::Index i = k + 1; i < n; ++i) {
      const Complex l = a(i, k) / pivot;
      for (Eigen::Index j = k + 1; j < n; ++j) a(i, j) -= l * std::conj(a(j, k));
    }
  }
  return negatives;
}

/// m-th smallest eigenvalue (0-based) by bisection on the inertia count.
inline double eigenvalue_by_bisection(const Matrix& h, int m, double tol = 1e-13) {
  double radius = 0.0;
  for (Eigen::Index i = 0; i < h.rows(); ++i) radius = std::max(radius, h.row(i).cwiseAbs().sum());
  double lo = -radius - 1.0;
  double hi = radius + 1.0;
  while (hi - lo > tol * (1.0 + std::abs(lo) + std::abs(hi))) {
    const double mid = 0.5 * (lo + hi);
    if (count_below(h, mid) > m) hi = mid;
    else lo = mid;
  }
  return 0.5 * (lo + hi);
}

/// max_i |a_i - e^{i theta} b_i| minimized over the global phase theta.
inline double phase_distance(const Vector& a, const Vector& b) {
  const Complex overlap = b.dot(a);
  const Complex phase = std::abs(overlap) > 0 ? overlap / std::abs(overlap) : Complex(1.0);
  return (a - phase * b).cwiseAbs().maxCoeff();
}

inline Matrix random_hermitian(std::mt19937_64& rng, Eigen::Index d, bool real = false) {
  std::normal_distribution<double> nd;
  Matrix a(d, d);
  for (Eigen::Index i = 0; i < d; ++i) {
    for (Eigen::Index j = 0; j < d; ++j) a(i, j) = Complex(nd(rng), real ? 0.0 : nd(rng));
  }
  Matrix h = (a + a.adjoint()) / 2.0;
  for (Eigen::Index i = 0; i < d; ++i) h(i, i) = h(i, i).real();
  return h;
}

inline std::vector<double> random_phases(std::mt19937_64& rng, std::size_t d) {
  std::uniform_real_distribution<double> u(-M_PI, M_PI);
  std::vector<double> out(d);
  for (auto& x : out) x = u(rng);
  return out;
}

}  // namespace oracle
