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

// Operator construction: Pauli-string sums, explicit diagonals and projector
// complements, realized as dense Hermitian matrices in the computational
// basis. Basis index z is the bitstring read with qubit 0 as the most
// significant bit, so qubit 0 is the leftmost tensor factor.

#include <Eigen/Dense>

#include <algorithm>
#include <bit>
#include <cmath>
#include <complex>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "aqcgap/error.hpp"

namespace aqcgap {

using Complex = std::complex<double>;
using DenseMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

/// Dense matrices are allocated for up to this many qubits.
inline constexpr int kMaxQubits = 14;

inline std::size_t dimension_for(int n_qubits) {
  if (n_qubits < 1 || n_qubits > kMaxQubits) {
    throw InvalidArgument("qubit count must be in [1, " +
                          std::to_string(kMaxQubits) + "], got " +
                          std::to_string(n_qubits));
  }
  return std::size_t{1} << n_qubits;
}

inline int hamming_weight(std::size_t z) { return std::popcount(z); }

/// max_ij |A_ij - conj(A_ji)|.
inline double hermiticity_defect(const DenseMatrix& a) {
  double worst = 0.0;
  for (Eigen::Index j = 0; j < a.cols(); ++j) {
    for (Eigen::Index i = 0; i <= j; ++i) {
      worst = std::max(worst, std::abs(a(i, j) - std::conj(a(j, i))));
    }
  }
  return worst;
}

/// Dense complex Hermitian matrix. Construction validates
/// max|A - A^dagger| <= 1e-12 (1 + max|A|); instances are immutable.
class HermitianMatrix {
 public:
  HermitianMatrix() = default;

  explicit HermitianMatrix(DenseMatrix entries) : entries_(std::move(entries)) {
    if (entries_.rows() != entries_.cols() || entries_.rows() == 0) {
      throw DimensionMismatch("Hermitian matrix must be square and nonempty");
    }
    const double scale = 1.0 + max_abs();
    if (!std::isfinite(scale)) {
      throw InvalidArgument("matrix has non-finite entries");
    }
    const double defect = hermiticity_defect(entries_);
    if (defect > 1e-12 * scale) {
      throw NotHermitian("matrix deviates from Hermitian by " +
                         std::to_string(defect));
    }
  }

  std::size_t dim() const { return static_cast<std::size_t>(entries_.rows()); }
  const DenseMatrix& entries() const { return entries_; }
  Complex operator()(std::size_t i, std::size_t j) const {
    return entries_(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
  }

  double max_abs() const {
    return entries_.size() == 0 ? 0.0 : entries_.cwiseAbs().maxCoeff();
  }

  /// True when every imaginary part is exactly zero.
  bool is_real() const { return (entries_.imag().array() == 0.0).all(); }

  bool is_diagonal() const {
    for (Eigen::Index j = 0; j < entries_.cols(); ++j) {
      for (Eigen::Index i = 0; i < entries_.rows(); ++i) {
        if (i != j && entries_(i, j) != Complex{}) return false;
      }
    }
    return true;
  }

  RealVector diagonal() const { return entries_.diagonal().real(); }

  friend bool operator==(const HermitianMatrix& a, const HermitianMatrix& b) {
    return a.entries_.rows() == b.entries_.rows() &&
           a.entries_.cols() == b.entries_.cols() && a.entries_ == b.entries_;
  }

 private:
  DenseMatrix entries_;
};

enum class PauliAxis : std::uint8_t { I, X, Y, Z };

inline char axis_char(PauliAxis a) {
  constexpr char kChars[] = {'I', 'X', 'Y', 'Z'};
  return kChars[static_cast<int>(a)];
}

/// Tensor product of single-qubit Paulis, one axis per qubit.
class PauliString {
 public:
  PauliString() = default;
  explicit PauliString(std::vector<PauliAxis> axes) : axes_(std::move(axes)) {
    if (axes_.empty()) throw InvalidArgument("Pauli string must be nonempty");
  }

  /// Parses "XIZY"-style text. Throws InvalidArgument on other letters.
  static PauliString parse(std::string_view text) {
    std::vector<PauliAxis> axes;
    axes.reserve(text.size());
    for (char c : text) {
      switch (c) {
        case 'I': axes.push_back(PauliAxis::I); break;
        case 'X': axes.push_back(PauliAxis::X); break;
        case 'Y': axes.push_back(PauliAxis::Y); break;
        case 'Z': axes.push_back(PauliAxis::Z); break;
        default:
          throw InvalidArgument("invalid Pauli letter '" + std::string(1, c) +
                                "' in \"" + std::string(text) + "\"");
      }
    }
    return PauliString(std::move(axes));
  }

  /// Single-qubit operator on `qubit`, identity elsewhere.
  static PauliString single(int n_qubits, int qubit, PauliAxis axis) {
    std::vector<PauliAxis> axes(static_cast<std::size_t>(n_qubits), PauliAxis::I);
    axes.at(static_cast<std::size_t>(qubit)) = axis;
    return PauliString(std::move(axes));
  }

  static PauliString pair(int n_qubits, int q1, int q2, PauliAxis axis) {
    std::vector<PauliAxis> axes(static_cast<std::size_t>(n_qubits), PauliAxis::I);
    axes.at(static_cast<std::size_t>(q1)) = axis;
    axes.at(static_cast<std::size_t>(q2)) = axis;
    return PauliString(std::move(axes));
  }

  static PauliString identity(int n_qubits) {
    return PauliString(
        std::vector<PauliAxis>(static_cast<std::size_t>(n_qubits), PauliAxis::I));
  }

  std::size_t size() const { return axes_.size(); }
  const std::vector<PauliAxis>& axes() const { return axes_; }
  PauliAxis operator[](std::size_t q) const { return axes_[q]; }

  std::string str() const {
    std::string out;
    out.reserve(axes_.size());
    for (auto a : axes_) out.push_back(axis_char(a));
    return out;
  }

  bool is_diagonal() const {
    return std::all_of(axes_.begin(), axes_.end(), [](PauliAxis a) {
      return a == PauliAxis::I || a == PauliAxis::Z;
    });
  }

  friend auto operator<=>(const PauliString&, const PauliString&) = default;

 private:
  std::vector<PauliAxis> axes_;
};

struct PauliTerm {
  double coefficient = 0.0;
  PauliString string;

  friend bool operator==(const PauliTerm&, const PauliTerm&) = default;
};

/// Real-weighted sum of n-qubit Pauli strings.
struct PauliExpression {
  int n_qubits = 1;
  std::vector<PauliTerm> terms;

  PauliExpression& add(double coefficient, PauliString string) {
    terms.push_back({coefficient, std::move(string)});
    return *this;
  }
  PauliExpression& add(double coefficient, std::string_view text) {
    return add(coefficient, PauliString::parse(text));
  }

  /// Terms sorted by string with duplicate strings merged by summation.
  PauliExpression canonical() const {
    PauliExpression out{n_qubits, terms};
    std::stable_sort(out.terms.begin(), out.terms.end(),
                     [](const PauliTerm& a, const PauliTerm& b) {
                       return a.string.str() < b.string.str();
                     });
    std::vector<PauliTerm> merged;
    for (auto& t : out.terms) {
      if (!merged.empty() && merged.back().string == t.string) {
        merged.back().coefficient += t.coefficient;
      } else {
        merged.push_back(std::move(t));
      }
    }
    out.terms = std::move(merged);
    return out;
  }

  void validate() const {
    dimension_for(n_qubits);
    for (const auto& t : terms) {
      if (t.string.size() != static_cast<std::size_t>(n_qubits)) {
        throw DimensionMismatch("term \"" + t.string.str() + "\" has length " +
                                std::to_string(t.string.size()) +
                                " but the expression has " +
                                std::to_string(n_qubits) + " qubits");
      }
      if (!std::isfinite(t.coefficient)) {
        throw InvalidArgument("term \"" + t.string.str() +
                              "\" has a non-finite coefficient");
      }
    }
  }

  friend bool operator==(const PauliExpression&, const PauliExpression&) = default;
};

/// H = sum_z f_z |z><z| with values in standard binary order.
struct DiagonalSpec {
  int n_qubits = 1;
  std::vector<double> values;

  void validate() const {
    const auto d = dimension_for(n_qubits);
    if (values.size() != d) {
      throw DimensionMismatch("diagonal has " + std::to_string(values.size()) +
                              " values but 2^" + std::to_string(n_qubits) +
                              " = " + std::to_string(d) + " are required");
    }
    for (double v : values) {
      if (!std::isfinite(v)) throw InvalidArgument("diagonal value is not finite");
    }
  }

  friend bool operator==(const DiagonalSpec&, const DiagonalSpec&) = default;
};

/// H = I - |psi0><psi0| for a unit vector psi0.
struct ProjectorSpec {
  int n_qubits = 1;
  std::vector<Complex> amplitudes;

  static ProjectorSpec uniform(int n_qubits) {
    const auto d = dimension_for(n_qubits);
    return {n_qubits, std::vector<Complex>(d, Complex{1.0 / std::sqrt(double(d))})};
  }

  bool is_uniform() const { return *this == uniform(n_qubits); }

  void validate() const {
    const auto d = dimension_for(n_qubits);
    if (amplitudes.size() != d) {
      throw DimensionMismatch("projector vector has " +
                              std::to_string(amplitudes.size()) +
                              " amplitudes, expected " + std::to_string(d));
    }
    double norm2 = 0.0;
    for (auto a : amplitudes) norm2 += std::norm(a);
    if (std::abs(std::sqrt(norm2) - 1.0) > 1e-12) {
      throw InvalidArgument("projector vector is not unit norm (norm " +
                            std::to_string(std::sqrt(norm2)) + ")");
    }
  }

  friend bool operator==(const ProjectorSpec&, const ProjectorSpec&) = default;
};

/// Accumulates c * P into `out` using the one-nonzero-per-column structure
/// P|z> = phase(z) |z xor flip_mask>.
inline void accumulate_pauli(DenseMatrix& out, double coefficient,
                             const PauliString& p) {
  const int n = static_cast<int>(p.size());
  std::size_t flip_mask = 0;
  std::size_t y_mask = 0;
  std::size_t z_mask = 0;
  for (int q = 0; q < n; ++q) {
    const std::size_t bit = std::size_t{1} << (n - 1 - q);
    switch (p[static_cast<std::size_t>(q)]) {
      case PauliAxis::I: break;
      case PauliAxis::X: flip_mask |= bit; break;
      case PauliAxis::Y: flip_mask |= bit; y_mask |= bit; break;
      case PauliAxis::Z: z_mask |= bit; break;
    }
  }
  const int n_y = std::popcount(y_mask);
  // Y|0> = i|1>, Y|1> = -i|0>: each Y contributes i * (-1)^bit.
  constexpr Complex kIPowers[] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  const Complex y_phase = kIPowers[n_y % 4];
  const auto d = static_cast<std::size_t>(out.rows());
  for (std::size_t z = 0; z < d; ++z) {
    const int minus = std::popcount(z & (y_mask | z_mask)) & 1;
    const Complex phase = minus ? -y_phase : y_phase;
    out(static_cast<Eigen::Index>(z ^ flip_mask), static_cast<Eigen::Index>(z)) +=
        coefficient * phase;
  }
}

/// Realizes sum_k c_k P_k as a dense 2^n x 2^n matrix.
inline HermitianMatrix build_pauli(const PauliExpression& expr) {
  expr.validate();
  const auto d = static_cast<Eigen::Index>(dimension_for(expr.n_qubits));
  DenseMatrix m = DenseMatrix::Zero(d, d);
  for (const auto& t : expr.terms) accumulate_pauli(m, t.coefficient, t.string);
  return HermitianMatrix(std::move(m));
}

inline HermitianMatrix build_diagonal(const DiagonalSpec& spec) {
  spec.validate();
  const auto d = static_cast<Eigen::Index>(spec.values.size());
  DenseMatrix m = DenseMatrix::Zero(d, d);
  for (Eigen::Index i = 0; i < d; ++i) {
    m(i, i) = spec.values[static_cast<std::size_t>(i)];
  }
  return HermitianMatrix(std::move(m));
}

inline HermitianMatrix build_projector_complement(const ProjectorSpec& spec) {
  spec.validate();
  const auto d = static_cast<Eigen::Index>(spec.amplitudes.size());
  ComplexVector psi(d);
  for (Eigen::Index i = 0; i < d; ++i) psi(i) = spec.amplitudes[static_cast<std::size_t>(i)];
  DenseMatrix m = DenseMatrix::Identity(d, d) - psi * psi.adjoint();
  // Diagonal of a rank-one Hermitian product is real; drop roundoff.
  for (Eigen::Index i = 0; i < d; ++i) m(i, i) = m(i, i).real();
  for (Eigen::Index j = 0; j < d; ++j) {
    for (Eigen::Index i = j + 1; i < d; ++i) m(i, j) = std::conj(m(j, i));
  }
  return HermitianMatrix(std::move(m));
}

/// a * A + b * B for real a, b.
inline HermitianMatrix combine(double a, const HermitianMatrix& lhs, double b,
                               const HermitianMatrix& rhs) {
  if (lhs.dim() != rhs.dim()) {
    throw DimensionMismatch("cannot combine matrices of dims " +
                            std::to_string(lhs.dim()) + " and " +
                            std::to_string(rhs.dim()));
  }
  return HermitianMatrix(a * lhs.entries() + b * rhs.entries());
}

/// (1 - s) H_i + s H_p. Endpoints return the operands exactly.
inline HermitianMatrix interpolate(const HermitianMatrix& h_i,
                                   const HermitianMatrix& h_p, double s) {
  if (h_i.dim() != h_p.dim()) {
    throw DimensionMismatch("H_i has dim " + std::to_string(h_i.dim()) +
                            " but H_p has dim " + std::to_string(h_p.dim()));
  }
  if (!(s >= 0.0 && s <= 1.0)) {
    throw InvalidArgument("interpolation parameter must lie in [0, 1]");
  }
  if (s == 0.0) return h_i;
  if (s == 1.0) return h_p;
  return combine(1.0 - s, h_i, s, h_p);
}

/// Principal submatrix on the given basis indices.
inline HermitianMatrix restrict_to(const HermitianMatrix& h,
                                   const std::vector<std::size_t>& basis) {
  const auto k = static_cast<Eigen::Index>(basis.size());
  DenseMatrix m(k, k);
  for (Eigen::Index a = 0; a < k; ++a) {
    for (Eigen::Index b = 0; b < k; ++b) {
      m(a, b) = h(basis[static_cast<std::size_t>(a)], basis[static_cast<std::size_t>(b)]);
    }
  }
  return HermitianMatrix(std::move(m));
}

}  // namespace aqcgap
