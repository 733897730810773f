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

// Plain-text problem instances.
//
//   qubits = 2
//   [Hi]
//   terms = -2 XI, 1 IX, 1 IZ, -2 XX
//   [Hp]
//   diagonal = 0, 2, 6, 8
//   [schedule]
//   kind = linear
//
// [Hi] takes exactly one of
//   terms = <coef> <STRING>, ...   (or `terms = none` for the zero operator)
//   diagonal = <d reals>
//   projector-uniform
//   projector = <amp>, ...         amplitude is `<re>` or `<re> <im>`
//   row = <entry>, ...             d lines, entry is `<re>` or `<re> <im>`
// [Hp] takes `diagonal = ...` or a `costfn` line followed by `<bits> = <value>`
// lines (unlisted bitstrings cost 0). Z-only `terms` and diagonal `row` input
// for [Hp] is accepted and folded to a diagonal; anything else is rejected.
// [schedule] takes `kind = linear` or `kind = tabulated` plus
// `sample = <t/T>, <a>, <b>` lines. A missing [schedule] means linear.
// Lines whose first non-blank character is `#` are comments.

#include <algorithm>
#include <charconv>
#include <cmath>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <system_error>
#include <variant>
#include <vector>

#include "aqcgap/error.hpp"
#include "aqcgap/paulialg.hpp"

namespace aqcgap {

struct ScheduleSample {
  double t = 0.0;
  double a = 1.0;
  double b = 0.0;

  friend bool operator==(const ScheduleSample&, const ScheduleSample&) = default;
};

/// Interpolation coefficients H(t) = a(t) H_i + b(t) H_p over t/T in [0, 1].
/// Tabulated schedules are piecewise linear between samples.
struct ScheduleSpec {
  enum class Kind { linear, tabulated };

  Kind kind = Kind::linear;
  std::vector<ScheduleSample> samples;

  static ScheduleSpec linear() { return {}; }
  static ScheduleSpec tabulated(std::vector<ScheduleSample> samples) {
    ScheduleSpec s{Kind::tabulated, std::move(samples)};
    s.validate();
    return s;
  }

  void validate() const {
    if (kind == Kind::linear) {
      if (!samples.empty()) throw ScheduleError("linear schedule takes no samples");
      return;
    }
    if (samples.size() < 2) throw ScheduleError("tabulated schedule needs at least 2 samples");
    for (const auto& x : samples) {
      if (!std::isfinite(x.t) || !std::isfinite(x.a) || !std::isfinite(x.b)) {
        throw ScheduleError("schedule sample is not finite");
      }
      if (x.a + x.b <= 0.0) {
        throw ScheduleError("a + b must be positive at every sample (t = " +
                            std::to_string(x.t) + ")");
      }
    }
    const auto& first = samples.front();
    const auto& last = samples.back();
    if (first.t != 0.0 || last.t != 1.0) {
      throw ScheduleError("samples must start at t = 0 and end at t = 1");
    }
    if (first.a != 1.0 || first.b != 0.0 || last.a != 0.0 || last.b != 1.0) {
      throw ScheduleError("schedule must satisfy a(0)=1, b(0)=0, a(1)=0, b(1)=1");
    }
    for (std::size_t k = 1; k < samples.size(); ++k) {
      const auto& p = samples[k - 1];
      const auto& q = samples[k];
      if (!(q.t > p.t)) throw ScheduleError("sample times must be strictly increasing");
      if (q.a > p.a) {
        throw ScheduleError("a(t) must be nonincreasing (violated at t = " +
                            std::to_string(q.t) + ")");
      }
      if (q.b < p.b) {
        throw ScheduleError("b(t) must be nondecreasing (violated at t = " +
                            std::to_string(q.t) + ")");
      }
    }
  }

  /// (a(t), b(t)).
  std::pair<double, double> at(double t) const {
    if (kind == Kind::linear) return {1.0 - t, t};
    const auto k = segment(t);
    const auto& p = samples[k];
    const auto& q = samples[k + 1];
    const double w = (t - p.t) / (q.t - p.t);
    return {p.a + w * (q.a - p.a), p.b + w * (q.b - p.b)};
  }

  /// (a'(t), b'(t)). Tabulated schedules use centered differences at each
  /// sample (one-sided at the ends), interpolated linearly in between.
  std::pair<double, double> derivative(double t) const {
    if (kind == Kind::linear) return {-1.0, 1.0};
    const auto k = segment(t);
    const auto dp = sample_derivative(k);
    const auto dq = sample_derivative(k + 1);
    const double w = (t - samples[k].t) / (samples[k + 1].t - samples[k].t);
    return {dp.first + w * (dq.first - dp.first),
            dp.second + w * (dq.second - dp.second)};
  }

  /// Upper bounds on |a'| and |b'| over [0, 1] (piecewise-linear slopes).
  std::pair<double, double> max_slopes() const {
    if (kind == Kind::linear) return {1.0, 1.0};
    double sa = 0.0, sb = 0.0;
    for (std::size_t k = 1; k < samples.size(); ++k) {
      const double dt = samples[k].t - samples[k - 1].t;
      sa = std::max(sa, std::abs(samples[k].a - samples[k - 1].a) / dt);
      sb = std::max(sb, std::abs(samples[k].b - samples[k - 1].b) / dt);
    }
    return {sa, sb};
  }

  friend bool operator==(const ScheduleSpec&, const ScheduleSpec&) = default;

 private:
  std::size_t segment(double t) const {
    if (!(t >= 0.0 && t <= 1.0)) throw InvalidArgument("schedule time must lie in [0, 1]");
    auto it = std::upper_bound(samples.begin(), samples.end(), t,
                               [](double v, const ScheduleSample& x) { return v < x.t; });
    auto k = static_cast<std::size_t>(std::distance(samples.begin(), it));
    if (k == 0) k = 1;
    if (k >= samples.size()) k = samples.size() - 1;
    return k - 1;
  }

  std::pair<double, double> sample_derivative(std::size_t k) const {
    const std::size_t lo = k == 0 ? 0 : k - 1;
    const std::size_t hi = k + 1 == samples.size() ? k : k + 1;
    const double dt = samples[hi].t - samples[lo].t;
    return {(samples[hi].a - samples[lo].a) / dt, (samples[hi].b - samples[lo].b) / dt};
  }
};

/// Initial Hamiltonian in any of the supported symbolic or explicit forms.
using InitialSpec = std::variant<PauliExpression, DiagonalSpec, ProjectorSpec, HermitianMatrix>;

inline HermitianMatrix realize(const InitialSpec& spec) {
  return std::visit(
      [](const auto& s) -> HermitianMatrix {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, PauliExpression>) return build_pauli(s);
        else if constexpr (std::is_same_v<T, DiagonalSpec>) return build_diagonal(s);
        else if constexpr (std::is_same_v<T, ProjectorSpec>) return build_projector_complement(s);
        else return s;
      },
      spec);
}

/// Immutable realized operator pair.
struct HamiltonianPair {
  HermitianMatrix h_i;
  HermitianMatrix h_p;

  std::size_t dim() const { return h_i.dim(); }
};

struct InstanceSpec {
  int n_qubits = 1;
  InitialSpec h_i = PauliExpression{};
  DiagonalSpec h_p;
  ScheduleSpec schedule;

  void validate() const {
    const auto d = dimension_for(n_qubits);
    std::visit(
        [&](const auto& s) {
          using T = std::decay_t<decltype(s)>;
          if constexpr (std::is_same_v<T, HermitianMatrix>) {
            if (s.dim() != d) {
              throw DimensionMismatch("explicit H_i has dim " + std::to_string(s.dim()) +
                                      ", expected " + std::to_string(d));
            }
          } else {
            if (s.n_qubits != n_qubits) {
              throw DimensionMismatch("H_i declares " + std::to_string(s.n_qubits) +
                                      " qubits, instance has " + std::to_string(n_qubits));
            }
            s.validate();
          }
        },
        h_i);
    if (h_p.n_qubits != n_qubits) {
      throw DimensionMismatch("H_p declares " + std::to_string(h_p.n_qubits) +
                              " qubits, instance has " + std::to_string(n_qubits));
    }
    h_p.validate();
    schedule.validate();
  }

  HamiltonianPair realize() const {
    validate();
    return {aqcgap::realize(h_i), build_diagonal(h_p)};
  }
};

/// Structural equality; Pauli expressions compare in canonical form.
inline bool structurally_equal(const InstanceSpec& x, const InstanceSpec& y) {
  if (x.n_qubits != y.n_qubits || !(x.h_p == y.h_p) || !(x.schedule == y.schedule) ||
      x.h_i.index() != y.h_i.index()) {
    return false;
  }
  if (const auto* px = std::get_if<PauliExpression>(&x.h_i)) {
    return px->canonical() == std::get<PauliExpression>(y.h_i).canonical();
  }
  return x.h_i == y.h_i;
}

namespace detail {

/// Shortest text that reads back to the same double.
inline std::string format_real(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

inline std::string format_complex(Complex v) {
  if (v.imag() == 0.0) return format_real(v.real());
  return format_real(v.real()) + " " + format_real(v.imag());
}

template <typename Range, typename Fn>
std::string join(const Range& r, Fn fn) {
  std::string out;
  bool first = true;
  for (const auto& x : r) {
    if (!first) out += ", ";
    out += fn(x);
    first = false;
  }
  return out;
}

inline bool is_blank(char c) { return c == ' ' || c == '\t' || c == '\r'; }

/// A slice of one input line that remembers its 1-based column.
struct Token {
  std::string_view text;
  std::size_t column = 1;
};

inline Token trim(Token t) {
  std::size_t b = 0;
  while (b < t.text.size() && is_blank(t.text[b])) ++b;
  std::size_t e = t.text.size();
  while (e > b && is_blank(t.text[e - 1])) --e;
  return {t.text.substr(b, e - b), t.column + b};
}

inline std::vector<Token> split(Token t, char sep) {
  std::vector<Token> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= t.text.size(); ++i) {
    if (i == t.text.size() || t.text[i] == sep) {
      out.push_back(trim({t.text.substr(start, i - start), t.column + start}));
      start = i + 1;
    }
  }
  return out;
}

inline std::vector<Token> split_blank(Token t) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < t.text.size()) {
    while (i < t.text.size() && is_blank(t.text[i])) ++i;
    const std::size_t start = i;
    while (i < t.text.size() && !is_blank(t.text[i])) ++i;
    if (i > start) out.push_back({t.text.substr(start, i - start), t.column + start});
  }
  return out;
}

class InstanceParser {
 public:
  explicit InstanceParser(std::string_view text) : text_(text) {}

  InstanceSpec parse() {
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text_.size()) {
      const auto nl = text_.find('\n', pos);
      const auto end = nl == std::string_view::npos ? text_.size() : nl;
      line_ = ++line_no;
      handle_line(trim({text_.substr(pos, end - pos), 1}));
      if (nl == std::string_view::npos) break;
      pos = nl + 1;
    }
    return finish();
  }

 private:
  enum class Section { header, hi, hp, schedule };

  [[noreturn]] void fail(std::size_t column, const std::string& message) const {
    throw ParseError(line_, column, message);
  }
  [[noreturn]] void fail(const Token& t, const std::string& message) const {
    fail(t.column, message);
  }

  double real(const Token& t) const {
    auto s = t.text;
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    double v = 0.0;
    const auto* first = s.data();
    const auto* last = s.data() + s.size();
    auto res = std::from_chars(first, last, v);
    if (s.empty() || res.ec != std::errc{} || res.ptr != last || !std::isfinite(v)) {
      fail(t, "expected a finite real number, got \"" + std::string(t.text) + "\"");
    }
    return v;
  }

  Complex complex(const Token& t) const {
    const auto parts = split_blank(t);
    if (parts.size() == 1) return {real(parts[0]), 0.0};
    if (parts.size() == 2) return {real(parts[0]), real(parts[1])};
    fail(t, "expected \"<re>\" or \"<re> <im>\", got \"" + std::string(t.text) + "\"");
  }

  std::vector<double> real_list(const Token& t) const {
    std::vector<double> out;
    for (const auto& item : split(t, ',')) out.push_back(real(item));
    return out;
  }

  std::vector<Complex> complex_list(const Token& t) const {
    std::vector<Complex> out;
    for (const auto& item : split(t, ',')) out.push_back(complex(item));
    return out;
  }

  int qubits() const {
    if (!n_qubits_) fail(1, "`qubits = <n>` must precede all sections");
    return *n_qubits_;
  }

  std::size_t dim() const { return std::size_t{1} << qubits(); }

  void handle_line(Token line) {
    if (line.text.empty() || line.text.front() == '#') return;
    if (line.text.front() == '[') {
      if (line.text.back() != ']') fail(line, "unterminated section header");
      const auto name = line.text.substr(1, line.text.size() - 2);
      if (name == "Hi") section_ = Section::hi;
      else if (name == "Hp") section_ = Section::hp;
      else if (name == "schedule") section_ = Section::schedule;
      else fail(line, "unknown section [" + std::string(name) + "]");
      if (!n_qubits_) fail(line, "`qubits = <n>` must precede all sections");
      if (!seen_sections_.insert(name)) fail(line, "duplicate section [" + std::string(name) + "]");
      costfn_ = false;
      return;
    }

    const auto eq = line.text.find('=');
    const Token key = eq == std::string_view::npos
                          ? line
                          : trim({line.text.substr(0, eq), line.column});
    const Token value = eq == std::string_view::npos
                            ? Token{{}, line.column + line.text.size()}
                            : trim({line.text.substr(eq + 1), line.column + eq + 1});
    const bool has_value = eq != std::string_view::npos;

    switch (section_) {
      case Section::header: header_line(key, value, has_value); break;
      case Section::hi: hi_line(key, value, has_value); break;
      case Section::hp: hp_line(key, value, has_value); break;
      case Section::schedule: schedule_line(key, value, has_value); break;
    }
  }

  void require_value(const Token& key, const Token& value, bool has_value) const {
    if (!has_value) fail(key, "expected `" + std::string(key.text) + " = ...`");
    if (value.text.empty()) fail(value, "missing value for `" + std::string(key.text) + "`");
  }

  void header_line(const Token& key, const Token& value, bool has_value) {
    if (key.text != "qubits") fail(key, "unexpected `" + std::string(key.text) + "` before first section");
    require_value(key, value, has_value);
    if (n_qubits_) fail(key, "duplicate `qubits`");
    int n = 0;
    auto res = std::from_chars(value.text.data(), value.text.data() + value.text.size(), n);
    if (res.ec != std::errc{} || res.ptr != value.text.data() + value.text.size() || n < 1 ||
        n > kMaxQubits) {
      fail(value, "qubits must be an integer in [1, " + std::to_string(kMaxQubits) + "]");
    }
    n_qubits_ = n;
  }

  void set_hi(const Token& at, InitialSpec spec) {
    if (hi_ || rows_active_) fail(at, "H_i is defined more than once");
    hi_ = std::move(spec);
  }

  PauliExpression terms(const Token& value) const {
    PauliExpression expr{qubits(), {}};
    if (value.text == "none") return expr;
    std::size_t index = 0;
    for (const auto& item : split(value, ',')) {
      ++index;
      const auto parts = split_blank(item);
      if (parts.size() != 2) {
        fail(item, "term " + std::to_string(index) + " must be `<coef> <STRING>`, got \"" +
                       std::string(item.text) + "\"");
      }
      const double c = real(parts[0]);
      PauliString p;
      try {
        p = PauliString::parse(parts[1].text);
      } catch (const InvalidArgument& e) {
        fail(parts[1], e.what());
      }
      if (p.size() != static_cast<std::size_t>(expr.n_qubits)) {
        fail(parts[1], "term " + std::to_string(index) + " \"" + p.str() + "\" has length " +
                           std::to_string(p.size()) + " but qubits = " +
                           std::to_string(expr.n_qubits));
      }
      expr.add(c, std::move(p));
    }
    return expr;
  }

  DiagonalSpec diagonal(const Token& value) const {
    auto values = real_list(value);
    if (values.size() != dim()) {
      fail(value, "diagonal has " + std::to_string(values.size()) + " values, expected " +
                      std::to_string(dim()));
    }
    return {qubits(), std::move(values)};
  }

  void add_row(const Token& key, const Token& value, std::vector<std::vector<Complex>>& rows) {
    if (rows.size() == dim()) fail(key, "too many `row` lines");
    auto row = complex_list(value);
    if (row.size() != dim()) {
      fail(value, "row has " + std::to_string(row.size()) + " entries, expected " +
                      std::to_string(dim()));
    }
    rows.push_back(std::move(row));
  }

  void hi_line(const Token& key, const Token& value, bool has_value) {
    if (key.text == "terms") {
      require_value(key, value, has_value);
      set_hi(key, terms(value));
    } else if (key.text == "diagonal") {
      require_value(key, value, has_value);
      set_hi(key, diagonal(value));
    } else if (key.text == "projector-uniform") {
      if (has_value) fail(value, "`projector-uniform` takes no value");
      set_hi(key, ProjectorSpec::uniform(qubits()));
    } else if (key.text == "projector") {
      require_value(key, value, has_value);
      ProjectorSpec p{qubits(), complex_list(value)};
      if (p.amplitudes.size() != dim()) {
        fail(value, "projector has " + std::to_string(p.amplitudes.size()) +
                        " amplitudes, expected " + std::to_string(dim()));
      }
      try {
        p.validate();
      } catch (const Error& e) {
        fail(value, e.what());
      }
      set_hi(key, std::move(p));
    } else if (key.text == "row") {
      require_value(key, value, has_value);
      if (hi_) fail(key, "H_i is defined more than once");
      rows_active_ = true;
      hi_row_line_ = line_;
      add_row(key, value, hi_rows_);
    } else {
      fail(key, "unknown [Hi] key `" + std::string(key.text) + "`");
    }
  }

  void hp_line(const Token& key, const Token& value, bool has_value) {
    if (costfn_ && key.text != "costfn" && has_value && !key.text.empty() &&
        key.text.find_first_not_of("01") == std::string_view::npos) {
      if (key.text.size() != static_cast<std::size_t>(qubits())) {
        fail(key, "bitstring \"" + std::string(key.text) + "\" has length " +
                      std::to_string(key.text.size()) + ", expected " + std::to_string(qubits()));
      }
      std::size_t z = 0;
      for (char c : key.text) z = (z << 1) | static_cast<std::size_t>(c == '1');
      hp_->values[z] = real(value);
      return;
    }
    auto set_hp = [&](DiagonalSpec spec) {
      if (hp_) fail(key, "H_p is defined more than once");
      hp_ = std::move(spec);
    };
    if (key.text == "diagonal") {
      require_value(key, value, has_value);
      set_hp(diagonal(value));
    } else if (key.text == "costfn") {
      if (has_value) fail(value, "`costfn` takes no value; list `<bits> = <cost>` lines after it");
      set_hp({qubits(), std::vector<double>(dim(), 0.0)});
      costfn_ = true;
    } else if (key.text == "terms") {
      require_value(key, value, has_value);
      const auto expr = terms(value);
      for (const auto& t : expr.terms) {
        if (!t.string.is_diagonal()) {
          fail(value, "h_p is not diagonal: term \"" + t.string.str() +
                          "\" has off-diagonal structure");
        }
      }
      const RealVector diag = build_pauli(expr).diagonal();
      set_hp({qubits(), std::vector<double>(diag.begin(), diag.end())});
    } else if (key.text == "row") {
      require_value(key, value, has_value);
      if (hp_ && !hp_rows_active_) fail(key, "H_p is defined more than once");
      hp_rows_active_ = true;
      hp_row_line_ = line_;
      add_row(key, value, hp_rows_);
      if (!hp_) hp_ = DiagonalSpec{qubits(), std::vector<double>(dim(), 0.0)};
    } else {
      fail(key, "unknown [Hp] key `" + std::string(key.text) + "`");
    }
  }

  void schedule_line(const Token& key, const Token& value, bool has_value) {
    if (key.text == "kind") {
      require_value(key, value, has_value);
      if (kind_) fail(key, "duplicate schedule `kind`");
      if (value.text == "linear") kind_ = ScheduleSpec::Kind::linear;
      else if (value.text == "tabulated") kind_ = ScheduleSpec::Kind::tabulated;
      else fail(value, "schedule kind must be `linear` or `tabulated`");
    } else if (key.text == "sample") {
      require_value(key, value, has_value);
      const auto v = real_list(value);
      if (v.size() != 3) fail(value, "sample must be `<t/T>, <a>, <b>`");
      samples_.push_back({v[0], v[1], v[2]});
      sample_line_ = line_;
    } else {
      fail(key, "unknown [schedule] key `" + std::string(key.text) + "`");
    }
  }

  InstanceSpec finish() {
    if (!n_qubits_) fail(1, "missing `qubits = <n>`");
    InstanceSpec spec;
    spec.n_qubits = *n_qubits_;
    if (rows_active_) {
      line_ = hi_row_line_;
      if (hi_rows_.size() != dim()) {
        fail(1, "H_i has " + std::to_string(hi_rows_.size()) + " rows, expected " +
                    std::to_string(dim()));
      }
      DenseMatrix m(static_cast<Eigen::Index>(dim()), static_cast<Eigen::Index>(dim()));
      for (std::size_t i = 0; i < dim(); ++i) {
        for (std::size_t j = 0; j < dim(); ++j) {
          m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = hi_rows_[i][j];
        }
      }
      try {
        hi_ = HermitianMatrix(std::move(m));
      } catch (const Error& e) {
        fail(1, std::string("H_i: ") + e.what());
      }
    }
    if (!hi_) throw ParseError(line_, 1, "missing [Hi] definition");
    spec.h_i = std::move(*hi_);
    if (hp_rows_active_) {
      line_ = hp_row_line_;
      if (hp_rows_.size() != dim()) {
        fail(1, "H_p has " + std::to_string(hp_rows_.size()) + " rows, expected " +
                    std::to_string(dim()));
      }
      for (std::size_t i = 0; i < dim(); ++i) {
        for (std::size_t j = 0; j < dim(); ++j) {
          const auto v = hp_rows_[i][j];
          if (i != j && v != Complex{}) {
            fail(1, "h_p is not diagonal: entry (" + std::to_string(i) + ", " +
                        std::to_string(j) + ") is nonzero");
          }
          if (i == j && v.imag() != 0.0) fail(1, "h_p diagonal entries must be real");
        }
        hp_->values[i] = hp_rows_[i][i].real();
      }
    }
    if (!hp_) throw ParseError(line_, 1, "missing [Hp] definition");
    spec.h_p = std::move(*hp_);
    const auto kind = kind_.value_or(ScheduleSpec::Kind::linear);
    if (kind == ScheduleSpec::Kind::linear && !samples_.empty()) {
      line_ = sample_line_;
      fail(1, "`sample` lines require `kind = tabulated`");
    }
    spec.schedule = {kind, samples_};
    try {
      spec.validate();
    } catch (const ScheduleError& e) {
      throw ParseError(sample_line_ ? sample_line_ : line_, 1, e.what());
    } catch (const Error& e) {
      throw ParseError(line_, 1, e.what());
    }
    return spec;
  }

  struct NameSet {
    std::vector<std::string> names;
    bool insert(std::string_view n) {
      if (std::find(names.begin(), names.end(), n) != names.end()) return false;
      names.emplace_back(n);
      return true;
    }
  };

  std::string_view text_;
  std::size_t line_ = 0;
  Section section_ = Section::header;
  NameSet seen_sections_;
  std::optional<int> n_qubits_;
  std::optional<InitialSpec> hi_;
  bool rows_active_ = false;
  std::size_t hi_row_line_ = 0;
  std::vector<std::vector<Complex>> hi_rows_;
  std::optional<DiagonalSpec> hp_;
  bool costfn_ = false;
  bool hp_rows_active_ = false;
  std::size_t hp_row_line_ = 0;
  std::vector<std::vector<Complex>> hp_rows_;
  std::optional<ScheduleSpec::Kind> kind_;
  std::vector<ScheduleSample> samples_;
  std::size_t sample_line_ = 0;
};

}  // namespace detail

/// Parses and validates an instance; failures raise ParseError.
inline InstanceSpec parse_instance(std::string_view text) {
  return detail::InstanceParser(text).parse();
}

/// Canonical text form: Pauli terms sorted by string with duplicates merged,
/// reals in shortest round-trip notation.
inline std::string serialize_instance(const InstanceSpec& spec) {
  std::ostringstream out;
  out << "qubits = " << spec.n_qubits << "\n[Hi]\n";
  std::visit(
      [&](const auto& s) {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, PauliExpression>) {
          const auto c = s.canonical();
          if (c.terms.empty()) {
            out << "terms = none\n";
          } else {
            out << "terms = " << detail::join(c.terms, [](const PauliTerm& t) {
              return detail::format_real(t.coefficient) + " " + t.string.str();
            }) << "\n";
          }
        } else if constexpr (std::is_same_v<T, DiagonalSpec>) {
          out << "diagonal = " << detail::join(s.values, detail::format_real) << "\n";
        } else if constexpr (std::is_same_v<T, ProjectorSpec>) {
          if (s.is_uniform()) {
            out << "projector-uniform\n";
          } else {
            out << "projector = " << detail::join(s.amplitudes, detail::format_complex) << "\n";
          }
        } else {
          const auto& m = s.entries();
          for (Eigen::Index i = 0; i < m.rows(); ++i) {
            std::vector<Complex> row(m.row(i).begin(), m.row(i).end());
            out << "row = " << detail::join(row, detail::format_complex) << "\n";
          }
        }
      },
      spec.h_i);
  out << "[Hp]\ndiagonal = " << detail::join(spec.h_p.values, detail::format_real) << "\n";
  out << "[schedule]\n";
  if (spec.schedule.kind == ScheduleSpec::Kind::linear) {
    out << "kind = linear\n";
  } else {
    out << "kind = tabulated\n";
    for (const auto& x : spec.schedule.samples) {
      out << "sample = " << detail::format_real(x.t) << ", " << detail::format_real(x.a)
          << ", " << detail::format_real(x.b) << "\n";
    }
  }
  return out.str();
}

}  // namespace aqcgap
