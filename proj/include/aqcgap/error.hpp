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

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>

namespace aqcgap {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class NotHermitian : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Instance text could not be parsed; line and column are 1-based.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message)
      : Error("line " + std::to_string(line) + ", column " +
              std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// A tabulated schedule is not monotone or does not span [0, 1].
class ScheduleError : public Error {
 public:
  using Error::Error;
};

class NonConvergence : public Error {
 public:
  using Error::Error;
};

/// The ground state has a vanishing amplitude, so no phase gauge exists.
class Condition1Violated : public Error {
 public:
  using Error::Error;
};

class NonUniqueGround : public Error {
 public:
  using Error::Error;
};

/// F(s) has an entry below the nonnegativity tolerance.
class EntryNegative : public Error {
 public:
  EntryNegative(std::size_t row, std::size_t col, std::complex<double> value,
                const std::string& message)
      : Error(message), row_(row), col_(col), value_(value) {}

  std::size_t row() const noexcept { return row_; }
  std::size_t col() const noexcept { return col_; }
  std::complex<double> value() const noexcept { return value_; }

 private:
  std::size_t row_;
  std::size_t col_;
  std::complex<double> value_;
};

class NotWeightSymmetric : public Error {
 public:
  using Error::Error;
};

/// Runtime is undefined because the gap closes on the sweep grid.
class CrossingPresent : public Error {
 public:
  using Error::Error;
};

}  // namespace aqcgap
