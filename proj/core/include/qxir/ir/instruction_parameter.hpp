// Copyright 2026 The QXIR Authors
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
#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

#include "qxir/errors.hpp"

namespace qxir::ir {

/// A reference to a kernel formal parameter, kept distinct from plain string
/// values. The identifier must match [A-Za-z_][A-Za-z0-9_]*.
class VariableRef {
 public:
  explicit VariableRef(std::string name);

  const std::string& name() const noexcept { return name_; }

  friend bool operator==(const VariableRef&, const VariableRef&) = default;

 private:
  std::string name_;
};

bool is_valid_identifier(std::string_view text) noexcept;

/// Variant value attached to an instruction: a literal (integer, real,
/// complex, string) or an unresolved reference to a kernel formal. Reals are
/// validated to be finite at construction.
class InstructionParameter {
 public:
  using Storage =
      std::variant<std::int64_t, double, std::complex<double>, std::string, VariableRef>;

  InstructionParameter(std::int64_t v) : value_(v) {}
  InstructionParameter(double v);
  InstructionParameter(std::complex<double> v) : value_(v) {}
  InstructionParameter(std::string v) : value_(std::move(v)) {}
  InstructionParameter(const char* v) : value_(std::string(v)) {}
  InstructionParameter(VariableRef v) : value_(std::move(v)) {}

  static InstructionParameter variable(std::string name) {
    return InstructionParameter(VariableRef(std::move(name)));
  }

  bool is_int() const noexcept { return std::holds_alternative<std::int64_t>(value_); }
  bool is_real() const noexcept { return std::holds_alternative<double>(value_); }
  bool is_complex() const noexcept {
    return std::holds_alternative<std::complex<double>>(value_);
  }
  bool is_string() const noexcept { return std::holds_alternative<std::string>(value_); }
  bool is_variable() const noexcept { return std::holds_alternative<VariableRef>(value_); }

  std::int64_t as_int() const { return std::get<std::int64_t>(value_); }
  double as_real() const { return std::get<double>(value_); }
  std::complex<double> as_complex() const { return std::get<std::complex<double>>(value_); }
  const std::string& as_string() const { return std::get<std::string>(value_); }
  const VariableRef& as_variable() const { return std::get<VariableRef>(value_); }

  /// Numeric view used by executors: int and real both convert, anything
  /// else throws an unsupported-parameter error.
  double numeric() const;

  const Storage& storage() const noexcept { return value_; }

  /// Rendering used by the assembly writer and diagnostics.
  std::string to_text() const;

  friend bool operator==(const InstructionParameter&, const InstructionParameter&) = default;

 private:
  Storage value_;
};

}  // namespace qxir::ir
