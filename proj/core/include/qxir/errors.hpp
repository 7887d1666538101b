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

#include <stdexcept>
#include <string>
#include <string_view>

namespace qxir {

/// Stable machine-readable error codes. These travel over the wire in the
/// remote protocol and are what tests and callers should match on, rather
/// than message text.
namespace errc {
inline constexpr std::string_view malformed_tree = "malformed-tree";
inline constexpr std::string_view unbound_variable = "unbound-variable";
inline constexpr std::string_view bad_document = "bad-document";
inline constexpr std::string_view bad_version = "bad-version";
inline constexpr std::string_view dialect_mismatch = "dialect-mismatch";
inline constexpr std::string_view unknown_language = "unknown-language";
inline constexpr std::string_view unknown_gate = "unknown-gate";
inline constexpr std::string_view bad_arity = "bad-arity";
inline constexpr std::string_view unresolved_kernel = "unresolved-kernel";
inline constexpr std::string_view duplicate_kernel = "duplicate-kernel";
inline constexpr std::string_view duplicate_coefficient = "duplicate-coefficient";
inline constexpr std::string_view duplicate_qubit = "duplicate-qubit";
inline constexpr std::string_view bad_index = "bad-index";
inline constexpr std::string_view capacity = "capacity";
inline constexpr std::string_view macro_recursion = "macro-recursion";
inline constexpr std::string_view degenerate_calibration = "degenerate-calibration";
inline constexpr std::string_view no_data = "no-data";
inline constexpr std::string_view mode = "mode";
inline constexpr std::string_view unsupported_parameter = "unsupported-parameter";
inline constexpr std::string_view transport = "transport";
inline constexpr std::string_view unknown_kernel = "unknown-kernel";
inline constexpr std::string_view unknown_accelerator = "unknown-accelerator";
inline constexpr std::string_view not_built = "not-built";
inline constexpr std::string_view model_mismatch = "model-mismatch";
inline constexpr std::string_view syntax = "syntax";
inline constexpr std::string_view bad_ir = "bad-ir";
inline constexpr std::string_view bad_parameter = "bad-parameter";
inline constexpr std::string_view startup = "startup";
}  // namespace errc

/// Base exception for everything the framework raises on purpose.
class Error : public std::runtime_error {
 public:
  Error(std::string_view code, const std::string& message)
      : std::runtime_error(std::string(code) + ": " + message), code_(code) {}

  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

/// Source-level error with a position. `line` and `column` are 1-based;
/// compilers report them relative to the kernel source they were handed.
class ParseError : public Error {
 public:
  ParseError(std::string_view code, const std::string& message, std::size_t line,
             std::size_t column = 0)
      : Error(code, message + " (line " + std::to_string(line) +
                        (column ? ", col " + std::to_string(column) : "") + ")"),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Persistence-document error carrying the byte offset where decoding failed.
class DocumentError : public Error {
 public:
  DocumentError(std::string_view code, const std::string& message, std::size_t byte_offset)
      : Error(code, message + " (byte " + std::to_string(byte_offset) + ")"),
        byte_offset_(byte_offset) {}

  std::size_t byte_offset() const noexcept { return byte_offset_; }

 private:
  std::size_t byte_offset_;
};

/// Client-side failure to reach a remote accelerator at all, as opposed to a
/// server-reported execution error.
class TransportError : public Error {
 public:
  explicit TransportError(const std::string& message) : Error(errc::transport, message) {}
};

}  // namespace qxir
