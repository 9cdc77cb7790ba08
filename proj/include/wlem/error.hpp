#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace wlem {

enum class ErrorCode {
  syntax,
  invalid_argument,
  bad_input,
  not_partial_order,
  not_rooted,
  not_up_closed,
  not_lattice,
  not_distributive,
  missing_residual,
  bad_bounds,
  precondition,
  resource_limit,
};

constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::syntax: return "syntax";
    case ErrorCode::invalid_argument: return "invalid-argument";
    case ErrorCode::bad_input: return "bad-input";
    case ErrorCode::not_partial_order: return "not-partial-order";
    case ErrorCode::not_rooted: return "not-rooted";
    case ErrorCode::not_up_closed: return "not-up-closed";
    case ErrorCode::not_lattice: return "not-lattice";
    case ErrorCode::not_distributive: return "not-distributive";
    case ErrorCode::missing_residual: return "missing-residual";
    case ErrorCode::bad_bounds: return "bad-bounds";
    case ErrorCode::precondition: return "precondition";
    case ErrorCode::resource_limit: return "resource-limit";
  }
  return "unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t offset, const std::string& what)
      : Error(ErrorCode::syntax,
              "at byte " + std::to_string(offset) + ": " + what),
        offset_(offset) {}

  /// Byte offset into the input where parsing failed.
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

class ResourceLimitError : public Error {
 public:
  explicit ResourceLimitError(std::uint64_t cap)
      : Error(ErrorCode::resource_limit,
              "evaluation cap of " + std::to_string(cap) + " exceeded"),
        cap_(cap) {}

  std::uint64_t cap() const noexcept { return cap_; }

 private:
  std::uint64_t cap_;
};

}  // namespace wlem
