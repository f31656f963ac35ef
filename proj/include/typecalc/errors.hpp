#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace typecalc {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Bad argument or a value outside an operation's supported range.
struct InvalidInput : Error {
  using Error::Error;
};

/// Checked 64-bit arithmetic overflowed.
struct OverflowError : Error {
  using Error::Error;
};

/// A fraction multiset is not stable under conjugation: F(x) = mult(x) + mult(-x)
/// is not constant on some order class that meets the support.
struct StabilityError : Error {
  StabilityError(const std::string& msg, std::int64_t order,
                 std::vector<std::pair<std::int64_t, int>> class_counts)
      : Error(msg), order_class(order), counts(std::move(class_counts)) {}

  std::int64_t order_class;
  /// (residue a, F(a/d)) for every a coprime to the order class d.
  std::vector<std::pair<std::int64_t, int>> counts;
};

/// Two independent computation routes disagreed, or a closed formula produced
/// an impossible value.
struct ConsistencyError : Error {
  using Error::Error;
};

/// classify() found no applicable strategy for an age-1 type.
struct ClassificationError : Error {
  using Error::Error;
};

/// Text input could not be parsed; position is a byte offset into the input.
struct ParseError : Error {
  ParseError(const std::string& msg, std::size_t pos) : Error(msg), position(pos) {}
  std::size_t position;
};

}  // namespace typecalc
