#pragma once

#include <string>
#include <vector>

#include "typecalc/qz.hpp"

namespace typecalc {

struct Mismatch {
  i64 row = 0;  // table row index, or the offending n / grade for sweeps
  std::string expected;
  std::string found;
};

/// Outcome of a table or lemma check.  Failures are content, not exceptions.
struct VerificationReport {
  std::string subject;
  i64 expected_count = 0;
  i64 found_count = 0;
  std::vector<Mismatch> mismatches;
  std::vector<std::string> notes;

  bool passed() const { return mismatches.empty(); }
};

}  // namespace typecalc
