#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "legfront/skein.hpp"

namespace legfront {

/// 1/n surgery on a knot, n != 0.
struct SurgerySpec {
  LinkDiagram knot;
  int n = 1;
};

/// Reads `1/m` or `-1/m` (m > 0) and returns the signed n of 1/n. Any
/// other coefficient throws InvalidArgument.
int parse_surgery_coefficient(std::string_view text);

struct CassonReport {
  std::string formula;
  std::string inputs;
  std::int64_t delta2 = 0;
  bool delta2_computed = true;  // false when Delta''(1) is a fixed constant
  std::int64_t value = 0;
};

/// Casson invariant of 1/n surgery: (n/2) Delta''(1), with lambda(S^3) = 0.
std::int64_t casson_surgery(const SurgerySpec& spec, SkeinOptions opts = default_skein_options());
CassonReport casson_surgery_report(const SurgerySpec& spec, SkeinOptions opts = default_skein_options());

/// lambda of the boundary of X_{n,k}: -1/n surgery on A_{n,k}, whose
/// Delta''(1) is 4 for every n and k. Gives -2n.
std::int64_t casson_X(std::int64_t n, std::int64_t k);
CassonReport casson_X_report(std::int64_t n, std::int64_t k);

struct NotS3Witness {
  bool not_s3 = false;
  std::int64_t lambda = 0;
};

/// A nonzero Casson invariant rules out S^3; for the boundary of X_{n,k}
/// that happens exactly when n != 0.
NotS3Witness not_s3_witness(std::int64_t n);

/// `casson v1` block.
std::string serialize(const CassonReport& report);

}  // namespace legfront
