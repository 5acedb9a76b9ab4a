#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace legfront {

/// Maximal tb of K_m: -2m - 2. Only m >= 0 is covered.
int maxtb_K_m(int m);

/// Maximal tb of K_{m,n}, the (n, -1) cable of K_m: -2mn - 3n + 1, for
/// m >= 0 and n >= 1.
int maxtb_K_mn(int m, int n);

struct ConsistencyFailure {
  int m = 0;
  int n = 0;
  std::string reason;
};

struct ConsistencyReport {
  int m_max = 0;
  int n_max = 0;
  int cases = 0;
  std::vector<ConsistencyFailure> failures;
  bool ok() const { return failures.empty(); }
};

/// For 0 <= m <= m_max and 1 <= n <= n_max, puts t = maxtb_K_m(m), p = n,
/// q = -1 into the cable formula, after checking q >= t p + p, and compares
/// with maxtb_K_mn(m, n).
ConsistencyReport cabling_consistency(int m_max, int n_max);

enum class SteinVerdict { SteinConstructible, CriterionSilent };

const char* to_string(SteinVerdict v);

/// Attaching a 2-handle along a knot with framing below its maximal tb gives
/// a Stein manifold. At or above it the criterion says nothing.
SteinVerdict stein_criterion(int framing, int certified_maxtb);

/// Framing minus maximal tb for the (-n)-framed K_{m,n}: 2mn + 2n - 1.
/// Needs m >= 0 and n >= 2.
int stein_gap(int m, int n);

/// `family v1` block with the inputs, formula and value.
std::string family_block(const std::string& name, const std::string& inputs, const std::string& formula,
                         const std::string& value);
std::string serialize(const ConsistencyReport& report);

}  // namespace legfront
