#include "legfront/families.hpp"

#include <sstream>

#include "legfront/cabling.hpp"
#include "legfront/error.hpp"

namespace legfront {

int maxtb_K_m(int m) {
  if (m < 0)
    throw Error(ErrorKind::OutOfDomain,
                "m = " + std::to_string(m) + " is negative; the closed form -2m-2 only covers m >= 0, "
                "and for m < 0 the knots behave very differently");
  return -2 * m - 2;
}

int maxtb_K_mn(int m, int n) {
  if (m < 0 || n < 1)
    throw Error(ErrorKind::OutOfDomain,
                "K_{m,n} needs m >= 0 and n >= 1, got m = " + std::to_string(m) + ", n = " + std::to_string(n));
  return -2 * m * n - 3 * n + 1;
}

ConsistencyReport cabling_consistency(int m_max, int n_max) {
  ConsistencyReport rep;
  rep.m_max = m_max;
  rep.n_max = n_max;
  for (int m = 0; m <= m_max; ++m) {
    for (int n = 1; n <= n_max; ++n) {
      ++rep.cases;
      const int t = maxtb_K_m(m);
      const int p = n;
      const int q = -1;
      if (q < t * p + p) {
        rep.failures.push_back({m, n, "q = -1 is below t*p + p = " + std::to_string(t * p + p)});
        continue;
      }
      int via_cable = predicted_cable_tb(t, p, q);
      int closed = maxtb_K_mn(m, n);
      if (via_cable != closed)
        rep.failures.push_back({m, n, "cable formula gives " + std::to_string(via_cable) + ", closed form " +
                                          std::to_string(closed)});
    }
  }
  return rep;
}

const char* to_string(SteinVerdict v) {
  return v == SteinVerdict::SteinConstructible ? "Stein-constructible" : "criterion silent";
}

SteinVerdict stein_criterion(int framing, int certified_maxtb) {
  return framing < certified_maxtb ? SteinVerdict::SteinConstructible : SteinVerdict::CriterionSilent;
}

int stein_gap(int m, int n) {
  if (m < 0 || n < 2)
    throw Error(ErrorKind::OutOfDomain,
                "the gap needs m >= 0 and n >= 2, got m = " + std::to_string(m) + ", n = " + std::to_string(n));
  return -n - maxtb_K_mn(m, n);
}

std::string family_block(const std::string& name, const std::string& inputs, const std::string& formula,
                         const std::string& value) {
  return "family v1\nname " + name + "\ninputs " + inputs + "\nformula " + formula + "\nvalue " + value + "\n";
}

std::string serialize(const ConsistencyReport& r) {
  std::ostringstream out;
  out << "family v1\n"
      << "name consistency\n"
      << "inputs m_max " << r.m_max << ", n_max " << r.n_max << "\n"
      << "formula t*p^2 + (q - t*p)(p - 1) with t = -2m-2, p = n, q = -1 equals -2mn - 3n + 1\n"
      << "cases " << r.cases << "\n"
      << "failures " << r.failures.size() << "\n";
  for (const auto& f : r.failures) out << "fail m " << f.m << " n " << f.n << ": " << f.reason << "\n";
  out << "value " << (r.ok() ? "pass" : "fail") << "\n";
  return out.str();
}

}  // namespace legfront
