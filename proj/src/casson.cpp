#include "legfront/casson.hpp"

#include <charconv>
#include <sstream>
#include <stdexcept>

#include "legfront/error.hpp"

namespace legfront {

namespace {

constexpr std::int64_t kDelta2OfA = 4;

[[noreturn]] void out_of_scope(std::string_view text) {
  throw Error(ErrorKind::InvalidArgument,
              "surgery formula out of scope: coefficient '" + std::string(text) + "' is not 1/m or -1/m");
}

std::int64_t half_times(std::int64_t n, std::int64_t delta2) {
  if (delta2 % 2 != 0) throw std::logic_error("odd Delta''(1) for a knot");
  return n * (delta2 / 2);
}

}  // namespace

int parse_surgery_coefficient(std::string_view text) {
  std::string_view s = text;
  int sign = 1;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    sign = s.front() == '-' ? -1 : 1;
    s.remove_prefix(1);
  }
  if (s.substr(0, 2) != "1/") out_of_scope(text);
  s.remove_prefix(2);
  int m = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), m);
  if (ec != std::errc{} || ptr != s.data() + s.size() || m <= 0) out_of_scope(text);
  return sign * m;
}

CassonReport casson_surgery_report(const SurgerySpec& spec, SkeinOptions opts) {
  if (spec.n == 0) throw Error(ErrorKind::InvalidArgument, "surgery coefficient 1/0 is undefined");
  if (spec.knot.component_count() != 1)
    throw Error(ErrorKind::MultiComponent, "surgery formula needs a knot");
  CassonReport r;
  r.formula = "lambda = (n/2) * Delta''(1)";
  std::string coeff = spec.n < 0 ? "-1/" + std::to_string(-spec.n) : "1/" + std::to_string(spec.n);
  r.inputs = "coefficient " + coeff + ", crossings " + std::to_string(spec.knot.crossing_count());
  r.delta2 = alexander_second_derivative(spec.knot, opts);
  r.delta2_computed = true;
  r.value = half_times(spec.n, r.delta2);
  return r;
}

std::int64_t casson_surgery(const SurgerySpec& spec, SkeinOptions opts) {
  return casson_surgery_report(spec, opts).value;
}

CassonReport casson_X_report(std::int64_t n, std::int64_t k) {
  CassonReport r;
  r.formula = "lambda = -(n/2) * Delta''_A(1), Delta''_A(1) = 4";
  r.inputs = "n " + std::to_string(n) + ", k " + std::to_string(k);
  r.delta2 = kDelta2OfA;
  r.delta2_computed = false;
  r.value = half_times(-n, kDelta2OfA);
  return r;
}

std::int64_t casson_X(std::int64_t n, std::int64_t k) { return casson_X_report(n, k).value; }

NotS3Witness not_s3_witness(std::int64_t n) {
  NotS3Witness w;
  w.lambda = casson_X(n, 0);
  w.not_s3 = w.lambda != 0;
  return w;
}

std::string serialize(const CassonReport& r) {
  std::ostringstream out;
  out << "casson v1\n"
      << "formula " << r.formula << "\n"
      << "inputs " << r.inputs << "\n"
      << "delta2 " << r.delta2 << "\n"
      << "delta2_source " << (r.delta2_computed ? "computed" : "constant") << "\n"
      << "value " << r.value << "\n";
  return out.str();
}

}  // namespace legfront
