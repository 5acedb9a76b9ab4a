#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace legfront {

/// Exact Laurent polynomial in `N` commuting variables with 64-bit integer
/// coefficients. Terms are kept in a sorted map from exponent vector to a
/// nonzero coefficient, so two equal polynomials always compare equal.
/// Arithmetic throws std::overflow_error instead of wrapping.
template <std::size_t N>
class Laurent {
 public:
  using Exponent = std::array<int, N>;
  using Coefficient = std::int64_t;
  using Terms = std::map<Exponent, Coefficient>;

  Laurent() = default;
  Laurent(Coefficient c) {  // NOLINT(google-explicit-constructor)
    if (c != 0) terms_[Exponent{}] = c;
  }

  static Laurent monomial(Coefficient c, const Exponent& e) {
    Laurent p;
    if (c != 0) p.terms_[e] = c;
    return p;
  }

  /// The single variable with index `var`, raised to `power`.
  static Laurent variable(std::size_t var, int power = 1) {
    Exponent e{};
    e.at(var) = power;
    return monomial(1, e);
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  Coefficient coefficient(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? 0 : it->second;
  }

  /// Largest exponent of variable `var` among the terms. Throws on zero.
  int max_degree(std::size_t var) const {
    if (is_zero()) throw std::domain_error("degree of the zero polynomial");
    int best = terms_.begin()->first.at(var);
    for (const auto& [e, c] : terms_) best = std::max(best, e[var]);
    return best;
  }

  int min_degree(std::size_t var) const {
    if (is_zero()) throw std::domain_error("degree of the zero polynomial");
    int best = terms_.begin()->first.at(var);
    for (const auto& [e, c] : terms_) best = std::min(best, e[var]);
    return best;
  }

  /// Substitutes x_var -> x_var^{-1}.
  Laurent invert_variable(std::size_t var) const {
    Laurent out;
    for (const auto& [e, c] : terms_) {
      Exponent flipped = e;
      flipped.at(var) = -flipped[var];
      out.terms_[flipped] = c;
    }
    return out;
  }

  Laurent& operator+=(const Laurent& o) {
    for (const auto& [e, c] : o.terms_) accumulate(e, c);
    return *this;
  }
  Laurent& operator-=(const Laurent& o) {
    for (const auto& [e, c] : o.terms_) accumulate(e, checked_neg(c));
    return *this;
  }
  Laurent& operator*=(const Laurent& o) { return *this = *this * o; }

  friend Laurent operator+(Laurent l, const Laurent& r) { return l += r; }
  friend Laurent operator-(Laurent l, const Laurent& r) { return l -= r; }
  friend Laurent operator-(const Laurent& p) { return Laurent{} - p; }

  friend Laurent operator*(const Laurent& l, const Laurent& r) {
    Laurent out;
    for (const auto& [el, cl] : l.terms_) {
      for (const auto& [er, cr] : r.terms_) {
        Exponent e{};
        for (std::size_t i = 0; i < N; ++i) e[i] = el[i] + er[i];
        Coefficient prod = 0;
        if (__builtin_mul_overflow(cl, cr, &prod)) throw std::overflow_error("Laurent coefficient overflow");
        out.accumulate(e, prod);
      }
    }
    return out;
  }

  Laurent pow(unsigned k) const {
    Laurent out{1};
    for (unsigned i = 0; i < k; ++i) out *= *this;
    return out;
  }

  friend bool operator==(const Laurent&, const Laurent&) = default;

  /// One line per term, `e_1 ... e_N: c`, ascending in exponent order.
  std::string serialize_terms() const {
    std::ostringstream os;
    for (const auto& [e, c] : terms_) {
      for (std::size_t i = 0; i < N; ++i) os << (i ? " " : "") << e[i];
      os << ": " << c << '\n';
    }
    return os.str();
  }

 private:
  static Coefficient checked_neg(Coefficient c) {
    Coefficient r = 0;
    if (__builtin_sub_overflow(Coefficient{0}, c, &r)) throw std::overflow_error("Laurent coefficient overflow");
    return r;
  }

  void accumulate(const Exponent& e, Coefficient c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (inserted) return;
    if (__builtin_add_overflow(it->second, c, &it->second)) throw std::overflow_error("Laurent coefficient overflow");
    if (it->second == 0) terms_.erase(it);
  }

  Terms terms_;
};

/// Polynomials in (a, z): index 0 is a, index 1 is z.
using PolyAZ = Laurent<2>;
/// Polynomials in the single variable z.
using PolyZ = Laurent<1>;

inline constexpr std::size_t kVarA = 0;
inline constexpr std::size_t kVarZ = 1;

/// Human-readable rendering, e.g. `2*a^-1*z + 1`.
template <std::size_t N>
std::string to_string(const Laurent<N>& p, const std::array<const char*, N>& names) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  // Descending order reads more naturally.
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    auto [e, c] = *it;
    bool constant = true;
    for (int x : e) constant = constant && x == 0;
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    first = false;
    std::int64_t mag = c < 0 ? -c : c;
    bool wrote = false;
    if (mag != 1 || constant) {
      os << mag;
      wrote = true;
    }
    for (std::size_t i = 0; i < N; ++i) {
      if (e[i] == 0) continue;
      if (wrote) os << '*';
      os << names[i];
      if (e[i] != 1) os << '^' << e[i];
      wrote = true;
    }
  }
  return os.str();
}

inline std::string to_string(const PolyAZ& p) { return to_string<2>(p, {"a", "z"}); }
inline std::string to_string(const PolyZ& p) { return to_string<1>(p, {"z"}); }

/// `poly v1`, a `vars` line, then the terms in ascending exponent order.
template <std::size_t N>
std::string serialize(const Laurent<N>& p, const std::array<const char*, N>& names) {
  std::string out = "poly v1\nvars";
  for (const char* n : names) out += std::string(" ") + n;
  out += '\n';
  return out + p.serialize_terms();
}

inline std::string serialize(const PolyAZ& p) { return serialize<2>(p, {"a", "z"}); }
inline std::string serialize(const PolyZ& p) { return serialize<1>(p, {"z"}); }

}  // namespace legfront
