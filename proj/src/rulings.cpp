#include "legfront/rulings.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <sstream>

#include "legfront/error.hpp"
#include "legfront/front_io.hpp"

namespace legfront {

const char* to_string(RulingCondition c) {
  switch (c) {
    case RulingCondition::None: return "none";
    case RulingCondition::Eye: return "eye";
    case RulingCondition::SelfCrossing: return "self-crossing";
    case RulingCondition::Distinct: return "distinct";
    case RulingCondition::Normality: return "normality";
  }
  return "unknown";
}

namespace {

SwitchSet normalized(SwitchSet s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

std::vector<bool> mask_for(const FrontDiagram& front, const SwitchSet& switches) {
  std::vector<bool> mask(static_cast<std::size_t>(front.size()), false);
  for (int c : switches) {
    if (c < 0 || c >= front.size() || front[c].kind != EventKind::Crossing)
      throw Error(ErrorKind::InvalidArgument, "switch column " + std::to_string(c) + " is not a crossing");
    mask[static_cast<std::size_t>(c)] = true;
  }
  return mask;
}

RulingVerdict fail(RulingCondition cond, int column, std::string message) {
  RulingVerdict v;
  v.condition = cond;
  v.column = column;
  v.message = std::move(message);
  return v;
}

/// Stack positions (0-based) of the two strands of `component` before `column`.
std::pair<int, int> component_positions(const StrandLayout& l, int column, int component) {
  const auto& stack = l.stacks[static_cast<std::size_t>(column)];
  int lo = -1;
  int hi = -1;
  for (int p = 0; p < static_cast<int>(stack.size()); ++p) {
    if (l.arc_component[static_cast<std::size_t>(stack[static_cast<std::size_t>(p)])] != component) continue;
    if (lo < 0) lo = p;
    else hi = p;
  }
  return {lo, hi};
}

}  // namespace

SmoothedDiagram smooth(const FrontDiagram& front, SwitchSet switches) {
  switches = normalized(std::move(switches));
  std::vector<bool> mask = mask_for(front, switches);
  StrandLayout l = layout(front, mask);
  return {front, std::move(switches), std::move(mask), std::move(l)};
}

RulingVerdict is_ruling(const FrontDiagram& front, const SwitchSet& switches) {
  SmoothedDiagram sm = smooth(front, switches);
  const StrandLayout& l = sm.strands;

  // Each component of the smoothed diagram has exactly one left cusp.
  std::vector<int> left_cusps(static_cast<std::size_t>(l.component_count), 0);
  for (int c = 0; c < front.size(); ++c) {
    if (front[c].kind != EventKind::LeftCusp) continue;
    int comp = l.arc_component[static_cast<std::size_t>(l.arc_at(c + 1, front[c].level))];
    if (++left_cusps[static_cast<std::size_t>(comp)] > 1)
      return fail(RulingCondition::Eye, c, "component with more than one left cusp at column " + std::to_string(c));
  }

  for (int c = 0; c < front.size(); ++c) {
    if (front[c].kind != EventKind::Crossing) continue;
    int level = front[c].level;
    int below = l.arc_at(c, level);
    int above = l.arc_at(c, level + 1);
    int q = l.arc_component[static_cast<std::size_t>(below)];
    int p = l.arc_component[static_cast<std::size_t>(above)];
    if (!sm.smoothed[static_cast<std::size_t>(c)]) {
      if (p == q) return fail(RulingCondition::SelfCrossing, c, "self-crossing at column " + std::to_string(c));
      continue;
    }
    if (p == q)
      return fail(RulingCondition::Distinct, c, "switch at column " + std::to_string(c) + " lies on one component");

    // P is the upper smoothed strand, Q the lower one; compare levels at x_c.
    auto [p_lo, p_hi] = component_positions(l, c, p);
    auto [q_lo, q_hi] = component_positions(l, c, q);
    bool p_is_lower = p_lo == level;  // 0-based position of `above` is `level`
    bool q_is_upper = q_hi == level - 1;
    bool normal = false;
    if (p_is_lower && q_is_upper) normal = true;                // (i)
    else if (p_is_lower && !q_is_upper) normal = p_hi < q_hi;   // (ii)
    else if (!p_is_lower && q_is_upper) normal = p_lo < q_lo;   // (iii)
    if (!normal)
      return fail(RulingCondition::Normality, c, "switch at column " + std::to_string(c) + " is not normal");
  }
  RulingVerdict ok;
  ok.ok = true;
  return ok;
}

namespace {

struct Label {
  int eye;
  bool upper;
};

/// Position of the partner strand of the strand at `pos`.
int partner(const std::vector<Label>& st, int pos) {
  for (int i = 0; i < static_cast<int>(st.size()); ++i)
    if (i != pos && st[static_cast<std::size_t>(i)].eye == st[static_cast<std::size_t>(pos)].eye) return i;
  return -1;
}

/// Normality of a switch between positions k-1 (Q) and k (P), 0-based.
bool switch_is_normal(const std::vector<Label>& st, int k) {
  const Label& q = st[static_cast<std::size_t>(k - 1)];
  const Label& p = st[static_cast<std::size_t>(k)];
  if (!p.upper && q.upper) return true;
  if (!p.upper && !q.upper) return partner(st, k) < partner(st, k - 1);
  if (p.upper && q.upper) return partner(st, k) < partner(st, k - 1);
  return false;
}

/// Applies the cusp events at `col` to `st`. False when a right cusp closes
/// two different eyes.
bool apply_cusp(const Event& e, int col, std::vector<Label>& st) {
  auto at = st.begin() + (e.level - 1);
  if (e.kind == EventKind::LeftCusp) {
    st.insert(at, {Label{col, false}, Label{col, true}});
    return true;
  }
  if (at->eye != (at + 1)->eye) return false;
  st.erase(at, at + 2);
  return true;
}

class Sweep {
 public:
  explicit Sweep(const FrontDiagram& f) : front_(f) {}

  void enumerate(int col, std::vector<Label>& st, SwitchSet& chosen, std::vector<SwitchSet>& out) const {
    if (col == front_.size()) {
      out.push_back(chosen);
      return;
    }
    const Event& e = front_[col];
    if (e.kind != EventKind::Crossing) {
      std::vector<Label> next = st;
      if (apply_cusp(e, col, next)) enumerate(col + 1, next, chosen, out);
      return;
    }
    int k = e.level;  // 0-based index of the upper strand
    if (st[static_cast<std::size_t>(k - 1)].eye == st[static_cast<std::size_t>(k)].eye) return;
    if (switch_is_normal(st, k)) {
      chosen.push_back(col);
      enumerate(col + 1, st, chosen, out);
      chosen.pop_back();
    }
    std::swap(st[static_cast<std::size_t>(k - 1)], st[static_cast<std::size_t>(k)]);
    enumerate(col + 1, st, chosen, out);
    std::swap(st[static_cast<std::size_t>(k - 1)], st[static_cast<std::size_t>(k)]);
  }

  std::uint64_t count(int col, const std::vector<Label>& st) {
    if (col == front_.size()) return 1;
    auto key = std::make_pair(col, canonical(st));
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    std::uint64_t total = 0;
    const Event& e = front_[col];
    if (e.kind != EventKind::Crossing) {
      std::vector<Label> next = st;
      if (apply_cusp(e, col, next)) total = count(col + 1, next);
    } else {
      int k = e.level;
      if (st[static_cast<std::size_t>(k - 1)].eye != st[static_cast<std::size_t>(k)].eye) {
        if (switch_is_normal(st, k)) total += count(col + 1, st);
        std::vector<Label> next = st;
        std::swap(next[static_cast<std::size_t>(k - 1)], next[static_cast<std::size_t>(k)]);
        total += count(col + 1, next);
      }
    }
    memo_.emplace(std::move(key), total);
    return total;
  }

 private:
  /// Eyes renamed by first appearance from the bottom; the upper flag is
  /// implied by the second appearance.
  static std::vector<int> canonical(const std::vector<Label>& st) {
    std::vector<int> out;
    std::map<int, int> rename;
    for (const Label& l : st) {
      auto [it, fresh] = rename.try_emplace(l.eye, static_cast<int>(rename.size()));
      out.push_back(it->second);
    }
    return out;
  }

  const FrontDiagram& front_;
  std::map<std::pair<int, std::vector<int>>, std::uint64_t> memo_;
};

}  // namespace

std::vector<SwitchSet> enumerate_rulings(const FrontDiagram& front) {
  require_valid(front);
  std::vector<SwitchSet> out;
  std::vector<Label> st;
  SwitchSet chosen;
  Sweep(front).enumerate(0, st, chosen, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t count_rulings(const FrontDiagram& front) {
  require_valid(front);
  Sweep sweep(front);
  return sweep.count(0, {});
}

std::vector<SwitchSet> brute_force_rulings(const FrontDiagram& front, int max_crossings) {
  require_valid(front);
  std::vector<int> xs = front.columns_of(EventKind::Crossing);
  if (static_cast<int>(xs.size()) > max_crossings)
    throw Error(ErrorKind::CrossingCap, "brute force limited to " + std::to_string(max_crossings) + " crossings");
  std::vector<SwitchSet> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << xs.size()); ++mask) {
    SwitchSet s;
    for (std::size_t i = 0; i < xs.size(); ++i)
      if (mask >> i & 1U) s.push_back(xs[i]);
    if (is_ruling(front, s)) out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end());
  return out;
}

Ruling make_ruling(const FrontDiagram& front, const SwitchSet& switches) {
  RulingVerdict v = is_ruling(front, switches);
  if (!v) throw Error(ErrorKind::InvalidArgument, "not a ruling: " + v.message);
  SmoothedDiagram sm = smooth(front, switches);
  const StrandLayout& l = sm.strands;
  Ruling r{sm.switches, {}};
  std::vector<int> eye_of(static_cast<std::size_t>(l.component_count), -1);
  for (int c = 0; c < front.size(); ++c) {
    if (front[c].kind != EventKind::LeftCusp) continue;
    int comp = l.arc_component[static_cast<std::size_t>(l.arc_at(c + 1, front[c].level))];
    eye_of[static_cast<std::size_t>(comp)] = static_cast<int>(r.eyes.size());
    r.eyes.push_back({c, -1, {}, {}});
  }
  for (int c = 0; c < front.size(); ++c) {
    if (front[c].kind != EventKind::RightCusp) continue;
    int comp = l.arc_component[static_cast<std::size_t>(l.arc_at(c, front[c].level))];
    r.eyes[static_cast<std::size_t>(eye_of[static_cast<std::size_t>(comp)])].right_column = c;
  }
  for (std::size_t comp = 0; comp < eye_of.size(); ++comp) {
    Eye& eye = r.eyes[static_cast<std::size_t>(eye_of[comp])];
    for (int c = eye.left_column + 1; c <= eye.right_column; ++c) {
      auto [lo, hi] = component_positions(l, c, static_cast<int>(comp));
      eye.lower.push_back(lo + 1);
      eye.upper.push_back(hi + 1);
    }
  }
  return r;
}

std::optional<MaxTbCertificate> maxtb_certificate(const OrientedFront& front) {
  int value = tb(front);
  std::vector<SwitchSet> all = enumerate_rulings(front.front());
  if (all.empty()) return std::nullopt;
  return MaxTbCertificate{front, make_ruling(front.front(), all.front()), value};
}

bool verify(const MaxTbCertificate& cert) {
  return is_ruling(cert.front.front(), cert.ruling.switches).ok && cert.certified_value == tb(cert.front);
}

std::string format_switches(const SwitchSet& s) {
  std::string out = "[";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(s[i]);
  }
  return out + "]";
}

SwitchSet parse_switches(std::string_view text) {
  SwitchSet out;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == ',' || text[i] == '[' || text[i] == ']' || text[i] == '\t'))
      ++i;
  };
  skip();
  while (i < text.size()) {
    int v = 0;
    auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + text.size(), v);
    if (ec != std::errc{} || v < 0)
      throw ParseError(1, static_cast<int>(i) + 1, "expected a non-negative column index");
    i = static_cast<std::size_t>(ptr - text.data());
    out.push_back(v);
    if (i < text.size() && !(text[i] == ' ' || text[i] == ',' || text[i] == ']' || text[i] == '\t'))
      throw ParseError(1, static_cast<int>(i) + 1, "unexpected character in switch list");
    skip();
  }
  return normalized(std::move(out));
}

std::string serialize_rulings(const std::vector<SwitchSet>& rulings) {
  std::string out = "rulings v1\ncount " + std::to_string(rulings.size()) + "\n";
  for (const auto& r : rulings) out += format_switches(r) + "\n";
  return out;
}

std::string serialize(const MaxTbCertificate& cert) {
  return "certificate v1\nvalue " + std::to_string(cert.certified_value) + "\nswitches " +
         format_switches(cert.ruling.switches) + "\n" + serialize(cert.front.front());
}

}  // namespace legfront
