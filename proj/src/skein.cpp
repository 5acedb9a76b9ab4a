#include "legfront/skein.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <string>

#include "legfront/error.hpp"

namespace legfront {

namespace {

using Slots = std::array<int, 4>;

struct Dart {
  int crossing;
  int slot;
  friend bool operator==(const Dart&, const Dart&) = default;
};

/// For every edge, its two (crossing, slot) ends.
std::vector<std::array<Dart, 2>> edge_ends(const std::vector<Slots>& xs) {
  std::vector<std::array<Dart, 2>> ends(2 * xs.size(), {Dart{-1, -1}, Dart{-1, -1}});
  for (int c = 0; c < static_cast<int>(xs.size()); ++c) {
    for (int s = 0; s < 4; ++s) {
      auto& e = ends.at(static_cast<std::size_t>(xs[static_cast<std::size_t>(c)][static_cast<std::size_t>(s)]));
      (e[0].crossing < 0 ? e[0] : e[1]) = Dart{c, s};
    }
  }
  return ends;
}

/// Arriving at `d`, pass straight through and return the next arrival.
Dart next_arrival(const std::vector<Slots>& xs, const std::vector<std::array<Dart, 2>>& ends, Dart d) {
  Dart out{d.crossing, (d.slot + 2) % 4};
  int e = xs[static_cast<std::size_t>(out.crossing)][static_cast<std::size_t>(out.slot)];
  const auto& pair = ends[static_cast<std::size_t>(e)];
  return pair[0] == out ? pair[1] : pair[0];
}

/// Renumbers edges 0.. in order of first appearance.
void compact_edges(std::vector<Slots>& xs) {
  std::map<int, int> rename;
  for (auto& x : xs)
    for (int& e : x) {
      auto [it, fresh] = rename.try_emplace(e, static_cast<int>(rename.size()));
      e = it->second;
    }
}

/// Removes crossing `c`, joining the edge ends at each slot pair. Returns the
/// number of closed loops created.
int remove_joining(std::vector<Slots>& xs, int c, std::array<std::array<int, 2>, 2> pairs,
                   std::vector<bool>* flags = nullptr) {
  Slots here = xs[static_cast<std::size_t>(c)];
  xs.erase(xs.begin() + c);
  if (flags) flags->erase(flags->begin() + c);
  int loops = 0;
  for (auto [sa, sb] : pairs) {
    int ea = here[static_cast<std::size_t>(sa)];
    int eb = here[static_cast<std::size_t>(sb)];
    if (ea == eb) {
      ++loops;
      continue;
    }
    for (auto& x : xs)
      for (int& e : x)
        if (e == eb) e = ea;
    for (int& e : here)
      if (e == eb) e = ea;
  }
  compact_edges(xs);
  return loops;
}

constexpr std::array<std::array<int, 2>, 2> kPairsA{{{0, 1}, {2, 3}}};
constexpr std::array<std::array<int, 2>, 2> kPairsB{{{1, 2}, {3, 0}}};

/// Finds a crossing with two adjacent slots on one edge. Returns
/// (crossing, first slot) or (-1, -1).
std::pair<int, int> find_curl(const std::vector<Slots>& xs) {
  for (int c = 0; c < static_cast<int>(xs.size()); ++c)
    for (int s = 0; s < 4; ++s)
      if (xs[static_cast<std::size_t>(c)][static_cast<std::size_t>(s)] ==
          xs[static_cast<std::size_t>(c)][static_cast<std::size_t>((s + 1) % 4)])
        return {c, s};
  return {-1, -1};
}

/// Removes a curl at (c, s): the loop edge disappears and the two remaining
/// ends are joined. Returns loops created (1 for an isolated figure eight).
int remove_curl(std::vector<Slots>& xs, int c, int s, std::vector<bool>* flags = nullptr) {
  int t1 = (s + 2) % 4;
  int t2 = (s + 3) % 4;
  // Treating the curl as a smoothing that pairs (s, s+1) and (s+2, s+3)
  // leaves one circle from the loop edge, which is discarded.
  int loops = remove_joining(xs, c, {{{s, (s + 1) % 4}, {t1, t2}}}, flags);
  return loops - 1;
}

/// Diagram skeleton shared by both engines: per-crossing slots plus, for the
/// oriented engine, over_forward flags (slot 0 is then the under-strand in).
struct Skeleton {
  std::vector<Slots> xs;
  std::vector<bool> over_forward;
};

Skeleton skeleton_of(const LinkDiagram& d) {
  Skeleton s;
  for (const auto& x : d.crossings) {
    s.xs.push_back(x.edges);
    s.over_forward.push_back(x.over_forward);
  }
  return s;
}

/// Canonical relabeling for memo keys. With `oriented`, slot 0 stays the
/// incoming under-strand; otherwise a crossing may be turned by 180 degrees.
std::vector<int> canonical_code(const std::vector<Slots>& xs, const std::vector<bool>* flags, bool oriented,
                                std::vector<Slots>* relabeled = nullptr, std::vector<bool>* relabeled_flags = nullptr) {
  const int n = static_cast<int>(xs.size());
  auto ends = edge_ends(xs);
  std::vector<int> best;
  std::vector<Slots> best_xs;
  std::vector<bool> best_flags;
  for (int start = 0; start < n; ++start) {
    for (int rot0 : {0, 2}) {
      if (oriented && rot0 != 0) continue;
      std::vector<int> order;
      std::vector<int> rot(static_cast<std::size_t>(n), -1);
      std::vector<int> id(static_cast<std::size_t>(n), -1);
      auto label = [&](int c, int r) {
        id[static_cast<std::size_t>(c)] = static_cast<int>(order.size());
        rot[static_cast<std::size_t>(c)] = r;
        order.push_back(c);
      };
      label(start, rot0);
      for (std::size_t head = 0; head < order.size() || static_cast<int>(order.size()) < n; ++head) {
        if (head == order.size()) {
          for (int c = 0; c < n; ++c)
            if (id[static_cast<std::size_t>(c)] < 0) {
              label(c, 0);
              break;
            }
        }
        int c = order[head];
        for (int s = 0; s < 4; ++s) {
          Dart here{c, (s + rot[static_cast<std::size_t>(c)]) % 4};
          int e = xs[static_cast<std::size_t>(c)][static_cast<std::size_t>(here.slot)];
          const auto& pair = ends[static_cast<std::size_t>(e)];
          Dart there = pair[0] == here ? pair[1] : pair[0];
          if (id[static_cast<std::size_t>(there.crossing)] < 0)
            label(there.crossing, oriented ? 0 : (there.slot < 2 ? 0 : 2));
        }
      }
      std::vector<Slots> out(static_cast<std::size_t>(n));
      std::vector<bool> out_flags(static_cast<std::size_t>(n));
      for (int k = 0; k < n; ++k) {
        int c = order[static_cast<std::size_t>(k)];
        for (int s = 0; s < 4; ++s)
          out[static_cast<std::size_t>(k)][static_cast<std::size_t>(s)] =
              xs[static_cast<std::size_t>(c)][static_cast<std::size_t>((s + rot[static_cast<std::size_t>(c)]) % 4)];
        if (flags) out_flags[static_cast<std::size_t>(k)] = (*flags)[static_cast<std::size_t>(c)];
      }
      compact_edges(out);
      std::vector<int> code;
      code.reserve(static_cast<std::size_t>(5 * n));
      for (int k = 0; k < n; ++k) {
        for (int e : out[static_cast<std::size_t>(k)]) code.push_back(e);
        if (flags) code.push_back(out_flags[static_cast<std::size_t>(k)] ? 1 : 0);
      }
      if (best.empty() || code < best) {
        best = std::move(code);
        best_xs = std::move(out);
        best_flags = std::move(out_flags);
      }
    }
  }
  if (relabeled) *relabeled = std::move(best_xs);
  if (relabeled_flags) *relabeled_flags = std::move(best_flags);
  return best;
}

struct Visit {
  Dart at;
  int component;
};

/// Walks every component, starting each at the first unvisited candidate
/// dart. `starts(c)` lists candidate arrival slots at crossing c in order.
template <typename Starts>
std::vector<Visit> traverse(const std::vector<Slots>& xs, Starts starts, int* components) {
  auto ends = edge_ends(xs);
  std::vector<std::array<bool, 4>> arrived(xs.size(), {false, false, false, false});
  std::vector<Visit> seq;
  int comp = 0;
  for (int c = 0; c < static_cast<int>(xs.size()); ++c) {
    for (int s : starts(c)) {
      auto& a = arrived[static_cast<std::size_t>(c)];
      if (a[static_cast<std::size_t>(s)] || a[static_cast<std::size_t>((s + 2) % 4)]) continue;
      Dart d{c, s};
      do {
        arrived[static_cast<std::size_t>(d.crossing)][static_cast<std::size_t>(d.slot)] = true;
        seq.push_back({d, comp});
        d = next_arrival(xs, ends, d);
      } while (!(d == Dart{c, s}));
      ++comp;
    }
  }
  if (components) *components = comp;
  return seq;
}

void check_cap(int crossings, const SkeinOptions& opts) {
  if (crossings > opts.max_crossings)
    throw Error(ErrorKind::CrossingCap, "diagram has " + std::to_string(crossings) + " crossings, cap is " +
                                            std::to_string(opts.max_crossings));
}

PolyAZ a_power(int k) { return PolyAZ::variable(kVarA, k); }

class DubrovnikEngine {
 public:
  DubrovnikEngine() { loop_ = (PolyAZ::variable(kVarA) - a_power(-1)) * PolyAZ::variable(kVarZ, -1) + PolyAZ{1}; }

  PolyAZ eval(std::vector<Slots> xs, int loops) {
    int curl_writhe = 0;
    for (auto [c, s] = find_curl(xs); c >= 0; std::tie(c, s) = find_curl(xs)) {
      curl_writhe += s % 2 == 0 ? 1 : -1;
      loops += remove_curl(xs, c, s);
    }
    PolyAZ factor = a_power(curl_writhe);
    if (xs.empty()) {
      if (loops < 1) throw std::logic_error("empty diagram in skein recursion");
      return factor * loop_.pow(static_cast<unsigned>(loops - 1));
    }
    factor *= loop_.pow(static_cast<unsigned>(loops));

    std::vector<Slots> canon;
    std::vector<int> key = canonical_code(xs, nullptr, false, &canon);
    if (auto it = memo_.find(key); it != memo_.end()) return factor * it->second;
    PolyAZ value = descend(std::move(canon));
    memo_.emplace(std::move(key), value);
    return factor * value;
  }

 private:
  PolyAZ descend(std::vector<Slots> cur) {
    int comps = 0;
    std::vector<Visit> seq = traverse(cur, [](int) { return std::array<int, 2>{0, 1}; }, &comps);
    const std::size_t n = cur.size();
    std::vector<bool> seen(n, false);
    std::vector<bool> switched(n, false);
    std::vector<int> under_slot(n, -1);
    std::vector<int> over_slot(n, -1);
    std::vector<int> under_comp(n, -1);
    std::vector<int> over_comp(n, -1);
    for (const Visit& v : seq) {
      auto c = static_cast<std::size_t>(v.at.crossing);
      if (v.at.slot % 2 == 0) {
        under_slot[c] = v.at.slot;
        under_comp[c] = v.component;
      } else {
        over_slot[c] = v.at.slot;
        over_comp[c] = v.component;
      }
    }
    PolyAZ total;
    const PolyAZ z = PolyAZ::variable(kVarZ);
    for (const Visit& v : seq) {
      auto c = static_cast<std::size_t>(v.at.crossing);
      if (seen[c]) continue;
      seen[c] = true;
      if (v.at.slot % 2 != 0) continue;
      // First passage is under: D(X) = D(X switched) + z (D_A - D_B).
      std::vector<Slots> a = cur;
      int la = remove_joining(a, static_cast<int>(c), kPairsA);
      std::vector<Slots> b = cur;
      int lb = remove_joining(b, static_cast<int>(c), kPairsB);
      total += z * (eval(std::move(a), la) - eval(std::move(b), lb));
      Slots& x = cur[c];
      std::rotate(x.begin(), x.begin() + 1, x.end());
      switched[c] = true;
    }
    int self_writhe = 0;
    for (std::size_t c = 0; c < n; ++c) {
      if (under_comp[c] != over_comp[c]) continue;
      bool under_forward = under_slot[c] == 0;
      bool over_forward = over_slot[c] == 1;
      int sign = under_forward != over_forward ? 1 : -1;
      self_writhe += switched[c] ? -sign : sign;
    }
    return total + a_power(self_writhe) * loop_.pow(static_cast<unsigned>(comps - 1));
  }

  PolyAZ loop_;
  std::map<std::vector<int>, PolyAZ> memo_;
};

class ConwayEngine {
 public:
  PolyZ eval(std::vector<Slots> xs, std::vector<bool> of, int loops) {
    for (auto [c, s] = find_curl(xs); c >= 0; std::tie(c, s) = find_curl(xs)) loops += remove_curl(xs, c, s, &of);
    if (xs.empty()) return loops == 1 ? PolyZ{1} : PolyZ{};
    if (loops > 0) return PolyZ{};

    std::vector<Slots> canon;
    std::vector<bool> canon_of;
    std::vector<int> key = canonical_code(xs, &of, true, &canon, &canon_of);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    PolyZ value = descend(std::move(canon), std::move(canon_of));
    memo_.emplace(std::move(key), value);
    return value;
  }

 private:
  PolyZ descend(std::vector<Slots> cur, std::vector<bool> of) {
    int comps = 0;
    const std::vector<bool> initial = of;
    // A component that only ever passes over starts at an over-in dart.
    std::vector<Visit> seq = traverse(
        cur, [&](int c) { return std::array<int, 2>{0, initial[static_cast<std::size_t>(c)] ? 1 : 3}; }, &comps);
    const std::size_t n = cur.size();
    std::vector<bool> seen(n, false);
    PolyZ total;
    const PolyZ z = PolyZ::variable(0);
    for (const Visit& v : seq) {
      auto c = static_cast<std::size_t>(v.at.crossing);
      if (seen[c]) continue;
      seen[c] = true;
      if (v.at.slot != 0) continue;
      int sign = of[c] ? -1 : 1;
      // Oriented smoothing joins under-in to over-out and over-in to under-out.
      auto pairs = of[c] ? std::array<std::array<int, 2>, 2>{{{0, 3}, {1, 2}}}
                         : std::array<std::array<int, 2>, 2>{{{0, 1}, {3, 2}}};
      std::vector<Slots> smoothed = cur;
      std::vector<bool> smoothed_of = of;
      int loops = remove_joining(smoothed, static_cast<int>(c), pairs, &smoothed_of);
      PolyZ term = z * eval(std::move(smoothed), std::move(smoothed_of), loops);
      total += sign > 0 ? term : -term;
      Slots& x = cur[c];
      if (of[c]) std::rotate(x.begin(), x.begin() + 1, x.end());
      else std::rotate(x.begin(), x.begin() + 3, x.end());
      of[c] = !of[c];
    }
    return total + (comps == 1 ? PolyZ{1} : PolyZ{});
  }

  std::map<std::vector<int>, PolyZ> memo_;
};

}  // namespace

int LinkDiagram::writhe() const {
  int w = 0;
  for (const auto& x : crossings) w += x.sign();
  return w;
}

int LinkDiagram::component_count() const {
  Skeleton s = skeleton_of(*this);
  int comps = 0;
  traverse(s.xs, [](int) { return std::array<int, 2>{0, 1}; }, &comps);
  return comps + free_loops;
}

bool is_well_formed(const LinkDiagram& d) {
  const int n = d.crossing_count();
  std::vector<int> in_count(static_cast<std::size_t>(2 * n), 0);
  std::vector<int> out_count(static_cast<std::size_t>(2 * n), 0);
  for (const auto& x : d.crossings) {
    for (int s = 0; s < 4; ++s) {
      int e = x.edges[static_cast<std::size_t>(s)];
      if (e < 0 || e >= 2 * n) return false;
      bool incoming = s == 0 || (s == 1 && x.over_forward) || (s == 3 && !x.over_forward);
      ++(incoming ? in_count : out_count)[static_cast<std::size_t>(e)];
    }
  }
  for (int e = 0; e < 2 * n; ++e)
    if (in_count[static_cast<std::size_t>(e)] != 1 || out_count[static_cast<std::size_t>(e)] != 1) return false;
  return d.free_loops >= 0;
}

LinkDiagram to_link_diagram(const OrientedFront& f) {
  const FrontDiagram& front = f.front();
  std::vector<int> parent;
  auto fresh = [&] {
    parent.push_back(static_cast<int>(parent.size()));
    return parent.back();
  };
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)];
    return x;
  };
  std::vector<int> at;  // open edge at each strand position
  std::vector<Slots> raw;
  std::vector<bool> over_forward;
  for (int c = 0; c < front.size(); ++c) {
    const Event& e = front[c];
    auto k = static_cast<std::size_t>(e.level - 1);
    switch (e.kind) {
      case EventKind::LeftCusp: {
        int id = fresh();
        at.insert(at.begin() + static_cast<std::ptrdiff_t>(k), {id, id});
        break;
      }
      case EventKind::RightCusp:
        parent[static_cast<std::size_t>(find(at[k + 1]))] = find(at[k]);
        at.erase(at.begin() + static_cast<std::ptrdiff_t>(k), at.begin() + static_cast<std::ptrdiff_t>(k) + 2);
        break;
      case EventKind::Crossing: {
        int lower_in = at[k];
        int upper_in = at[k + 1];
        int lower_out = fresh();  // continuation of the ascending strand
        int upper_out = fresh();  // continuation of the descending strand
        // Counterclockwise from the south-west end of the ascending (under)
        // strand: SW, SE, NE, NW.
        Slots geometric{lower_in, upper_out, lower_out, upper_in};
        bool under_right = f.direction(f.strands().arc_at(c, e.level)) == Direction::Rightward;
        bool over_right = f.direction(f.strands().arc_at(c, e.level + 1)) == Direction::Rightward;
        if (!under_right) std::rotate(geometric.begin(), geometric.begin() + 2, geometric.end());
        raw.push_back(geometric);
        // Slot 1 is SE (rotated: NW); the over-strand runs 1 -> 3 when it
        // travels leftward (rotated: rightward).
        over_forward.push_back(under_right ? !over_right : over_right);
        at[k] = upper_out;
        at[k + 1] = lower_out;
        break;
      }
    }
  }
  std::map<int, int> rename;
  std::vector<bool> used(parent.size(), false);
  for (auto& x : raw)
    for (int& e : x) {
      e = find(e);
      used[static_cast<std::size_t>(e)] = true;
    }
  LinkDiagram d;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    PlanarCrossing pc;
    pc.edges = raw[i];
    pc.over_forward = over_forward[i];
    d.crossings.push_back(pc);
  }
  std::vector<Slots> xs = raw;
  compact_edges(xs);
  for (std::size_t i = 0; i < xs.size(); ++i) d.crossings[i].edges = xs[i];
  for (std::size_t r = 0; r < parent.size(); ++r)
    if (find(static_cast<int>(r)) == static_cast<int>(r) && !used[r]) ++d.free_loops;
  return d;
}

LinkDiagram mirror(const LinkDiagram& d) {
  LinkDiagram out = d;
  for (auto& x : out.crossings) {
    if (x.over_forward) std::rotate(x.edges.begin(), x.edges.begin() + 1, x.edges.end());
    else std::rotate(x.edges.begin(), x.edges.begin() + 3, x.edges.end());
    x.over_forward = !x.over_forward;
  }
  return out;
}

LinkDiagram connected_sum(const LinkDiagram& a, const LinkDiagram& b) {
  if (a.component_count() != 1 || b.component_count() != 1)
    throw Error(ErrorKind::MultiComponent, "connected sum needs two knot diagrams");
  if (a.crossings.empty()) return b;
  if (b.crossings.empty()) return a;
  LinkDiagram out = a;
  const int offset = a.edge_count();
  for (auto x : b.crossings) {
    for (int& e : x.edges) e += offset;
    out.crossings.push_back(x);
  }
  // Swap the heads of edge 0 of `a` and edge 0 of `b`.
  auto head_slot = [](const PlanarCrossing& x, int e) {
    for (int s = 0; s < 4; ++s) {
      bool incoming = s == 0 || (s == 1 && x.over_forward) || (s == 3 && !x.over_forward);
      if (incoming && x.edges[static_cast<std::size_t>(s)] == e) return s;
    }
    return -1;
  };
  const int ea = 0;
  const int eb = offset;
  for (auto& x : out.crossings) {
    int s = head_slot(x, ea);
    int t = head_slot(x, eb);
    if (s >= 0 && t < 0) {
      x.edges[static_cast<std::size_t>(s)] = eb;
    } else if (t >= 0 && s < 0) {
      x.edges[static_cast<std::size_t>(t)] = ea;
    }
  }
  return out;
}

SkeinOptions default_skein_options() {
  SkeinOptions opts;
  if (const char* env = std::getenv("LEGFRONT_MAX_CROSSINGS")) {
    try {
      opts.max_crossings = std::stoi(env);
    } catch (const std::exception&) {
      throw Error(ErrorKind::InvalidArgument, std::string("bad LEGFRONT_MAX_CROSSINGS: ") + env);
    }
  }
  return opts;
}

PolyAZ dubrovnik_regular(const LinkDiagram& d, SkeinOptions opts) {
  check_cap(d.crossing_count(), opts);
  if (!is_well_formed(d)) throw Error(ErrorKind::InvalidArgument, "malformed link diagram");
  DubrovnikEngine engine;
  std::vector<Slots> xs = skeleton_of(d).xs;
  if (xs.empty() && d.free_loops == 0) throw Error(ErrorKind::EmptyDiagram, "empty diagram");
  return engine.eval(std::move(xs), d.free_loops);
}

PolyAZ kauffman_polynomial(const LinkDiagram& d, SkeinOptions opts) {
  return a_power(-d.writhe()) * dubrovnik_regular(d, opts);
}

int kauffman_bound(const PolyAZ& kauffman) { return -kauffman.max_degree(kVarA) - 1; }

int kauffman_bound(const LinkDiagram& d, SkeinOptions opts) { return kauffman_bound(kauffman_polynomial(d, opts)); }

PolyZ conway_polynomial(const LinkDiagram& d, SkeinOptions opts) {
  check_cap(d.crossing_count(), opts);
  if (!is_well_formed(d)) throw Error(ErrorKind::InvalidArgument, "malformed link diagram");
  Skeleton s = skeleton_of(d);
  if (s.xs.empty() && d.free_loops == 0) throw Error(ErrorKind::EmptyDiagram, "empty diagram");
  ConwayEngine engine;
  return engine.eval(std::move(s.xs), std::move(s.over_forward), d.free_loops);
}

std::int64_t alexander_second_derivative(const PolyZ& conway) { return 2 * conway.coefficient({2}); }

std::int64_t alexander_second_derivative(const LinkDiagram& d, SkeinOptions opts) {
  return alexander_second_derivative(conway_polynomial(d, opts));
}

}  // namespace legfront
