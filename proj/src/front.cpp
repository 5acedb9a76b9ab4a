#include "legfront/front.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <sstream>

#include "legfront/error.hpp"

namespace legfront {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidFront: return "invalid-front";
    case ErrorKind::EmptyDiagram: return "empty-diagram";
    case ErrorKind::MultiComponent: return "multi-component";
    case ErrorKind::InvalidArgument: return "invalid-argument";
    case ErrorKind::Parse: return "parse";
    case ErrorKind::CrossingCap: return "crossing-cap";
    case ErrorKind::FormulaRange: return "formula-range";
    case ErrorKind::OutOfDomain: return "out-of-domain";
  }
  return "unknown";
}

int FrontDiagram::count(EventKind kind) const {
  return static_cast<int>(std::count_if(events_.begin(), events_.end(), [&](const Event& e) { return e.kind == kind; }));
}

std::vector<int> FrontDiagram::columns_of(EventKind kind) const {
  std::vector<int> out;
  for (int c = 0; c < size(); ++c)
    if (events_[static_cast<std::size_t>(c)].kind == kind) out.push_back(c);
  return out;
}

namespace {

const char* kind_name(EventKind k) {
  switch (k) {
    case EventKind::LeftCusp: return "left cusp";
    case EventKind::RightCusp: return "right cusp";
    case EventKind::Crossing: return "crossing";
  }
  return "event";
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  }
  void unite(int a, int b) { parent[static_cast<std::size_t>(find(a))] = find(b); }
};

ValidationReport check_structure(const FrontDiagram& front) {
  ValidationReport r;
  int s = 0;
  for (int c = 0; c < front.size(); ++c) {
    const Event& e = front[c];
    int lo = 1;
    int hi = e.kind == EventKind::LeftCusp ? s + 1 : s - 1;
    if (e.level < lo || e.level > hi) {
      std::ostringstream os;
      os << kind_name(e.kind) << " level " << e.level << " out of range at column " << c;
      if (hi < lo) os << " (only " << s << " strands)";
      else os << " (allowed " << lo << ".." << hi << ")";
      r.column = c;
      r.message = os.str();
      return r;
    }
    if (e.kind == EventKind::LeftCusp) s += 2;
    if (e.kind == EventKind::RightCusp) s -= 2;
  }
  if (s != 0) {
    r.column = front.size();
    r.message = "nonzero final strand count " + std::to_string(s);
    return r;
  }
  r.ok = true;
  return r;
}

}  // namespace

StrandLayout layout(const FrontDiagram& front) { return layout(front, std::vector<bool>(static_cast<std::size_t>(front.size()), false)); }

StrandLayout layout(const FrontDiagram& front, const std::vector<bool>& held) {
  require_valid(front);
  if (held.size() != static_cast<std::size_t>(front.size()))
    throw Error(ErrorKind::InvalidArgument, "smoothing mask size does not match the front");
  StrandLayout out;
  out.stacks.reserve(static_cast<std::size_t>(front.size()) + 1);
  std::vector<int> stack;
  for (int c = 0; c < front.size(); ++c) {
    out.stacks.push_back(stack);
    const Event& e = front[c];
    auto at = stack.begin() + (e.level - 1);
    switch (e.kind) {
      case EventKind::LeftCusp: {
        int lower = static_cast<int>(out.arcs.size());
        out.arcs.push_back({c, -1, false});
        out.arcs.push_back({c, -1, true});
        stack.insert(at, {lower, lower + 1});
        break;
      }
      case EventKind::RightCusp:
        out.arcs[static_cast<std::size_t>(*at)].died = c;
        out.arcs[static_cast<std::size_t>(*at)].dies_upper = false;
        out.arcs[static_cast<std::size_t>(*(at + 1))].died = c;
        out.arcs[static_cast<std::size_t>(*(at + 1))].dies_upper = true;
        stack.erase(at, at + 2);
        break;
      case EventKind::Crossing:
        if (!held[static_cast<std::size_t>(c)]) std::iter_swap(at, at + 1);
        break;
    }
    if (held[static_cast<std::size_t>(c)] && e.kind != EventKind::Crossing)
      throw Error(ErrorKind::InvalidArgument, "column " + std::to_string(c) + " is not a crossing");
  }
  out.stacks.push_back(stack);

  UnionFind uf(out.arcs.size());
  for (std::size_t a = 0; a < out.arcs.size(); a += 2) uf.unite(static_cast<int>(a), static_cast<int>(a + 1));
  for (int c = 0; c < front.size(); ++c) {
    if (front[c].kind != EventKind::RightCusp) continue;
    uf.unite(out.arc_at(c, front[c].level), out.arc_at(c, front[c].level + 1));
  }
  std::vector<int> label(out.arcs.size(), -1);
  out.arc_component.resize(out.arcs.size());
  for (std::size_t a = 0; a < out.arcs.size(); ++a) {
    int root = uf.find(static_cast<int>(a));
    if (label[static_cast<std::size_t>(root)] < 0) label[static_cast<std::size_t>(root)] = out.component_count++;
    out.arc_component[a] = label[static_cast<std::size_t>(root)];
  }
  return out;
}

ValidationReport validate(const FrontDiagram& front) {
  ValidationReport r = check_structure(front);
  if (r.ok) r.components = layout(front).component_count;
  return r;
}

void require_valid(const FrontDiagram& front) {
  ValidationReport r = check_structure(front);
  if (!r.ok) throw Error(ErrorKind::InvalidFront, "invalid front: " + r.message);
}

ComponentInfo components(const FrontDiagram& front) {
  StrandLayout l = layout(front);
  return {l.component_count, std::move(l.arc_component)};
}

namespace {

/// The partner of an arc across its birth cusp and across its death cusp.
int birth_partner(int arc) { return arc ^ 1; }

int death_partner(const StrandLayout& l, const FrontDiagram& f, int arc) {
  const Arc& a = l.arcs[static_cast<std::size_t>(arc)];
  int level = f[a.died].level;
  return a.dies_upper ? l.arc_at(a.died, level) : l.arc_at(a.died, level + 1);
}

void require_nonempty(const FrontDiagram& f) {
  if (f.empty()) throw Error(ErrorKind::EmptyDiagram, "empty diagram");
}

void require_knot(const OrientedFront& f) {
  require_nonempty(f.front());
  if (f.strands().component_count != 1)
    throw Error(ErrorKind::MultiComponent,
                "expected a knot front, got " + std::to_string(f.strands().component_count) + " components");
}

}  // namespace

OrientedFront::OrientedFront(FrontDiagram front, std::vector<Direction> arc_directions)
    : front_(std::move(front)), layout_(layout(front_)), directions_(std::move(arc_directions)) {
  if (directions_.size() != layout_.arcs.size())
    throw Error(ErrorKind::InvalidArgument, "orientation has " + std::to_string(directions_.size()) +
                                                " directions for " + std::to_string(layout_.arcs.size()) + " arcs");
  for (std::size_t a = 0; a < directions_.size(); ++a) {
    int arc = static_cast<int>(a);
    if (directions_[a] == directions_[static_cast<std::size_t>(birth_partner(arc))] ||
        directions_[a] == directions_[static_cast<std::size_t>(death_partner(layout_, front_, arc))])
      throw Error(ErrorKind::InvalidArgument, "inconsistent orientation at arc " + std::to_string(arc));
  }
}

OrientedFront OrientedFront::reversed() const {
  std::vector<Direction> d(directions_.begin(), directions_.end());
  for (auto& x : d) x = opposite(x);
  return {front_, std::move(d)};
}

OrientedFront OrientedFront::reversed_component(int component) const {
  std::vector<Direction> d(directions_.begin(), directions_.end());
  for (std::size_t a = 0; a < d.size(); ++a)
    if (layout_.arc_component[a] == component) d[a] = opposite(d[a]);
  return {front_, std::move(d)};
}

OrientedFront orient_from_seeds(const FrontDiagram& front, std::span<const std::pair<int, Direction>> seeds) {
  StrandLayout l = layout(front);
  std::vector<std::optional<Direction>> dir(l.arcs.size());
  std::vector<int> queue;
  auto assign = [&](int arc, Direction d) {
    auto& slot = dir.at(static_cast<std::size_t>(arc));
    if (slot && *slot != d) throw Error(ErrorKind::InvalidArgument, "conflicting orientation seeds");
    if (!slot) {
      slot = d;
      queue.push_back(arc);
    }
  };
  for (auto [arc, d] : seeds) assign(arc, d);
  while (!queue.empty()) {
    int arc = queue.back();
    queue.pop_back();
    Direction d = *dir[static_cast<std::size_t>(arc)];
    assign(birth_partner(arc), opposite(d));
    assign(death_partner(l, front, arc), opposite(d));
  }
  std::vector<Direction> out;
  out.reserve(dir.size());
  for (auto& d : dir) {
    if (!d) throw Error(ErrorKind::InvalidArgument, "component without orientation seed");
    out.push_back(*d);
  }
  return {front, std::move(out)};
}

OrientedFront orient(const FrontDiagram& front) {
  StrandLayout l = layout(front);
  std::vector<std::pair<int, Direction>> seeds;
  std::vector<bool> seen(static_cast<std::size_t>(l.component_count), false);
  for (std::size_t a = 0; a < l.arcs.size(); a += 2) {
    auto comp = static_cast<std::size_t>(l.arc_component[a]);
    if (seen[comp]) continue;
    seen[comp] = true;
    seeds.emplace_back(static_cast<int>(a), Direction::Rightward);
  }
  return orient_from_seeds(front, seeds);
}

int crossing_sign(const OrientedFront& f, int column) {
  const Event& e = f.front()[column];
  if (e.kind != EventKind::Crossing)
    throw Error(ErrorKind::InvalidArgument, "column " + std::to_string(column) + " is not a crossing");
  int lower = f.strands().arc_at(column, e.level);
  int upper = f.strands().arc_at(column, e.level + 1);
  return f.direction(lower) == f.direction(upper) ? 1 : -1;
}

int writhe(const OrientedFront& f) {
  require_nonempty(f.front());
  int w = 0;
  for (int c : f.front().columns_of(EventKind::Crossing)) w += crossing_sign(f, c);
  return w;
}

int link_tb(const OrientedFront& f) { return writhe(f) - f.front().count(EventKind::RightCusp); }

int tb(const OrientedFront& f) {
  require_knot(f);
  return link_tb(f);
}

int rotation(const OrientedFront& f) {
  require_knot(f);
  int down = 0;
  int up = 0;
  const FrontDiagram& front = f.front();
  for (int c = 0; c < front.size(); ++c) {
    const Event& e = front[c];
    if (e.kind == EventKind::Crossing) continue;
    // The lower arc at the cusp decides which way the cusp is traversed.
    int lower = e.kind == EventKind::LeftCusp ? f.strands().arc_at(c + 1, e.level) : f.strands().arc_at(c, e.level);
    bool lower_right = f.direction(lower) == Direction::Rightward;
    bool is_down = e.kind == EventKind::LeftCusp ? lower_right : !lower_right;
    (is_down ? down : up) += 1;
  }
  return (down - up) / 2;
}

OrientedFront stabilize(const OrientedFront& f, StabilizationSign sign, StrandSite site) {
  const FrontDiagram& front = f.front();
  if (site.column < 0 || site.column > front.size())
    throw Error(ErrorKind::InvalidArgument, "stabilization column " + std::to_string(site.column) + " out of range");
  const auto& stack = f.strands().stacks.at(static_cast<std::size_t>(site.column));
  if (site.level < 1 || site.level > static_cast<int>(stack.size()))
    throw Error(ErrorKind::InvalidArgument, "no strand at level " + std::to_string(site.level) + " before column " +
                                                std::to_string(site.column));
  int arc = stack[static_cast<std::size_t>(site.level - 1)];
  bool rightward = f.direction(arc) == Direction::Rightward;
  bool falling = (sign == StabilizationSign::Positive) == rightward;

  std::vector<Event> events(front.events().begin(), front.events().end());
  auto at = events.begin() + site.column;
  if (falling) events.insert(at, {left_cusp(site.level), right_cusp(site.level + 1)});
  else events.insert(at, {left_cusp(site.level + 1), right_cusp(site.level)});
  FrontDiagram out(std::move(events));

  // Every old arc keeps its birth cusp, so its first piece keeps its direction.
  int cusps_before = 0;
  for (int c = 0; c < site.column; ++c) cusps_before += front[c].kind == EventKind::LeftCusp;
  std::vector<std::pair<int, Direction>> seeds;
  for (std::size_t a = 0; a < f.strands().arcs.size(); ++a) {
    int rank = static_cast<int>(a / 2);
    int new_rank = rank < cusps_before ? rank : rank + 1;
    seeds.emplace_back(2 * new_rank + static_cast<int>(a % 2), f.directions()[a]);
  }
  return orient_from_seeds(out, seeds);
}

FrontDiagram reflect(const FrontDiagram& front) {
  require_valid(front);
  std::vector<Event> events;
  int s = 0;
  for (const Event& e : front.events()) {
    switch (e.kind) {
      case EventKind::LeftCusp:
        events.push_back(left_cusp(s + 2 - e.level));
        s += 2;
        break;
      case EventKind::RightCusp:
        events.push_back(right_cusp(s - e.level));
        s -= 2;
        break;
      case EventKind::Crossing:
        events.push_back(crossing(s - e.level));
        break;
    }
  }
  return FrontDiagram(std::move(events));
}

FrontDiagram mirror(const FrontDiagram& front) {
  require_valid(front);
  std::vector<Event> events;
  for (const Event& e : front.events()) {
    if (e.kind != EventKind::Crossing) {
      events.push_back(e);
      continue;
    }
    events.push_back(left_cusp(e.level + 2));
    events.push_back(crossing(e.level + 1));
    events.push_back(right_cusp(e.level));
  }
  return FrontDiagram(std::move(events));
}

FrontDiagram connected_sum(const FrontDiagram& left, const FrontDiagram& right) {
  require_valid(left);
  require_valid(right);
  if (left.empty() || right.empty()) throw Error(ErrorKind::EmptyDiagram, "empty diagram");
  if (left[left.size() - 1] != right_cusp(1) || right[0] != left_cusp(1))
    throw Error(ErrorKind::InvalidArgument, "connected sum needs a final R 1 and an initial L 1");
  std::vector<Event> events(left.events().begin(), left.events().end() - 1);
  events.insert(events.end(), right.events().begin() + 1, right.events().end());
  return FrontDiagram(std::move(events));
}

}  // namespace legfront
