#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace legfront {

enum class EventKind : std::uint8_t { LeftCusp, RightCusp, Crossing };

/// One singular point of a front. Levels count strand positions from the
/// bottom of the current stack, starting at 1. The event's column is its
/// index in the owning diagram.
struct Event {
  EventKind kind = EventKind::LeftCusp;
  int level = 1;

  friend auto operator<=>(const Event&, const Event&) = default;
};

constexpr Event left_cusp(int level) { return {EventKind::LeftCusp, level}; }
constexpr Event right_cusp(int level) { return {EventKind::RightCusp, level}; }
constexpr Event crossing(int level) { return {EventKind::Crossing, level}; }

/// A Legendrian front in plat/Morse presentation: events read left to right,
/// each at its own column. No invariant is enforced on construction; use
/// validate() or any operation that requires a valid front.
class FrontDiagram {
 public:
  FrontDiagram() = default;
  explicit FrontDiagram(std::vector<Event> events) : events_(std::move(events)) {}

  std::span<const Event> events() const { return events_; }
  const Event& operator[](int column) const { return events_.at(static_cast<std::size_t>(column)); }
  int size() const { return static_cast<int>(events_.size()); }
  bool empty() const { return events_.empty(); }

  int count(EventKind kind) const;
  std::vector<int> columns_of(EventKind kind) const;

  friend bool operator==(const FrontDiagram&, const FrontDiagram&) = default;

 private:
  std::vector<Event> events_;
};

struct ValidationReport {
  bool ok = false;
  int column = -1;  // first offending column; size() for closure failures
  std::string message;
  int components = 0;
};

ValidationReport validate(const FrontDiagram& front);

/// Throws Error(InvalidFront) with the report message.
void require_valid(const FrontDiagram& front);

/// Maximal x-monotone piece of a strand, from the left cusp that births it to
/// the right cusp that kills it. Arc ids follow birth order: the k-th left
/// cusp births arcs 2k (lower) and 2k+1 (upper).
struct Arc {
  int born = -1;
  int died = -1;
  bool dies_upper = false;
};

/// Positions of every arc at every column of a valid front.
struct StrandLayout {
  std::vector<Arc> arcs;
  /// stacks[c] lists arc ids bottom to top just before event c;
  /// stacks[size] is the (empty) stack after the last event.
  std::vector<std::vector<int>> stacks;
  std::vector<int> arc_component;
  int component_count = 0;

  /// Arc at `level` (1-based) just before `column`.
  int arc_at(int column, int level) const { return stacks.at(column).at(level - 1); }
};

StrandLayout layout(const FrontDiagram& front);

/// Layout of the diagram in which the crossings marked in `held` are
/// smoothed: their two strands continue horizontally instead of swapping.
/// Components are computed for the smoothed diagram. `held` has one entry
/// per column; entries on non-crossing columns must be false.
StrandLayout layout(const FrontDiagram& front, const std::vector<bool>& held);

struct ComponentInfo {
  int count = 0;
  std::vector<int> arc_component;
};

ComponentInfo components(const FrontDiagram& front);

enum class Direction : std::uint8_t { Rightward, Leftward };

constexpr Direction opposite(Direction d) {
  return d == Direction::Rightward ? Direction::Leftward : Direction::Rightward;
}

/// A valid front together with a direction on every arc, consistent along
/// each component (the two arcs meeting at any cusp point opposite ways).
class OrientedFront {
 public:
  OrientedFront(FrontDiagram front, std::vector<Direction> arc_directions);

  const FrontDiagram& front() const { return front_; }
  const StrandLayout& strands() const { return layout_; }
  std::span<const Direction> directions() const { return directions_; }
  Direction direction(int arc) const { return directions_.at(static_cast<std::size_t>(arc)); }

  OrientedFront reversed() const;
  OrientedFront reversed_component(int component) const;

 private:
  FrontDiagram front_;
  StrandLayout layout_;
  std::vector<Direction> directions_;
};

/// Default orientation: on each component, the lower arc of its first left
/// cusp runs rightward.
OrientedFront orient(const FrontDiagram& front);

/// Propagates the given (arc, direction) seeds along components. Every
/// component needs at least one seed; conflicting seeds throw.
OrientedFront orient_from_seeds(const FrontDiagram& front, std::span<const std::pair<int, Direction>> seeds);

/// +1 when both strands through the crossing run the same horizontal way.
int crossing_sign(const OrientedFront& front, int column);
int writhe(const OrientedFront& front);

/// Thurston-Bennequin number of a knot front: writhe minus right cusps.
int tb(const OrientedFront& front);
/// The same count for any number of components.
int link_tb(const OrientedFront& front);
/// (down cusps - up cusps) / 2 for a knot front.
int rotation(const OrientedFront& front);

enum class StabilizationSign { Positive, Negative };

/// The strand at `level` in the gap just before event `column`
/// (column == size() is the gap after the last event, which is empty).
struct StrandSite {
  int column = 0;
  int level = 1;
};

/// Inserts a zig-zag on the chosen strand. Positive raises the rotation
/// number by one with respect to the carried orientation.
OrientedFront stabilize(const OrientedFront& front, StabilizationSign sign, StrandSite site);

/// Reflection z -> -z: level i becomes s + 1 - i. Same knot type, same tb,
/// rotation negated.
FrontDiagram reflect(const FrontDiagram& front);

/// A front of the mirror-image link: every crossing is replaced by the
/// Legendrian crossing-change tangle L(k+2) X(k+1) R(k).
FrontDiagram mirror(const FrontDiagram& front);

/// Legendrian connected sum of two knot fronts, joining the last right cusp
/// of `left` to the first left cusp of `right`. Both fronts must end, resp.
/// start, with a cusp at level 1.
FrontDiagram connected_sum(const FrontDiagram& left, const FrontDiagram& right);

}  // namespace legfront
