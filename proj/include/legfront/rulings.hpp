#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "legfront/front.hpp"

namespace legfront {

/// Sorted, duplicate-free list of crossing columns.
using SwitchSet = std::vector<int>;

/// The host front with the crossings of a switch set smoothed.
struct SmoothedDiagram {
  FrontDiagram host;
  SwitchSet switches;
  std::vector<bool> smoothed;  // per column
  StrandLayout strands;        // layout of the smoothed diagram
  int component_count() const { return strands.component_count; }
};

/// Throws if `switches` names a column that is not a crossing.
SmoothedDiagram smooth(const FrontDiagram& front, SwitchSet switches);

enum class RulingCondition {
  None,
  Eye,         // a component of the smoothed diagram is not a single eye
  SelfCrossing,
  Distinct,    // a switch whose two strands lie on one component
  Normality,
};

const char* to_string(RulingCondition c);

struct RulingVerdict {
  bool ok = false;
  RulingCondition condition = RulingCondition::None;
  int column = -1;
  std::string message;
  explicit operator bool() const { return ok; }
};

/// Checks the switch set against the definition directly on the smoothed
/// diagram: every component has exactly one left cusp and no self-crossing,
/// every switch meets two components, in one of the three normal
/// configurations. Works for links. Throws on a non-crossing column.
RulingVerdict is_ruling(const FrontDiagram& front, const SwitchSet& switches);

/// All rulings, found by a left-to-right sweep that carries the eye pairing
/// of the live strands and prunes at the first failing column. Sorted
/// lexicographically.
std::vector<SwitchSet> enumerate_rulings(const FrontDiagram& front);

/// Number of rulings, counted by the same sweep with memoized states.
std::uint64_t count_rulings(const FrontDiagram& front);

/// Reference enumeration: is_ruling over all 2^c subsets. Refuses more than
/// `max_crossings` crossings.
std::vector<SwitchSet> brute_force_rulings(const FrontDiagram& front, int max_crossings = 20);

/// One eye of a ruling: the component of the smoothed diagram born at
/// `left_column` and dying at `right_column`. lower/upper hold the 1-based
/// levels of its two strands in the gaps before columns left+1 .. right.
struct Eye {
  int left_column = -1;
  int right_column = -1;
  std::vector<int> lower;
  std::vector<int> upper;

  int lower_level_before(int column) const { return lower.at(static_cast<std::size_t>(column - left_column - 1)); }
  int upper_level_before(int column) const { return upper.at(static_cast<std::size_t>(column - left_column - 1)); }
};

struct Ruling {
  SwitchSet switches;
  std::vector<Eye> eyes;  // ordered by left cusp column
};

/// Builds the eye records; throws Error(InvalidArgument) when the switch set
/// is not a ruling.
Ruling make_ruling(const FrontDiagram& front, const SwitchSet& switches);

struct MaxTbCertificate {
  OrientedFront front;
  Ruling ruling;
  int certified_value = 0;
};

/// A knot front carrying a ruling has maximal tb among all fronts of its
/// knot type; the certificate records tb(front) with the lexicographically
/// first ruling. Empty when the front has no ruling, which says nothing about
/// the knot. Throws on links.
std::optional<MaxTbCertificate> maxtb_certificate(const OrientedFront& front);

/// Rechecks a certificate from scratch.
bool verify(const MaxTbCertificate& cert);

/// `[2 3 4]`, or `[]` for the empty set.
std::string format_switches(const SwitchSet& s);
/// Accepts `2,4`, `2 4`, `[2 4]`, `[]` or an empty string. Sorts and dedups.
SwitchSet parse_switches(std::string_view text);

/// `rulings v1`, a `count` line and one switch list per line.
std::string serialize_rulings(const std::vector<SwitchSet>& rulings);
/// `certificate v1`, value, switches, then the front v1 block.
std::string serialize(const MaxTbCertificate& cert);

}  // namespace legfront
