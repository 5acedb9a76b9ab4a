#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "legfront/front.hpp"
#include "legfront/laurent.hpp"

namespace legfront {

/// Oriented planar diagram in PD style. Each crossing lists its four edge
/// ends counterclockwise starting from the incoming under-strand: slots 0
/// and 2 are the under-strand (0 in, 2 out), slots 1 and 3 the
/// over-strand. `over_forward` says the over-strand runs from slot 1 to 3.
/// Every edge id in [0, edge_count) appears at exactly two slots.
/// Crossingless components are counted in `free_loops`.
struct PlanarCrossing {
  std::array<int, 4> edges{};
  bool over_forward = false;

  /// +1 when the over-strand runs 3 -> 1.
  int sign() const { return over_forward ? -1 : 1; }
};

struct LinkDiagram {
  std::vector<PlanarCrossing> crossings;
  int free_loops = 0;

  int crossing_count() const { return static_cast<int>(crossings.size()); }
  int edge_count() const { return 2 * crossing_count(); }
  int writhe() const;
  int component_count() const;
};

/// Checks the slot/edge invariants and orientation coherence.
bool is_well_formed(const LinkDiagram& d);

/// The topological diagram of a front: cusps become extrema, and at each
/// crossing the strand descending left to right is on top.
LinkDiagram to_link_diagram(const OrientedFront& front);

/// Reflection through the projection plane: every crossing switched.
LinkDiagram mirror(const LinkDiagram& d);

/// Oriented connected sum of two knot diagrams, made by cutting an edge of
/// each.
LinkDiagram connected_sum(const LinkDiagram& a, const LinkDiagram& b);

struct SkeinOptions {
  int max_crossings = 14;
};

/// Default cap, read from LEGFRONT_MAX_CROSSINGS when set.
SkeinOptions default_skein_options();

/// Dubrovnik polynomial of the unoriented diagram, a regular-isotopy
/// invariant: D(X) - D(X') = z (D_A(X) - D_B(X)), a positive curl is a,
/// the unknot is 1.
PolyAZ dubrovnik_regular(const LinkDiagram& d, SkeinOptions opts = default_skein_options());

/// Oriented Kauffman (Dubrovnik) polynomial a^{-writhe} D, an invariant of the
/// oriented link; unknot -> 1.
PolyAZ kauffman_polynomial(const LinkDiagram& d, SkeinOptions opts = default_skein_options());

/// Upper bound on tb of every Legendrian representative:
/// -(max a-degree of the Kauffman polynomial) - 1.
int kauffman_bound(const LinkDiagram& d, SkeinOptions opts = default_skein_options());
int kauffman_bound(const PolyAZ& kauffman);

/// Conway polynomial from nabla(L+) - nabla(L-) = z nabla(L0), unknot -> 1.
PolyZ conway_polynomial(const LinkDiagram& d, SkeinOptions opts = default_skein_options());

/// Delta''(1) = 2 * (z^2 coefficient of the Conway polynomial).
std::int64_t alexander_second_derivative(const LinkDiagram& d, SkeinOptions opts = default_skein_options());
std::int64_t alexander_second_derivative(const PolyZ& conway);

}  // namespace legfront
