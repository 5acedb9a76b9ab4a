#include "doctest.h"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <random>

#include "fronts.hpp"
#include "legfront/error.hpp"
#include "legfront/skein.hpp"
#include "oracles.hpp"

using namespace legfront;
using fixtures::figure_eight;
using fixtures::left_trefoil;
using fixtures::trefoil;
using fixtures::unknot;

namespace {

LinkDiagram diagram(const FrontDiagram& f) { return to_link_diagram(orient(f)); }

PolyZ z_power(int k) { return PolyZ::variable(0, k); }

/// K(a, z) -> K(1/a, -z).
PolyAZ mirror_substitute(const PolyAZ& p) {
  PolyAZ out;
  for (auto [e, c] : p.terms()) out += PolyAZ::monomial(e[kVarZ] % 2 == 0 ? c : -c, {-e[kVarA], e[kVarZ]});
  return out;
}

/// Renumbers crossings and edges at random.
LinkDiagram shuffled(const LinkDiagram& d, std::mt19937& rng) {
  LinkDiagram out = d;
  std::shuffle(out.crossings.begin(), out.crossings.end(), rng);
  std::vector<int> relabel(static_cast<std::size_t>(d.edge_count()));
  std::iota(relabel.begin(), relabel.end(), 0);
  std::shuffle(relabel.begin(), relabel.end(), rng);
  for (PlanarCrossing& x : out.crossings)
    for (int& e : x.edges) e = relabel[static_cast<std::size_t>(e)];
  return out;
}

/// Half the signed count of crossings between two different components.
int linking_number(const OrientedFront& o) {
  const StrandLayout& s = o.strands();
  int total = 0;
  for (int c : o.front().columns_of(EventKind::Crossing)) {
    int level = o.front()[c].level;
    int a = s.arc_at(c, level);
    int b = s.arc_at(c, level + 1);
    if (s.arc_component[static_cast<std::size_t>(a)] != s.arc_component[static_cast<std::size_t>(b)])
      total += crossing_sign(o, c);
  }
  return total / 2;
}

}  // namespace

TEST_CASE("planar diagrams of fronts are well formed") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    LinkDiagram d = diagram(oracle::random_front(rng, trial % 10));
    CHECK(is_well_formed(d));
    CHECK(is_well_formed(mirror(d)));
  }
}

TEST_CASE("Conway polynomials against Seifert matrices") {
  PolyZ tre = oracle::alexander_to_conway(oracle::seifert_alexander({{-1, 1}, {0, -1}}));
  PolyZ fig = oracle::alexander_to_conway(oracle::seifert_alexander({{-1, 1}, {0, 1}}));
  CHECK(tre == PolyZ{1} + z_power(2));
  CHECK(fig == PolyZ{1} - z_power(2));
  CHECK(conway_polynomial(diagram(trefoil())) == tre);
  CHECK(conway_polynomial(diagram(left_trefoil())) == tre);
  CHECK(conway_polynomial(diagram(figure_eight())) == fig);
  CHECK(conway_polynomial(diagram(unknot())) == PolyZ{1});
  CHECK(alexander_second_derivative(diagram(trefoil())) == 2);
  CHECK(alexander_second_derivative(diagram(figure_eight())) == -2);
  CHECK(alexander_second_derivative(PolyZ{1} + PolyZ{3} * z_power(2) + z_power(4)) == 6);
}

TEST_CASE("Conway polynomials of two-component links carry the linking number") {
  std::mt19937 rng(17);
  int links = 0;
  for (int trial = 0; trial < 600 && links < 60; ++trial) {
    FrontDiagram f = oracle::random_front(rng, trial % 9, 6);
    if (components(f).count != 2) continue;
    OrientedFront o = orient(f);
    PolyZ n = conway_polynomial(to_link_diagram(o));
    CHECK(n.coefficient({0}) == 0);
    CHECK(n.coefficient({1}) == linking_number(o));
    ++links;
  }
  CHECK(links >= 30);
}

TEST_CASE("Hopf link and unlinks") {
  FrontDiagram hopf({left_cusp(1), left_cusp(3), crossing(2), crossing(2), right_cusp(3), right_cusp(1)});
  OrientedFront o = orient(hopf);
  CHECK(conway_polynomial(to_link_diagram(o)) == -z_power(1));
  CHECK(conway_polynomial(to_link_diagram(o.reversed_component(1))) == z_power(1));

  FrontDiagram two({left_cusp(1), right_cusp(1), left_cusp(1), right_cusp(1)});
  PolyAZ a = PolyAZ::variable(kVarA);
  PolyAZ ainv = PolyAZ::variable(kVarA, -1);
  PolyAZ zinv = PolyAZ::variable(kVarZ, -1);
  PolyAZ delta = (a - ainv) * zinv + PolyAZ{1};
  CHECK(kauffman_polynomial(diagram(two)) == delta);
  CHECK(conway_polynomial(diagram(two)) == PolyZ{});
  FrontDiagram nested({left_cusp(1), left_cusp(2), right_cusp(2), right_cusp(1)});
  CHECK(kauffman_polynomial(diagram(nested)) == delta);
  CHECK(kauffman_polynomial(diagram(unknot())) == PolyAZ{1});
}

TEST_CASE("Kauffman bounds of the basic knots") {
  CHECK(kauffman_bound(diagram(unknot())) == -1);
  CHECK(kauffman_bound(diagram(trefoil())) == 1);
  CHECK(kauffman_bound(diagram(left_trefoil())) == -6);
  CHECK(kauffman_bound(diagram(figure_eight())) == -3);
  CHECK(kauffman_bound(diagram(mirror(trefoil()))) == -6);
}

TEST_CASE("Kauffman polynomial ignores stabilization and orientation reversal") {
  for (const FrontDiagram& f : {trefoil(), figure_eight(), left_trefoil()}) {
    OrientedFront o = orient(f);
    PolyAZ k = kauffman_polynomial(to_link_diagram(o));
    CHECK(kauffman_polynomial(to_link_diagram(o.reversed())) == k);
    OrientedFront s = stabilize(o, StabilizationSign::Negative, {2, 1});
    CHECK(kauffman_polynomial(to_link_diagram(s)) == k);
    CHECK(kauffman_bound(k) == kauffman_bound(to_link_diagram(s)));
  }
}

TEST_CASE("mirror image substitutes a -> 1/a, z -> -z") {
  std::mt19937 rng(8);
  for (int trial = 0; trial < 60; ++trial) {
    LinkDiagram d = diagram(oracle::random_front(rng, trial % 9, 6));
    LinkDiagram m = mirror(d);
    CHECK(m.writhe() == -d.writhe());
    CHECK(kauffman_polynomial(m) == mirror_substitute(kauffman_polynomial(d)));
    CHECK(dubrovnik_regular(m) == mirror_substitute(dubrovnik_regular(d)));
  }
}

TEST_CASE("connected sums multiply") {
  std::pair<FrontDiagram, FrontDiagram> pairs[] = {
      {trefoil(), trefoil()}, {trefoil(), figure_eight()}, {left_trefoil(), unknot()}};
  for (const auto& [x, y] : pairs) {
    LinkDiagram a = diagram(x);
    LinkDiagram b = diagram(y);
    LinkDiagram s = connected_sum(a, b);
    CHECK(is_well_formed(s));
    CHECK(kauffman_polynomial(s) == kauffman_polynomial(a) * kauffman_polynomial(b));
    CHECK(conway_polynomial(s) == conway_polynomial(a) * conway_polynomial(b));
  }
}

TEST_CASE("invariants do not depend on labels") {
  std::mt19937 rng(21);
  for (int trial = 0; trial < 60; ++trial) {
    LinkDiagram d = diagram(oracle::random_front(rng, trial % 9, 6));
    LinkDiagram e = shuffled(d, rng);
    CHECK(is_well_formed(e));
    CHECK(kauffman_polynomial(e) == kauffman_polynomial(d));
    CHECK(conway_polynomial(e) == conway_polynomial(d));
  }
}

TEST_CASE("crossing cap") {
  LinkDiagram d = diagram(figure_eight());
  SkeinOptions tight;
  tight.max_crossings = 5;
  try {
    (void)kauffman_polynomial(d, tight);
    FAIL("expected the cap to trip");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::CrossingCap);
    CHECK(std::string(e.what()) == "diagram has 7 crossings, cap is 5");
  }
  CHECK_THROWS_AS(conway_polynomial(d, tight), Error);

  ::setenv("LEGFRONT_MAX_CROSSINGS", "3", 1);
  CHECK(default_skein_options().max_crossings == 3);
  ::setenv("LEGFRONT_MAX_CROSSINGS", "many", 1);
  CHECK_THROWS_AS(default_skein_options(), Error);
  ::unsetenv("LEGFRONT_MAX_CROSSINGS");
  CHECK(default_skein_options().max_crossings == SkeinOptions{}.max_crossings);
}
