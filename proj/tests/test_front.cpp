#include "doctest.h"

#include <random>

#include "fronts.hpp"
#include "legfront/error.hpp"
#include "legfront/front.hpp"
#include "legfront/front_io.hpp"
#include "legfront/skein.hpp"
#include "oracles.hpp"

using namespace legfront;
using fixtures::figure_eight;
using fixtures::left_trefoil;
using fixtures::trefoil;
using fixtures::unknot;

namespace {

PolyAZ kauffman_of(const FrontDiagram& f) { return kauffman_polynomial(to_link_diagram(orient(f))); }

std::vector<FrontDiagram> knot_fronts() {
  return {unknot(), trefoil(), left_trefoil(), figure_eight(), reflect(trefoil()), mirror(trefoil())};
}

}  // namespace

TEST_CASE("validate reports the first broken invariant") {
  ValidationReport ok = validate(unknot());
  CHECK(ok.ok);
  CHECK(ok.components == 1);

  ValidationReport open = validate(FrontDiagram({left_cusp(1), crossing(1)}));
  CHECK_FALSE(open.ok);
  CHECK(open.message.find("nonzero final strand count") != std::string::npos);

  ValidationReport high = validate(FrontDiagram({left_cusp(1), crossing(2), right_cusp(1)}));
  CHECK_FALSE(high.ok);
  CHECK(high.column == 1);
  CHECK(high.message.find("out of range") != std::string::npos);

  CHECK_FALSE(validate(FrontDiagram({right_cusp(1)})).ok);
  CHECK_FALSE(validate(FrontDiagram({left_cusp(2)})).ok);
  CHECK_THROWS_AS(require_valid(FrontDiagram({left_cusp(1)})), Error);
}

TEST_CASE("empty front is valid and has no invariants") {
  FrontDiagram empty;
  ValidationReport r = validate(empty);
  CHECK(r.ok);
  CHECK(r.components == 0);
  try {
    (void)tb(orient(empty));
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::EmptyDiagram);
  }
}

TEST_CASE("component counts") {
  CHECK(components(unknot()).count == 1);
  CHECK(components(FrontDiagram({left_cusp(1), left_cusp(3), right_cusp(3), right_cusp(1)})).count == 2);
  CHECK(components(trefoil()).count == 1);
  // The inner eye only twists with itself.
  FrontDiagram nested({left_cusp(1), left_cusp(2), crossing(2), crossing(2), crossing(2), right_cusp(2), right_cusp(1)});
  CHECK(components(nested).count == 2);
  CHECK(components(nested).count == oracle::smoothed_components(nested, {}));
}

TEST_CASE("writhe, tb and rotation of small fronts") {
  OrientedFront u = orient(unknot());
  CHECK(writhe(u) == 0);
  CHECK(tb(u) == -1);
  CHECK(rotation(u) == 0);

  OrientedFront t = orient(trefoil());
  for (int c : {2, 3, 4}) CHECK(crossing_sign(t, c) == 1);
  CHECK(writhe(t) == 3);
  CHECK(tb(t) == 1);
  CHECK(rotation(t) == 0);

  CHECK(writhe(orient(mirror(trefoil()))) == -3);
  CHECK(tb(orient(figure_eight())) == -3);
  CHECK(tb(orient(left_trefoil())) == -6);
}

TEST_CASE("writhe agrees with the planar diagram's crossing signs") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    FrontDiagram f = oracle::random_front(rng, trial % 9);
    OrientedFront o = orient(f);
    LinkDiagram d = to_link_diagram(o);
    CHECK(d.writhe() == writhe(o));
    CHECK(d.crossing_count() == f.count(EventKind::Crossing));
    CHECK(d.component_count() == o.strands().component_count);
  }
}

TEST_CASE("tb and rotation are multi-component errors") {
  OrientedFront hopf = orient(FrontDiagram({left_cusp(1), left_cusp(3), crossing(2), crossing(2), right_cusp(3),
                                            right_cusp(1)}));
  CHECK_THROWS_AS(tb(hopf), Error);
  CHECK_THROWS_AS(rotation(hopf), Error);
  CHECK(link_tb(hopf) == -4);
}

TEST_CASE("orientation reversal") {
  for (const FrontDiagram& f : knot_fronts()) {
    OrientedFront o = orient(f);
    OrientedFront r = o.reversed();
    CHECK(writhe(r) == writhe(o));
    CHECK(tb(r) == tb(o));
    CHECK(rotation(r) == -rotation(o));
  }
}

TEST_CASE("tb + rotation is odd on knot fronts") {
  for (const FrontDiagram& f : knot_fronts()) {
    OrientedFront o = orient(f);
    CHECK((tb(o) + rotation(o)) % 2 != 0);
  }
  std::mt19937 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    FrontDiagram f = oracle::random_front(rng, trial % 7);
    if (components(f).count != 1) continue;
    OrientedFront o = orient(f);
    CHECK((tb(o) + rotation(o)) % 2 != 0);
  }
}

TEST_CASE("stabilization") {
  OrientedFront u = orient(unknot());
  OrientedFront plus = stabilize(u, StabilizationSign::Positive, {1, 1});
  CHECK(plus.front().count(EventKind::LeftCusp) == 2);
  CHECK(plus.front().count(EventKind::RightCusp) == 2);
  CHECK(tb(plus) == -2);
  CHECK(rotation(plus) == 1);
  CHECK(rotation(plus.reversed()) == -1);
  CHECK(rotation(stabilize(u, StabilizationSign::Negative, {1, 1})) == -1);

  for (const FrontDiagram& f : knot_fronts()) {
    OrientedFront o = orient(f);
    PolyAZ k = kauffman_of(f);
    for (int column = 1; column < f.size(); ++column) {
      int strands = static_cast<int>(o.strands().stacks[static_cast<std::size_t>(column)].size());
      for (int level = 1; level <= strands; ++level) {
        for (auto sign : {StabilizationSign::Positive, StabilizationSign::Negative}) {
          OrientedFront s = stabilize(o, sign, {column, level});
          CHECK(tb(s) == tb(o) - 1);
          CHECK(rotation(s) == rotation(o) + (sign == StabilizationSign::Positive ? 1 : -1));
          CHECK(components(s.front()).count == 1);
          CHECK(kauffman_polynomial(to_link_diagram(s)) == k);
        }
      }
    }
  }
  CHECK_THROWS_AS(stabilize(u, StabilizationSign::Positive, {0, 1}), Error);
  CHECK_THROWS_AS(stabilize(u, StabilizationSign::Positive, {1, 3}), Error);
}

TEST_CASE("reflection keeps the knot and negates rotation") {
  // Reflection swaps the two arcs of every cusp, so the arc that carries the
  // default orientation is arc 0 running leftward.
  const std::pair<int, Direction> seed[] = {{0, Direction::Leftward}};
  std::vector<FrontDiagram> fronts = knot_fronts();
  OrientedFront plus = stabilize(orient(unknot()), StabilizationSign::Positive, {1, 1});
  fronts.push_back(plus.front());
  fronts.push_back(stabilize(orient(trefoil()), StabilizationSign::Negative, {3, 2}).front());
  for (const FrontDiagram& f : fronts) {
    OrientedFront o = orient(f);
    OrientedFront r = orient_from_seeds(reflect(f), seed);
    CHECK(reflect(reflect(f)) == f);
    CHECK(writhe(r) == writhe(o));
    CHECK(tb(r) == tb(o));
    CHECK(rotation(r) == -rotation(o));
    CHECK(kauffman_of(reflect(f)) == kauffman_of(f));
  }
}

TEST_CASE("mirror negates writhe and is an involution on knot type") {
  for (const FrontDiagram& f : knot_fronts()) {
    FrontDiagram m = mirror(f);
    CHECK(validate(m).ok);
    CHECK(components(m).count == components(f).count);
    CHECK(writhe(orient(m)) == -writhe(orient(f)));
    FrontDiagram mm = mirror(m);
    CHECK(writhe(orient(mm)) == writhe(orient(f)));
    CHECK(kauffman_of(mm) == kauffman_of(f));
  }
  CHECK(kauffman_of(mirror(trefoil())) == kauffman_of(left_trefoil()));
}

TEST_CASE("connected sum of fronts") {
  FrontDiagram s = connected_sum(trefoil(), trefoil());
  OrientedFront o = orient(s);
  CHECK(components(s).count == 1);
  CHECK(tb(o) == 3);
  PolyZ t = PolyZ{1} + PolyZ::variable(0, 2);
  CHECK(conway_polynomial(to_link_diagram(o)) == t * t);
  PolyZ f8 = PolyZ{1} - PolyZ::variable(0, 2);
  CHECK(conway_polynomial(to_link_diagram(orient(connected_sum(trefoil(), figure_eight())))) == t * f8);
  CHECK(connected_sum(unknot(), trefoil()).size() == trefoil().size());
}

TEST_CASE("front v1 round trip") {
  for (const FrontDiagram& f : knot_fronts()) {
    std::string text = serialize(f);
    CHECK(parse_front(text) == f);
    CHECK(serialize(parse_front(text)) == text);
  }
  CHECK(serialize(unknot()) == "front v1\nL 1\nR 1\n");
  CHECK(serialize(FrontDiagram{}) == "front v1\n");
  FrontDiagram commented = parse_front("# a comment\n\nfront v1\nL 1   # birth\n\n  R 1\n");
  CHECK(commented == unknot());
}

TEST_CASE("front v1 parse errors carry line and column") {
  auto error_at = [](const std::string& text) {
    try {
      parse_front(text);
    } catch (const ParseError& e) {
      return std::pair<int, int>{e.line(), e.column()};
    }
    return std::pair<int, int>{0, 0};
  };
  CHECK(error_at("front v2\n").first == 1);
  CHECK(error_at("").first == 1);
  CHECK(error_at("front v1\nL 1\nQ 1\n") == std::pair<int, int>{3, 1});
  CHECK(error_at("front v1\nL\n").first == 2);
  CHECK(error_at("front v1\nL 0\n").first == 2);
  CHECK(error_at("front v1\nL 1 2\n") == std::pair<int, int>{2, 4});
  CHECK(error_at("L 1\n").first == 1);
}
