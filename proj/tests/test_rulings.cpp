#include "doctest.h"

#include <random>

#include "fronts.hpp"
#include "legfront/error.hpp"
#include "legfront/front_io.hpp"
#include "legfront/rulings.hpp"
#include "legfront/skein.hpp"
#include "oracles.hpp"

using namespace legfront;
using fixtures::figure_eight;
using fixtures::left_trefoil;
using fixtures::trefoil;
using fixtures::unknot;

TEST_CASE("rulings of the trefoil") {
  std::vector<SwitchSet> expected{{2}, {2, 3, 4}, {4}};
  CHECK(enumerate_rulings(trefoil()) == expected);
  CHECK(brute_force_rulings(trefoil()) == expected);
  CHECK(oracle::oracle_rulings(trefoil()) == expected);
  CHECK(count_rulings(trefoil()) == 3);
  for (const SwitchSet& s : expected) CHECK(oracle::smoothed_components(trefoil(), s) == 2);
  CHECK(oracle::smoothed_components(trefoil(), {}) == 1);
}

TEST_CASE("the unknot has the empty ruling") {
  CHECK(enumerate_rulings(unknot()) == std::vector<SwitchSet>{{}});
  Ruling r = make_ruling(unknot(), {});
  REQUIRE(r.eyes.size() == 1);
  CHECK(r.eyes[0].left_column == 0);
  CHECK(r.eyes[0].right_column == 1);
}

TEST_CASE("is_ruling names the failing condition") {
  RulingVerdict none = is_ruling(trefoil(), {});
  CHECK_FALSE(none.ok);
  CHECK(none.condition == RulingCondition::Eye);

  RulingVerdict three = is_ruling(trefoil(), {3});
  CHECK_FALSE(three);

  RulingVerdict pair = is_ruling(trefoil(), {2, 3});
  CHECK_FALSE(pair.ok);
  CHECK(pair.message.size() > 0);

  CHECK_THROWS_AS(is_ruling(trefoil(), {1}), Error);
  CHECK_THROWS_AS(make_ruling(trefoil(), {3}), Error);
}

TEST_CASE("stabilized fronts have no rulings") {
  for (const FrontDiagram& f : {unknot(), trefoil(), figure_eight()}) {
    OrientedFront o = orient(f);
    OrientedFront s = stabilize(o, StabilizationSign::Positive, {1, 1});
    CHECK(enumerate_rulings(s.front()).empty());
    CHECK(count_rulings(s.front()) == 0);
    CHECK_FALSE(maxtb_certificate(s).has_value());
  }
  CHECK(enumerate_rulings(left_trefoil()).empty() == oracle::oracle_rulings(left_trefoil()).empty());
}

TEST_CASE("sweep, brute force and direct oracle agree on random fronts") {
  std::mt19937 rng(2024);
  int with_ruling = 0;
  for (int trial = 0; trial < 400; ++trial) {
    FrontDiagram f = oracle::random_front(rng, trial % 11, 6);
    std::vector<SwitchSet> sweep = enumerate_rulings(f);
    std::vector<SwitchSet> oracle_sets = oracle::oracle_rulings(f);
    CHECK(sweep == oracle_sets);
    CHECK(brute_force_rulings(f) == oracle_sets);
    CHECK(count_rulings(f) == oracle_sets.size());
    for (const SwitchSet& s : sweep) {
      Ruling r = make_ruling(f, s);
      CHECK(static_cast<int>(r.eyes.size()) == f.count(EventKind::LeftCusp));
      CHECK(oracle::smoothed_components(f, s) == f.count(EventKind::LeftCusp));
    }
    with_ruling += !sweep.empty();
  }
  CHECK(with_ruling > 40);
}

TEST_CASE("a ruling makes tb equal to the Kauffman bound") {
  std::mt19937 rng(99);
  int checked = 0;
  for (int trial = 0; trial < 3000 && checked < 60; ++trial) {
    FrontDiagram f = oracle::random_front(rng, 1 + trial % 9, 6);
    if (count_rulings(f) == 0) continue;
    OrientedFront o = orient(f);
    CHECK(link_tb(o) == kauffman_bound(to_link_diagram(o)));
    ++checked;
  }
  CHECK(checked >= 20);
}

TEST_CASE("tb never exceeds the Kauffman bound") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 150; ++trial) {
    FrontDiagram f = oracle::random_front(rng, trial % 9, 6);
    OrientedFront o = orient(f);
    CHECK(link_tb(o) <= kauffman_bound(to_link_diagram(o)));
  }
}

TEST_CASE("maxtb certificates") {
  auto cert = maxtb_certificate(orient(trefoil()));
  REQUIRE(cert.has_value());
  CHECK(cert->certified_value == 1);
  CHECK(cert->ruling.switches == SwitchSet{2});
  CHECK(verify(*cert));
  CHECK(serialize(*cert) == "certificate v1\nvalue 1\nswitches [2]\n" + serialize(trefoil()));

  auto f8 = maxtb_certificate(orient(figure_eight()));
  REQUIRE(f8.has_value());
  CHECK(f8->certified_value == -3);

  MaxTbCertificate forged = *cert;
  forged.certified_value = 2;
  CHECK_FALSE(verify(forged));

  OrientedFront hopf = orient(FrontDiagram({left_cusp(1), left_cusp(3), crossing(2), crossing(2), right_cusp(3),
                                            right_cusp(1)}));
  CHECK_THROWS_AS(maxtb_certificate(hopf), Error);
}

TEST_CASE("rulings work on links") {
  FrontDiagram hopf({left_cusp(1), left_cusp(3), crossing(2), crossing(2), right_cusp(3), right_cusp(1)});
  CHECK(enumerate_rulings(hopf) == oracle::oracle_rulings(hopf));
  FrontDiagram split({left_cusp(1), right_cusp(1), left_cusp(1), right_cusp(1)});
  CHECK(enumerate_rulings(split) == std::vector<SwitchSet>{{}});
}

TEST_CASE("switch set text") {
  CHECK(format_switches({}) == "[]");
  CHECK(format_switches({2, 3, 4}) == "[2 3 4]");
  CHECK(parse_switches("4,2") == SwitchSet{2, 4});
  CHECK(parse_switches("[2 4 4]") == SwitchSet{2, 4});
  CHECK(parse_switches("") == SwitchSet{});
  CHECK(parse_switches("[]") == SwitchSet{});
  CHECK_THROWS_AS(parse_switches("2,x"), Error);
  CHECK(serialize_rulings(enumerate_rulings(trefoil())) == "rulings v1\ncount 3\n[2]\n[2 3 4]\n[4]\n");
}

TEST_CASE("brute force refuses large fronts") {
  std::vector<Event> ev{left_cusp(1), left_cusp(3)};
  for (int i = 0; i < 22; ++i) ev.push_back(crossing(2));
  ev.push_back(right_cusp(3));
  ev.push_back(right_cusp(1));
  FrontDiagram big(ev);
  CHECK_THROWS_AS(brute_force_rulings(big), Error);
  CHECK(count_rulings(big) == enumerate_rulings(big).size());
}
