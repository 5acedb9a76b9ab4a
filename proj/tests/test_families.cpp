#include "doctest.h"

#include "legfront/cabling.hpp"
#include "legfront/error.hpp"
#include "legfront/families.hpp"

using namespace legfront;

TEST_CASE("maximal tb of K_m") {
  CHECK(maxtb_K_m(0) == -2);
  CHECK(maxtb_K_m(3) == -8);
  try {
    maxtb_K_m(-1);
    FAIL("accepted m = -1");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::OutOfDomain);
    CHECK(std::string(e.what()).find("behave") != std::string::npos);
  }
}

TEST_CASE("maximal tb of K_mn") {
  CHECK(maxtb_K_mn(0, 1) == -2);
  CHECK(maxtb_K_mn(2, 3) == -20);
  CHECK(maxtb_K_mn(5, 2) == -25);
  for (int m = 0; m <= 20; ++m) CHECK(maxtb_K_mn(m, 1) == maxtb_K_m(m));
  CHECK_THROWS_AS(maxtb_K_mn(-1, 2), Error);
  CHECK_THROWS_AS(maxtb_K_mn(0, 0), Error);
}

TEST_CASE("cabling consistency") {
  // Hand arithmetic for the smallest two cases.
  CHECK(predicted_cable_tb(-2, 2, -1) == -5);
  CHECK(predicted_cable_tb(-4, 2, -1) == -9);
  for (int m = 0; m <= 50; ++m)
    for (int n = 1; n <= 50; ++n) CHECK(predicted_cable_tb(-2 * m - 2, n, -1) == -2 * m * n - 3 * n + 1);
  ConsistencyReport r = cabling_consistency(50, 50);
  CHECK(r.ok());
  CHECK(r.cases == 51 * 50);
  CHECK(serialize(r).rfind("family v1\n", 0) == 0);
  CHECK(cabling_consistency(0, 1).cases == 1);
}

TEST_CASE("Stein criterion") {
  CHECK(stein_criterion(-3, -2) == SteinVerdict::SteinConstructible);
  CHECK(stein_criterion(-2, -2) == SteinVerdict::CriterionSilent);
  CHECK(std::string(to_string(SteinVerdict::SteinConstructible)) == "Stein-constructible");
  CHECK(std::string(to_string(SteinVerdict::CriterionSilent)) == "criterion silent");
  for (int m = 0; m <= 10; ++m)
    for (int n = 2; n <= 10; ++n) CHECK(stein_criterion(-n, maxtb_K_mn(m, n)) == SteinVerdict::CriterionSilent);
}

TEST_CASE("Stein gap") {
  CHECK(stein_gap(0, 2) == 3);
  CHECK(stein_gap(1, 2) == 7);
  for (int m = 0; m <= 20; ++m)
    for (int n = 2; n <= 20; ++n) {
      CHECK(stein_gap(m, n) == -n - maxtb_K_mn(m, n));
      CHECK(stein_gap(m, n) >= 3);
      CHECK(stein_gap(m + 1, n) - stein_gap(m, n) == 2 * n);
    }
  CHECK_THROWS_AS(stein_gap(0, 1), Error);
  CHECK_THROWS_AS(stein_gap(-1, 3), Error);
}

TEST_CASE("family blocks") {
  CHECK(family_block("maxtb_K_mn", "m 2, n 3", "-2mn - 3n + 1", "-20") ==
        "family v1\nname maxtb_K_mn\ninputs m 2, n 3\nformula -2mn - 3n + 1\nvalue -20\n");
}
