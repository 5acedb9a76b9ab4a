#include "doctest.h"

#include <map>

#include "fronts.hpp"
#include "legfront/corpus.hpp"
#include "legfront/error.hpp"

using namespace legfront;

TEST_CASE("manifest lines") {
  auto entries = parse_manifest(
      "# comment\n\nunknot file=u.front components=1 tb=-1 maxtb=-1 class=unknot\n"
      "hopf   file=h.front components=2  # trailing comment\n");
  REQUIRE(entries.size() == 2);
  CHECK(entries[0].name == "unknot");
  CHECK(entries[0].file == "u.front");
  CHECK(entries[0].tb == -1);
  CHECK(entries[0].maxtb == -1);
  CHECK(entries[0].knot_class == "unknot");
  CHECK(entries[1].components == 2);
  CHECK_FALSE(entries[1].tb.has_value());
  CHECK_FALSE(entries[1].knot_class.has_value());
}

TEST_CASE("manifest errors point at the token") {
  auto where = [](const std::string& text) {
    try {
      parse_manifest(text);
    } catch (const ParseError& e) {
      return std::pair<int, int>{e.line(), e.column()};
    }
    return std::pair<int, int>{0, 0};
  };
  CHECK(where("a file=x components=1 colour=red\n") == std::pair<int, int>{1, 23});
  CHECK(where("\na file=x components=one\n").first == 2);
  CHECK(where("a components=1\n").first == 1);
  CHECK(where("a file=x\n").first == 1);
  CHECK(where("file=x components=1\n").first == 1);
  CHECK(where("a file=x components=1 tb\n") == std::pair<int, int>{1, 23});
}

TEST_CASE("the shipped corpus matches its manifest") {
  Corpus c = load_corpus(LEGFRONT_CORPUS_DIR);
  REQUIRE(c.entries.size() == c.fronts.size());
  CHECK(c.entries.size() >= 8);
  std::map<std::string, PolyAZ> kauffman_of_class;
  for (std::size_t i = 0; i < c.entries.size(); ++i) {
    const ManifestEntry& e = c.entries[i];
    CAPTURE(e.name);
    FrontFacts f = compute_facts(c.fronts[i]);
    CHECK(f.components == e.components);
    if (e.tb) CHECK(f.tb == *e.tb);
    if (e.maxtb) CHECK(f.kauffman_bound == *e.maxtb);
    if (e.knot_class) {
      auto [it, fresh] = kauffman_of_class.emplace(*e.knot_class, f.kauffman);
      if (!fresh) CHECK(it->second == f.kauffman);
    }
    CHECK(facts_report(e.name, f) == facts_report(e.name, compute_facts(c.fronts[i])));
  }
  CHECK(kauffman_of_class.at("right_trefoil") ==
        compute_facts(fixtures::trefoil()).kauffman);
  CHECK(kauffman_of_class.at("figure_eight") == compute_facts(fixtures::figure_eight()).kauffman);
  CHECK(kauffman_of_class.at("left_trefoil") != kauffman_of_class.at("right_trefoil"));
}

TEST_CASE("acceptance suite on the shipped corpus") {
  SuiteResult r = run_acceptance_suite(load_corpus(LEGFRONT_CORPUS_DIR));
  CHECK(r.criteria.size() == 10);
  for (const CriterionResult& c : r.criteria) {
    CAPTURE(c.title);
    CAPTURE(c.detail);
    CHECK(c.pass);
  }
  CHECK(r.all_pass());
  std::string table = format_table(r);
  CHECK(std::count(table.begin(), table.end(), '\n') == 10);
}

TEST_CASE("missing corpus") {
  CHECK_THROWS_AS(load_corpus("/nonexistent/corpus"), Error);
}
