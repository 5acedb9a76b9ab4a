#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "legfront/front.hpp"
#include "legfront/laurent.hpp"
#include "legfront/rulings.hpp"
#include "legfront/skein.hpp"

namespace legfront {

/// One manifest line: `<name> file=<path> components=<n> [tb=..] [maxtb=..]
/// [class=..]`. Paths are relative to the manifest's directory.
struct ManifestEntry {
  std::string name;
  std::string file;
  int components = 0;
  std::optional<int> tb;
  std::optional<int> maxtb;
  std::optional<std::string> knot_class;
};

std::vector<ManifestEntry> parse_manifest(std::string_view text);

/// A corpus directory holds `manifest.txt` and the fronts it names.
struct Corpus {
  std::string directory;
  std::vector<ManifestEntry> entries;
  std::vector<FrontDiagram> fronts;  // parallel to entries
};

Corpus load_corpus(const std::string& directory);

/// Everything the suite computes about one front.
struct FrontFacts {
  int crossings = 0;
  int components = 0;
  int writhe = 0;
  int tb = 0;  // total writhe minus right cusps
  std::optional<int> rotation;
  std::vector<SwitchSet> rulings;
  PolyAZ kauffman;
  int kauffman_bound = 0;
  PolyZ conway;
};

FrontFacts compute_facts(const FrontDiagram& front, SkeinOptions opts = default_skein_options());

/// Stable text report for one front.
std::string facts_report(const std::string& name, const FrontFacts& facts);

struct CriterionResult {
  int id = 0;
  std::string title;
  bool pass = false;
  std::string detail;     // deterministic
  double seconds = 0.0;   // wall time, kept out of the detail
};

struct SuiteResult {
  std::vector<std::string> file_reports;  // manifest order
  std::vector<CriterionResult> criteria;
  bool all_pass() const;
};

/// Runs the ten acceptance checks over a corpus. The corpus must contain
/// the entries `unknot` and `trefoil`.
SuiteResult run_acceptance_suite(const Corpus& corpus, SkeinOptions opts = default_skein_options());

/// A `pass|FAIL` line per criterion.
std::string format_table(const SuiteResult& result);

}  // namespace legfront
