#include "legfront/corpus.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>

#include "legfront/cabling.hpp"
#include "legfront/casson.hpp"
#include "legfront/error.hpp"
#include "legfront/families.hpp"
#include "legfront/front_io.hpp"

namespace legfront {

namespace {

int parse_int(std::string_view v, int line, int column) {
  try {
    std::size_t used = 0;
    int out = std::stoi(std::string(v), &used);
    if (used != v.size()) throw std::invalid_argument("trailing");
    return out;
  } catch (const std::exception&) {
    throw ParseError(line, column, "expected an integer, got '" + std::string(v) + "'");
  }
}

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

/// Collects failures for one criterion; the detail lists the first few.
class Checker {
 public:
  void check(bool ok, const std::string& what) {
    ++checks_;
    if (ok) return;
    ++failures_;
    if (failures_ <= 5) messages_.push_back(what);
  }

  CriterionResult result(int id, std::string title, const Stopwatch& clock, double limit = 0.0) {
    CriterionResult r;
    r.id = id;
    r.title = std::move(title);
    r.seconds = clock.seconds();
    std::ostringstream d;
    d << checks_ << " checks, " << failures_ << " failed";
    for (const auto& m : messages_) d << "; " << m;
    bool in_time = limit <= 0.0 || r.seconds < limit;
    if (!in_time) d << "; over the " << limit << " s limit";
    r.pass = failures_ == 0 && checks_ > 0 && in_time;
    r.detail = d.str();
    return r;
  }

 private:
  int checks_ = 0;
  int failures_ = 0;
  std::vector<std::string> messages_;
};

const FrontDiagram* find_front(const Corpus& c, const std::string& name) {
  for (std::size_t i = 0; i < c.entries.size(); ++i)
    if (c.entries[i].name == name) return &c.fronts[i];
  return nullptr;
}

bool conway_is_knotlike(const PolyZ& p) {
  if (p.coefficient({0}) != 1) return false;
  for (const auto& [e, c] : p.terms())
    if (e[0] % 2 != 0 || e[0] < 0) return false;
  return true;
}

}  // namespace

std::vector<ManifestEntry> parse_manifest(std::string_view text) {
  std::vector<ManifestEntry> out;
  std::istringstream in{std::string(text)};
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    std::string_view s = raw;
    if (auto hash = s.find('#'); hash != std::string_view::npos) s = s.substr(0, hash);
    std::vector<std::pair<std::string, int>> tokens;
    for (std::size_t i = 0; i < s.size();) {
      if (s[i] == ' ' || s[i] == '\t' || s[i] == '\r') {
        ++i;
        continue;
      }
      std::size_t j = i;
      while (j < s.size() && s[j] != ' ' && s[j] != '\t' && s[j] != '\r') ++j;
      tokens.emplace_back(std::string(s.substr(i, j - i)), static_cast<int>(i) + 1);
      i = j;
    }
    if (tokens.empty()) continue;
    ManifestEntry e;
    e.name = tokens[0].first;
    if (e.name.find('=') != std::string::npos) throw ParseError(line, tokens[0].second, "entry must start with a name");
    bool have_components = false;
    for (std::size_t k = 1; k < tokens.size(); ++k) {
      const auto& [tok, col] = tokens[k];
      auto eq = tok.find('=');
      if (eq == std::string::npos || eq == 0) throw ParseError(line, col, "expected key=value, got '" + tok + "'");
      std::string key = tok.substr(0, eq);
      std::string value = tok.substr(eq + 1);
      int vcol = col + static_cast<int>(eq) + 1;
      if (key == "file") {
        e.file = value;
      } else if (key == "components") {
        e.components = parse_int(value, line, vcol);
        have_components = true;
      } else if (key == "tb") {
        e.tb = parse_int(value, line, vcol);
      } else if (key == "maxtb") {
        e.maxtb = parse_int(value, line, vcol);
      } else if (key == "class") {
        e.knot_class = value;
      } else {
        throw ParseError(line, col, "unknown key '" + key + "'");
      }
    }
    if (e.file.empty()) throw ParseError(line, 1, "entry '" + e.name + "' has no file");
    if (!have_components) throw ParseError(line, 1, "entry '" + e.name + "' has no components");
    out.push_back(std::move(e));
  }
  return out;
}

Corpus load_corpus(const std::string& directory) {
  namespace fs = std::filesystem;
  Corpus c;
  c.directory = directory;
  fs::path manifest = fs::path(directory) / "manifest.txt";
  std::ifstream in(manifest);
  if (!in) throw Error(ErrorKind::InvalidArgument, "cannot read " + manifest.string());
  std::stringstream buf;
  buf << in.rdbuf();
  c.entries = parse_manifest(buf.str());
  for (const auto& e : c.entries) c.fronts.push_back(read_front_file((fs::path(directory) / e.file).string()));
  return c;
}

FrontFacts compute_facts(const FrontDiagram& front, SkeinOptions opts) {
  FrontFacts f;
  OrientedFront o = orient(front);
  f.crossings = front.count(EventKind::Crossing);
  f.components = o.strands().component_count;
  f.writhe = writhe(o);
  f.tb = link_tb(o);
  if (f.components == 1) f.rotation = rotation(o);
  f.rulings = enumerate_rulings(front);
  LinkDiagram d = to_link_diagram(o);
  f.kauffman = kauffman_polynomial(d, opts);
  f.kauffman_bound = kauffman_bound(f.kauffman);
  f.conway = conway_polynomial(d, opts);
  return f;
}

std::string facts_report(const std::string& name, const FrontFacts& f) {
  std::ostringstream out;
  out << "file " << name << "\n"
      << "crossings " << f.crossings << "\n"
      << "components " << f.components << "\n"
      << "writhe " << f.writhe << "\n"
      << "tb " << f.tb << "\n";
  if (f.rotation) out << "rotation " << *f.rotation << "\n";
  out << "rulings " << f.rulings.size() << "\n"
      << "kauffman " << to_string(f.kauffman) << "\n"
      << "kauffman_bound " << f.kauffman_bound << "\n"
      << "conway " << to_string(f.conway) << "\n";
  return out.str();
}

bool SuiteResult::all_pass() const {
  for (const auto& c : criteria)
    if (!c.pass) return false;
  return !criteria.empty();
}

SuiteResult run_acceptance_suite(const Corpus& corpus, SkeinOptions opts) {
  SuiteResult out;
  const std::size_t n = corpus.entries.size();
  std::vector<FrontFacts> facts;
  facts.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    facts.push_back(compute_facts(corpus.fronts[i], opts));
    out.file_reports.push_back(facts_report(corpus.entries[i].name, facts.back()));
  }
  const FrontDiagram* unknot = find_front(corpus, "unknot");
  const FrontDiagram* trefoil = find_front(corpus, "trefoil");
  if (!unknot || !trefoil) throw Error(ErrorKind::InvalidArgument, "corpus needs entries named unknot and trefoil");

  {  // 1
    Stopwatch clock;
    Checker ck;
    int used = 0;
    bool have_link = false;
    for (std::size_t i = 0; i < n; ++i) {
      if (facts[i].crossings > 12) continue;
      ++used;
      have_link = have_link || facts[i].components > 1;
      const auto& name = corpus.entries[i].name;
      auto brute = brute_force_rulings(corpus.fronts[i]);
      ck.check(facts[i].rulings == brute, name + ": sweep and brute force differ");
      ck.check(count_rulings(corpus.fronts[i]) == brute.size(), name + ": memoized count differs");
    }
    ck.check(used >= 8, "only " + std::to_string(used) + " fronts with at most 12 crossings");
    ck.check(have_link, "no link in the corpus");
    out.criteria.push_back(ck.result(1, "ruling sweep equals brute force", clock, 10.0));
  }
  {  // 2
    Stopwatch clock;
    Checker ck;
    for (std::size_t i = 0; i < n; ++i) {
      const auto& e = corpus.entries[i];
      if (facts[i].rulings.empty()) continue;
      ck.check(facts[i].tb == facts[i].kauffman_bound,
               e.name + ": tb " + std::to_string(facts[i].tb) + " but bound " + std::to_string(facts[i].kauffman_bound));
      if (e.maxtb) ck.check(*e.maxtb == facts[i].tb, e.name + ": manifest maxtb disagrees with certified tb");
      if (facts[i].components == 1) {
        auto cert = maxtb_certificate(orient(corpus.fronts[i]));
        ck.check(cert && verify(*cert) && cert->certified_value == facts[i].tb, e.name + ": certificate failed");
      }
    }
    out.criteria.push_back(ck.result(2, "fronts with a ruling reach the Kauffman bound", clock));
  }
  {  // 3
    Stopwatch clock;
    Checker ck;
    for (std::size_t i = 0; i < n; ++i) {
      const auto& e = corpus.entries[i];
      const FrontFacts& f = facts[i];
      ck.check(f.components == e.components, e.name + ": component count differs from manifest");
      if (e.tb) ck.check(f.tb == *e.tb, e.name + ": tb differs from manifest");
      if (e.maxtb) ck.check(f.kauffman_bound == *e.maxtb, e.name + ": bound differs from manifest maxtb");
      ck.check(f.tb <= f.kauffman_bound, e.name + ": tb above the Kauffman bound");
      OrientedFront o = orient(corpus.fronts[i]);
      for (auto sign : {StabilizationSign::Positive, StabilizationSign::Negative}) {
        OrientedFront s = stabilize(o, sign, StrandSite{1, 1});
        LinkDiagram d = to_link_diagram(s);
        PolyAZ k = kauffman_polynomial(d, opts);
        int bound = kauffman_bound(k);
        std::string tag = e.name + (sign == StabilizationSign::Positive ? " (+)" : " (-)");
        ck.check(link_tb(s) == f.tb - 1, tag + ": stabilized tb did not drop by one");
        ck.check(link_tb(s) < bound, tag + ": stabilized tb not below the bound");
        ck.check(k == f.kauffman && bound == f.kauffman_bound, tag + ": Kauffman polynomial changed");
        if (f.rotation) {
          int expect = *f.rotation + (sign == StabilizationSign::Positive ? 1 : -1);
          ck.check(rotation(s) == expect, tag + ": rotation did not shift by one");
        }
      }
    }
    out.criteria.push_back(ck.result(3, "tb never exceeds the Kauffman bound", clock));
  }
  {  // 4
    Stopwatch clock;
    Checker ck;
    std::vector<std::pair<std::string, const FrontDiagram*>> hosts{{"unknot", unknot}, {"trefoil", trefoil}};
    for (const auto& [name, host] : hosts) {
      auto rulings = enumerate_rulings(*host);
      ck.check(!rulings.empty(), name + ": host has no ruling");
      if (rulings.empty()) continue;
      int t = tb(orient(*host));
      for (int p = 2; p <= 4; ++p) {
        for (int q = t * p + p; q <= t * p + p + 6; ++q) {
          if (std::gcd(p, q) != 1) continue;
          std::string tag = name + " p=" + std::to_string(p) + " q=" + std::to_string(q);
          CableReport rep = verify_cable_formula(*host, rulings.front(), p, q);
          ck.check(rep.agree && rep.components == 1,
                   tag + ": predicted " + std::to_string(rep.predicted_tb) + ", measured " +
                       std::to_string(rep.measured_tb) + ", ruling " + (rep.ruling.ok ? "ok" : rep.ruling.message));
        }
      }
    }
    out.criteria.push_back(ck.result(4, "cable tb matches the formula", clock, 30.0));
  }
  {  // 5
    Stopwatch clock;
    Checker ck;
    auto rejected = [&](const FrontDiagram& host, int p, int q, const std::string& tag) {
      try {
        cable_front(host, enumerate_rulings(host).front(), p, q, CableOptions{true});
      } catch (const Error& err) {
        ck.check(err.kind() == ErrorKind::FormulaRange &&
                     std::string(err.what()).find("does not hold for q <= tb*p + p - 1") != std::string::npos,
                 tag + ": wrong rejection: " + err.what());
        return;
      }
      ck.check(false, tag + ": accepted");
    };
    rejected(*unknot, 2, -1, "unknot p=2 q=-1");
    for (const FrontDiagram* host : {unknot, trefoil}) {
      int t = tb(orient(*host));
      for (int p = 2; p <= 4; ++p)
        rejected(*host, p, t * p + p - 1, "t=" + std::to_string(t) + " p=" + std::to_string(p));
    }
    out.criteria.push_back(ck.result(5, "q below the formula range is rejected", clock));
  }
  {  // 6
    Stopwatch clock;
    Checker ck;
    ConsistencyReport rep = cabling_consistency(50, 50);
    ck.check(rep.ok(), std::to_string(rep.failures.size()) + " family cases fail");
    ck.check(rep.cases >= 2500, "only " + std::to_string(rep.cases) + " cases");
    out.criteria.push_back(ck.result(6, "family formula follows from the cable formula", clock, 1.0));
  }
  {  // 7
    Stopwatch clock;
    Checker ck;
    for (std::int64_t nn = -6; nn <= 6; ++nn)
      for (std::int64_t k = -6; k <= 6; ++k) ck.check(casson_X(nn, k) == -2 * nn, "casson_X wrong");
    for (std::int64_t k : {-7, 0, 1, 23}) {
      ck.check(casson_X(1, k) == -2, "casson_X(1, k) != -2");
      ck.check(casson_X(0, k) == 0, "casson_X(0, k) != 0");
    }
    LinkDiagram d = to_link_diagram(orient(*trefoil));
    PolyZ conway = conway_polynomial(d, opts);
    PolyZ seifert_oracle = PolyZ{1} + PolyZ::variable(0, 2);
    ck.check(conway == seifert_oracle, "trefoil Conway polynomial is " + to_string(conway));
    ck.check(alexander_second_derivative(conway) == 2, "trefoil Delta''(1) != 2");
    for (int m = 1; m <= 10; ++m) {
      SurgerySpec spec{d, -m};
      ck.check(casson_surgery(spec, opts) == -m, "trefoil -1/" + std::to_string(m) + " surgery");
    }
    out.criteria.push_back(ck.result(7, "Casson invariant closed forms", clock));
  }
  {  // 8
    Stopwatch clock;
    Checker ck;
    std::map<std::string, std::vector<std::size_t>> classes;
    for (std::size_t i = 0; i < n; ++i)
      if (corpus.entries[i].knot_class) classes[*corpus.entries[i].knot_class].push_back(i);
    for (const char* needed : {"unknot", "trefoil"}) {
      std::size_t idx = 0;
      while (idx < n && corpus.entries[idx].name != needed) ++idx;
      const auto& cls = corpus.entries[idx].knot_class;
      ck.check(cls && classes[*cls].size() >= 2, std::string(needed) + ": fewer than two diagrams in its class");
    }
    for (const auto& [cls, members] : classes) {
      const std::size_t first = members.front();
      for (std::size_t i : members) {
        const auto& name = corpus.entries[i].name;
        ck.check(facts[i].kauffman == facts[first].kauffman, cls + ": Kauffman polynomial of " + name + " differs");
        ck.check(facts[i].conway == facts[first].conway, cls + ": Conway polynomial of " + name + " differs");
      }
    }
    for (std::size_t i = 0; i < n; ++i)
      if (facts[i].components == 1)
        ck.check(conway_is_knotlike(facts[i].conway), corpus.entries[i].name + ": Conway not 1 + even powers");
    out.criteria.push_back(ck.result(8, "skein polynomials agree within each knot type", clock));
  }
  {  // 9
    Stopwatch clock;
    Checker ck;
    for (int m = 0; m <= 20; ++m) {
      for (int nn = 2; nn <= 20; ++nn) {
        std::string tag = "m=" + std::to_string(m) + " n=" + std::to_string(nn);
        ck.check(stein_criterion(-nn, maxtb_K_mn(m, nn)) == SteinVerdict::CriterionSilent, tag + ": not silent");
        int gap = stein_gap(m, nn);
        ck.check(gap == 2 * m * nn + 2 * nn - 1 && gap > 0, tag + ": gap " + std::to_string(gap));
        if (m > 0) ck.check(gap > stein_gap(m - 1, nn), tag + ": gap not increasing in m");
      }
    }
    ck.check(stein_gap(1000, 2) > 4000, "gap does not grow with m");
    out.criteria.push_back(ck.result(9, "Stein criterion stays silent with a growing gap", clock));
  }
  {  // 10
    Stopwatch clock;
    Checker ck;
    for (std::size_t i = 0; i < n; ++i) {
      const auto& name = corpus.entries[i].name;
      std::string text = serialize(corpus.fronts[i]);
      ck.check(parse_front(text) == corpus.fronts[i], name + ": parse of serialize is not the identity");
      ck.check(serialize(parse_front(text)) == text, name + ": serialization not canonical");
      ck.check(facts_report(name, compute_facts(corpus.fronts[i], opts)) == out.file_reports[i],
               name + ": second run gave a different report");
    }
    out.criteria.push_back(ck.result(10, "round trip and repeatable reports", clock));
  }
  return out;
}

std::string format_table(const SuiteResult& result) {
  std::ostringstream out;
  for (const auto& c : result.criteria)
    out << (c.pass ? "pass" : "FAIL") << "  " << c.id << ". " << c.title << ": " << c.detail << "\n";
  return out.str();
}

}  // namespace legfront
