// legfront: command-line front end for the library.
#include <CLI11.hpp>
#include <json.hpp>

#include <functional>
#include <iostream>
#include <optional>
#include <string>

#include "legfront/cabling.hpp"
#include "legfront/casson.hpp"
#include "legfront/corpus.hpp"
#include "legfront/error.hpp"
#include "legfront/families.hpp"
#include "legfront/front.hpp"
#include "legfront/front_io.hpp"
#include "legfront/rulings.hpp"
#include "legfront/skein.hpp"

using namespace legfront;
using json = nlohmann::ordered_json;

namespace {

struct Output {
  std::string text;
  json data;
  int code = 0;
};

template <std::size_t N>
json poly_json(const Laurent<N>& p) {
  json terms = json::array();
  for (const auto& [e, c] : p.terms()) {
    json t;
    t["exponents"] = std::vector<int>(e.begin(), e.end());
    t["coefficient"] = c;
    terms.push_back(t);
  }
  return terms;
}

Output value_output(const std::string& key, std::int64_t v) {
  return {std::to_string(v) + "\n", json{{key, v}}};
}

json switches_json(const SwitchSet& s) { return json(s); }

struct Args {
  std::string file;
  std::string dir;
  std::optional<int> max_crossings;
  bool enumerate = false;
  bool count = false;
  std::string check;
  int p = 0;
  int q = 0;
  std::string ruling;
  bool allow_link = false;
  bool verify = false;
  std::string coeff;
  std::int64_t n = 0;
  std::int64_t k = 0;
  int m = 0;
  int nn = 0;
  int m_max = 50;
  int n_max = 50;
  int framing = 0;
  int maxtb = 0;
};

SkeinOptions skein_options(const Args& a) {
  SkeinOptions o = default_skein_options();
  if (a.max_crossings) o.max_crossings = *a.max_crossings;
  return o;
}

FrontDiagram load(const Args& a) { return read_front_file(a.file); }

OrientedFront load_valid(const Args& a) {
  FrontDiagram f = load(a);
  require_valid(f);
  return orient(f);
}

Output cmd_validate(const Args& a) {
  ValidationReport r = validate(load(a));
  Output o;
  o.data["valid"] = r.ok;
  if (r.ok) {
    o.data["components"] = r.components;
    o.text = "valid components " + std::to_string(r.components) + "\n";
  } else {
    o.data["column"] = r.column;
    o.data["message"] = r.message;
    o.text = "invalid column " + std::to_string(r.column) + ": " + r.message + "\n";
    o.code = 1;
  }
  return o;
}

Output cmd_rulings(const Args& a) {
  FrontDiagram f = load(a);
  require_valid(f);
  if (!a.check.empty()) {
    RulingVerdict v = is_ruling(f, parse_switches(a.check));
    Output o;
    o.data["ruling"] = v.ok;
    if (v.ok) {
      o.text = "ruling\n";
    } else {
      o.data["condition"] = to_string(v.condition);
      o.data["column"] = v.column;
      o.data["message"] = v.message;
      o.text = std::string("not a ruling: ") + to_string(v.condition) + " at column " + std::to_string(v.column) +
               ": " + v.message + "\n";
    }
    return o;
  }
  if (a.count) return value_output("count", static_cast<std::int64_t>(count_rulings(f)));
  auto all = enumerate_rulings(f);
  Output o;
  o.text = serialize_rulings(all);
  o.data["count"] = all.size();
  o.data["rulings"] = json::array();
  for (const auto& s : all) o.data["rulings"].push_back(switches_json(s));
  return o;
}

Output cmd_maxtb(const Args& a) {
  auto cert = maxtb_certificate(load_valid(a));
  Output o;
  if (!cert) {
    o.text = "no ruling\n";
    o.data["certificate"] = nullptr;
    return o;
  }
  o.text = serialize(*cert);
  o.data["certificate"] = {{"value", cert->certified_value}, {"switches", switches_json(cert->ruling.switches)}};
  return o;
}

Output cmd_cable(const Args& a) {
  FrontDiagram f = load(a);
  require_valid(f);
  SwitchSet ruling;
  if (!a.ruling.empty()) {
    ruling = parse_switches(a.ruling);
  } else {
    auto all = enumerate_rulings(f);
    if (all.empty()) throw Error(ErrorKind::InvalidArgument, "host front has no ruling");
    ruling = all.front();
  }
  CableOptions opts{a.allow_link};
  CabledFront c = cable_front(f, ruling, a.p, a.q, opts);
  Output o;
  o.text = serialize(c.copied.front) + serialize_copymap(c.copied.copymap);
  o.data["front"] = serialize(c.copied.front);
  o.data["copymap"] = serialize_copymap(c.copied.copymap);
  o.data["gamma"] = switches_json(c.gamma);
  o.data["phi"] = switches_json(c.phi);
  if (a.verify) {
    CableReport r = verify_cable_formula(f, ruling, a.p, a.q, opts);
    o.text += serialize(r);
    o.data["report"] = {{"t", r.params.t},
                        {"r", r.params.r},
                        {"gamma", r.gamma_size},
                        {"predicted_tb", r.predicted_tb},
                        {"measured_tb", r.measured_tb},
                        {"components", r.components},
                        {"ruling", r.ruling.ok},
                        {"agree", r.agree}};
    if (!r.agree) o.code = 1;
  }
  return o;
}

Output cmd_casson_surgery(const Args& a) {
  SurgerySpec spec{to_link_diagram(load_valid(a)), parse_surgery_coefficient(a.coeff)};
  CassonReport r = casson_surgery_report(spec, skein_options(a));
  return {serialize(r), json{{"formula", r.formula},
                             {"inputs", r.inputs},
                             {"delta2", r.delta2},
                             {"delta2_source", r.delta2_computed ? "computed" : "constant"},
                             {"value", r.value}}};
}

Output cmd_casson_X(const Args& a) {
  CassonReport r = casson_X_report(a.n, a.k);
  return {serialize(r), json{{"formula", r.formula},
                             {"inputs", r.inputs},
                             {"delta2", r.delta2},
                             {"delta2_source", "constant"},
                             {"value", r.value}}};
}

Output cmd_not_s3(const Args& a) {
  NotS3Witness w = not_s3_witness(a.n);
  std::string text = w.not_s3 ? "not S3: lambda = " + std::to_string(w.lambda) + "\n"
                              : "no witness: lambda = 0\n";
  return {text, json{{"not_s3", w.not_s3}, {"lambda", w.lambda}}};
}

Output family_output(const std::string& name, const std::string& inputs, const std::string& formula,
                     const std::string& value, json v) {
  return {value + "\n", json{{"name", name}, {"inputs", inputs}, {"formula", formula}, {"value", std::move(v)}}};
}

Output cmd_corpus(const Args& a) {
  Corpus c = load_corpus(a.dir);
  SuiteResult r = run_acceptance_suite(c, skein_options(a));
  Output o;
  for (const auto& rep : r.file_reports) o.text += rep + "\n";
  o.text += format_table(r);
  o.data["files"] = r.file_reports;
  o.data["criteria"] = json::array();
  for (const auto& crit : r.criteria)
    o.data["criteria"].push_back({{"id", crit.id}, {"title", crit.title}, {"pass", crit.pass}, {"detail", crit.detail}});
  o.data["pass"] = r.all_pass();
  if (!r.all_pass()) o.code = 1;
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations with Legendrian front diagrams"};
  app.require_subcommand(1);
  app.fallthrough();
  bool as_json = false;
  app.add_flag("--json", as_json, "structured output");
  Args a;
  std::function<Output()> action;

  auto file_cmd = [&](const std::string& name, const std::string& help, std::function<Output()> run) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("file", a.file, "front v1 file")->required();
    sub->callback([&action, run] { action = run; });
    return sub;
  };
  auto skein_cmd = [&](const std::string& name, const std::string& help, std::function<Output()> run) {
    CLI::App* sub = file_cmd(name, help, std::move(run));
    sub->add_option("--max-crossings", a.max_crossings, "crossing cap for the skein recursion");
    return sub;
  };

  file_cmd("validate", "check the structural invariants", [&] { return cmd_validate(a); });
  file_cmd("tb", "Thurston-Bennequin number", [&] { return value_output("tb", tb(load_valid(a))); });
  file_cmd("rot", "rotation number", [&] { return value_output("rotation", rotation(load_valid(a))); });
  file_cmd("components", "number of components",
           [&] { return value_output("components", components(load_valid(a).front()).count); });
  CLI::App* rulings = file_cmd("rulings", "normal rulings", [&] { return cmd_rulings(a); });
  auto* e = rulings->add_flag("--enumerate", a.enumerate, "list every ruling (default)");
  auto* cnt = rulings->add_flag("--count", a.count, "number of rulings");
  auto* chk = rulings->add_option("--check", a.check, "check one switch list, e.g. 2,4");
  e->excludes(cnt)->excludes(chk);
  cnt->excludes(chk);
  file_cmd("maxtb", "maximal-tb certificate from a ruling", [&] { return cmd_maxtb(a); });
  CLI::App* cable = file_cmd("cable", "(p, q)-cable of a front with a ruling", [&] { return cmd_cable(a); });
  cable->add_option("--p", a.p, "number of longitudinal strands")->required();
  cable->add_option("--q", a.q, "meridional winding")->required();
  cable->add_option("--ruling", a.ruling, "host ruling; defaults to the first one");
  cable->add_flag("--allow-link", a.allow_link, "permit gcd(p, q) > 1");
  cable->add_flag("--verify", a.verify, "append the formula check");

  skein_cmd("kauffman", "Kauffman polynomial", [&] {
    PolyAZ k = kauffman_polynomial(to_link_diagram(load_valid(a)), skein_options(a));
    return Output{serialize(k), json{{"vars", {"a", "z"}}, {"terms", poly_json(k)}}};
  });
  skein_cmd("kbound", "Kauffman bound on tb", [&] {
    return value_output("kauffman_bound", kauffman_bound(to_link_diagram(load_valid(a)), skein_options(a)));
  });
  skein_cmd("conway", "Conway polynomial", [&] {
    PolyZ c = conway_polynomial(to_link_diagram(load_valid(a)), skein_options(a));
    return Output{serialize(c), json{{"vars", {"z"}}, {"terms", poly_json(c)}}};
  });
  skein_cmd("alex2", "second derivative of the Alexander polynomial at 1", [&] {
    return value_output("delta2", alexander_second_derivative(to_link_diagram(load_valid(a)), skein_options(a)));
  });

  CLI::App* casson = app.add_subcommand("casson", "Casson invariants");
  casson->require_subcommand(1);
  CLI::App* surgery = casson->add_subcommand("surgery", "1/m surgery on a knot");
  surgery->add_option("file", a.file, "front v1 file")->required();
  surgery->add_option("--coeff", a.coeff, "1/<m> or -1/<m>")->required();
  surgery->add_option("--max-crossings", a.max_crossings, "crossing cap for the skein recursion");
  surgery->callback([&] { action = [&] { return cmd_casson_surgery(a); }; });
  CLI::App* cx = casson->add_subcommand("X", "boundary of X_{n,k}");
  cx->add_option("--n", a.n)->required();
  cx->add_option("--k", a.k)->required();
  cx->callback([&] { action = [&] { return cmd_casson_X(a); }; });
  CLI::App* ns3 = casson->add_subcommand("not-s3", "is the boundary of X_{n,k} distinguished from S^3");
  ns3->add_option("--n", a.n)->required();
  ns3->callback([&] { action = [&] { return cmd_not_s3(a); }; });

  CLI::App* family = app.add_subcommand("family", "closed forms for the K_m and K_{m,n} families");
  family->require_subcommand(1);
  CLI::App* km = family->add_subcommand("maxtb-km", "maximal tb of K_m");
  km->add_option("--m", a.m)->required();
  km->callback([&] {
    action = [&] {
      int v = maxtb_K_m(a.m);
      return family_output("maxtb-km", "m " + std::to_string(a.m), "-2m - 2", std::to_string(v), v);
    };
  });
  CLI::App* kmn = family->add_subcommand("maxtb-kmn", "maximal tb of K_{m,n}");
  kmn->add_option("--m", a.m)->required();
  kmn->add_option("--n", a.nn)->required();
  kmn->callback([&] {
    action = [&] {
      int v = maxtb_K_mn(a.m, a.nn);
      return family_output("maxtb-kmn", "m " + std::to_string(a.m) + ", n " + std::to_string(a.nn),
                           "-2mn - 3n + 1", std::to_string(v), v);
    };
  });
  CLI::App* cons = family->add_subcommand("consistency", "cable formula against the K_{m,n} closed form");
  cons->add_option("--m-max", a.m_max);
  cons->add_option("--n-max", a.n_max);
  cons->callback([&] {
    action = [&] {
      ConsistencyReport r = cabling_consistency(a.m_max, a.n_max);
      json fails = json::array();
      for (const auto& f : r.failures) fails.push_back({{"m", f.m}, {"n", f.n}, {"reason", f.reason}});
      return Output{serialize(r), json{{"cases", r.cases}, {"failures", fails}, {"pass", r.ok()}}, r.ok() ? 0 : 1};
    };
  });
  CLI::App* gap = family->add_subcommand("gap", "framing minus maximal tb for K_{m,n}");
  gap->add_option("--m", a.m)->required();
  gap->add_option("--n", a.nn)->required();
  gap->callback([&] {
    action = [&] {
      int v = stein_gap(a.m, a.nn);
      return family_output("gap", "m " + std::to_string(a.m) + ", n " + std::to_string(a.nn), "2mn + 2n - 1",
                           std::to_string(v), v);
    };
  });
  CLI::App* stein = family->add_subcommand("stein", "Stein criterion for a framed knot");
  stein->add_option("--framing", a.framing)->required();
  stein->add_option("--maxtb", a.maxtb)->required();
  stein->callback([&] {
    action = [&] {
      const char* v = to_string(stein_criterion(a.framing, a.maxtb));
      return family_output("stein", "framing " + std::to_string(a.framing) + ", maxtb " + std::to_string(a.maxtb),
                           "framing < maxtb", v, v);
    };
  });

  CLI::App* corpus = app.add_subcommand("corpus", "corpus checks");
  corpus->require_subcommand(1);
  CLI::App* run = corpus->add_subcommand("run", "run the acceptance suite over a corpus directory");
  run->add_option("dir", a.dir, "directory holding manifest.txt")->required();
  run->add_option("--max-crossings", a.max_crossings, "crossing cap for the skein recursion");
  run->callback([&] { action = [&] { return cmd_corpus(a); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error usage: " << e.what() << "\n";
    return 2;
  }

  try {
    Output out = action();
    if (as_json) std::cout << out.data.dump(2) << "\n";
    else std::cout << out.text;
    return out.code;
  } catch (const Error& e) {
    std::cerr << "error " << to_string(e.kind()) << ": " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error internal: " << e.what() << "\n";
    return 1;
  }
}
