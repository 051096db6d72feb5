// Command-line front end: reproducible growth analyses of Coxeter
// groups from diagram files.

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "coxgrowth/error.hpp"
#include "coxgrowth/pipeline.hpp"

namespace cg = coxgrowth;
using json = nlohmann::ordered_json;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw cg::InputError("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

struct Options {
  std::string path;
  std::string format = "text";
  int k = 30;
  int oracle_k = 8;
  double tol = 1e-9;
  bool run_oracle = false;
  bool corroborate = false;
  bool dot = false;
  std::string kind = "geo";
  cg::Caps caps;
};

cg::AnalysisConfig to_config(const Options& o) {
  cg::AnalysisConfig cfg;
  cfg.K = o.k;
  cfg.tol = cg::Rat(o.tol);
  cfg.caps = o.caps;
  cfg.run_oracle = o.run_oracle;
  cfg.corroborate = o.corroborate;
  cfg.oracle_k = o.oracle_k;
  return cfg;
}

// Optional defaults file (JSON) named by COXGROWTH_CONFIG; explicit
// flags still win because CLI11 parses after these are applied.
void apply_config_file(Options& o) {
  const char* path = std::getenv("COXGROWTH_CONFIG");
  if (!path || !*path) return;
  json j = json::parse(slurp(path));
  if (j.contains("k")) o.k = j["k"].get<int>();
  if (j.contains("oracle_k")) o.oracle_k = j["oracle_k"].get<int>();
  if (j.contains("tol")) o.tol = j["tol"].get<double>();
  if (j.contains("format")) o.format = j["format"].get<std::string>();
  if (j.contains("cap_states")) o.caps.states = j["cap_states"].get<std::size_t>();
  if (j.contains("cap_sigma")) o.caps.sigma = j["cap_sigma"].get<std::size_t>();
  if (j.contains("cap_degree"))
    o.caps.field_degree = j["cap_degree"].get<unsigned>();
  if (j.contains("cap_charpoly"))
    o.caps.charpoly_dim = j["cap_charpoly"].get<int>();
  if (j.contains("cap_elements"))
    o.caps.elements = j["cap_elements"].get<std::size_t>();
}

int cmd_check(const Options& o) {
  cg::ParsedDiagram parsed = cg::parse_diagram(slurp(o.path));
  cg::CoxeterDiagram d = cg::as_coxeter(parsed);
  d.validate();
  if (const auto* g = std::get_if<cg::GeometricDiagram>(&parsed))
    std::cout << "bold+dashed subgraph connected and spanning: "
              << (g->bold_dashed_connected() ? "yes" : "no") << "\n";
  std::cout << "rank: " << d.rank << "\n";
  std::cout << "connected: " << (d.connected() ? "yes" : "no") << "\n";
  auto tree = cg::infinity_spanned(d);
  std::cout << "infinity-spanned: " << (tree ? "yes" : "no") << "\n";
  if (d.all_infinite())
    std::cout << "warning: all labels infinite (free product of Z2's)\n";
  if (tree) {
    std::vector<int> perm = cg::admissible_labelling(d, *tree);
    std::cout << "admissible labelling (vertex -> label):";
    for (int v = 0; v < d.rank; ++v)
      std::cout << " " << v + 1 << "->" << perm[v] + 1;
    std::cout << "\n";
  }
  return 0;
}

int cmd_roots(const Options& o) {
  cg::CoxeterDiagram d = cg::as_coxeter(cg::parse_diagram(slurp(o.path)));
  cg::SmallRootSet s = cg::small_roots(d, o.caps);
  if (o.format == "json") {
    json out;
    out["rank"] = s.rank();
    out["sigma_size"] = s.size();
    json roots = json::array();
    for (int r = 0; r < s.size(); ++r) {
      json coords = json::array(), dec = json::array();
      for (int k = 0; k < s.rank(); ++k) {
        coords.push_back(s.roots[r](k).exact_string());
        dec.push_back(s.roots[r](k).decimal(15));
      }
      roots.push_back(json{{"index", r}, {"coords", coords}, {"approx", dec}});
    }
    out["roots"] = roots;
    std::cout << out.dump(2) << "\n";
    return 0;
  }
  std::cout << "|Sigma| = " << s.size() << "\n";
  for (int r = 0; r < s.size(); ++r) {
    std::cout << r << ": (";
    for (int k = 0; k < s.rank(); ++k) {
      if (k) std::cout << ", ";
      std::cout << s.roots[r](k).exact_string();
    }
    std::cout << ")  ~ (";
    for (int k = 0; k < s.rank(); ++k) {
      if (k) std::cout << ", ";
      std::cout << s.roots[r](k).decimal(10);
    }
    std::cout << ")\n";
  }
  return 0;
}

int cmd_automaton(const Options& o) {
  cg::CoxeterDiagram d = cg::as_coxeter(cg::parse_diagram(slurp(o.path)));
  cg::SmallRootSet s = cg::small_roots(d, o.caps);
  cg::Automaton a;
  if (o.kind == "geo") {
    a = cg::build_geo(s, o.caps);
  } else if (o.kind == "shortlex") {
    std::vector<int> priority;
    if (auto tree = cg::infinity_spanned(d))
      priority = cg::admissible_labelling(d, *tree);
    a = cg::build_shortlex(s, priority, o.caps);
  } else {
    throw cg::InputError("unknown automaton kind: " + o.kind);
  }
  if (o.dot) {
    std::cout << cg::export_dot(a);
    return 0;
  }
  std::cout << (o.kind == "geo" ? "Geo" : "ShortLex") << " automaton: "
            << a.size() << " states over alphabet of " << a.alphabet << "\n";
  for (int st = 0; st < a.size(); ++st) {
    std::cout << "q" << st << " = {";
    for (std::size_t i = 0; i < a.states[st].size(); ++i) {
      if (i) std::cout << ",";
      std::cout << a.states[st][i];
    }
    std::cout << "}:";
    for (int i = 0; i < a.alphabet; ++i) {
      int to = a.trans(st, i);
      std::cout << " s" << i + 1 << "->"
                << (to == cg::Automaton::kFail ? std::string("Fail")
                                               : "q" + std::to_string(to));
    }
    std::cout << "\n";
  }
  return 0;
}

int cmd_growth(const Options& o) {
  cg::CoxeterDiagram d = cg::as_coxeter(cg::parse_diagram(slurp(o.path)));
  cg::SmallRootSet s = cg::small_roots(d, o.caps);
  std::vector<int> priority;
  if (auto tree = cg::infinity_spanned(d))
    priority = cg::admissible_labelling(d, *tree);
  std::vector<cg::Int> w =
      cg::count_words(cg::build_shortlex(s, priority, o.caps), o.k);
  std::vector<cg::Int> g = cg::count_words(cg::build_geo(s, o.caps), o.k);
  if (o.format == "json") {
    json jw = json::array(), jg = json::array();
    for (const auto& c : w) jw.push_back(c.get_str());
    for (const auto& c : g) jg.push_back(c.get_str());
    std::cout << json{{"k", o.k}, {"w", jw}, {"g", jg}}.dump(2) << "\n";
  } else {
    std::cout << "k,w_k,g_k\n";
    for (int k = 0; k <= o.k; ++k)
      std::cout << k << "," << w[k].get_str() << "," << g[k].get_str() << "\n";
  }
  return 0;
}

int cmd_analyze(const Options& o) {
  cg::CoxeterDiagram d = cg::as_coxeter(cg::parse_diagram(slurp(o.path)));
  cg::GrowthReport rep = cg::analyze(d, to_config(o));
  if (o.dot) {
    std::ofstream(o.path + ".shortlex.dot")
        << cg::export_dot(rep.shortlex.automaton);
    std::ofstream(o.path + ".geo.dot") << cg::export_dot(rep.geo.automaton);
    std::cerr << "wrote " << o.path << ".shortlex.dot and " << o.path
              << ".geo.dot\n";
  }
  if (o.format == "json")
    std::cout << cg::to_json(rep);
  else if (o.format == "csv")
    std::cout << cg::to_csv(rep);
  else
    std::cout << cg::to_text(rep);
  return 0;
}

int cmd_oracle(const Options& o) {
  cg::CoxeterDiagram d = cg::as_coxeter(cg::parse_diagram(slurp(o.path)));
  cg::GroupTable t = cg::bfs_group(d, o.oracle_k, o.caps);
  if (o.format == "json") {
    json jw = json::array(), jg = json::array();
    for (const auto& c : t.w) jw.push_back(c.get_str());
    for (const auto& c : t.g) jg.push_back(c.get_str());
    std::cout << json{{"k", o.oracle_k}, {"w", jw}, {"g", jg}}.dump(2) << "\n";
  } else {
    std::cout << "k,w_k,g_k\n";
    for (int k = 0; k <= o.oracle_k; ++k)
      std::cout << k << "," << t.w[k].get_str() << "," << t.g[k].get_str()
                << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  try {
    apply_config_file(o);
  } catch (const std::exception& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  }

  CLI::App app{"Growth rates of Coxeter groups via small-root automata"};
  app.require_subcommand(1);

  int rc = 0;
  auto add_common = [&](CLI::App* sub, bool needs_path = true) {
    if (needs_path)
      sub->add_option("input", o.path, "diagram file")->required();
    sub->add_option("--format", o.format, "text, json or csv");
    sub->add_option("--cap-states", o.caps.states, "automaton state cap");
    sub->add_option("--cap-sigma", o.caps.sigma, "small-root cap");
    sub->add_option("--cap-degree", o.caps.field_degree, "field degree cap");
    sub->add_option("--cap-charpoly", o.caps.charpoly_dim,
                    "charpoly dimension cap");
    sub->add_option("--cap-elements", o.caps.elements, "oracle element cap");
    return sub;
  };

  auto* check = add_common(app.add_subcommand("check", "parse and classify"));
  check->callback([&] { rc = cmd_check(o); });

  auto* roots = add_common(app.add_subcommand("roots", "small-root listing"));
  roots->callback([&] { rc = cmd_roots(o); });

  auto* autom =
      add_common(app.add_subcommand("automaton", "build one automaton"));
  autom->add_option("--kind", o.kind, "geo or shortlex");
  autom->add_flag("--dot", o.dot, "emit DOT instead of the table");
  autom->callback([&] { rc = cmd_automaton(o); });

  auto* growth = add_common(app.add_subcommand("growth", "word counts only"));
  growth->add_option("--k", o.k, "count horizon");
  growth->callback([&] { rc = cmd_growth(o); });

  auto* analyze = add_common(app.add_subcommand("analyze", "full pipeline"));
  analyze->add_option("--k", o.k, "count horizon");
  analyze->add_option("--tol", o.tol, "rate enclosure tolerance");
  analyze->add_flag("--oracle", o.run_oracle, "cross-check with the oracle");
  analyze->add_option("--oracle-k", o.oracle_k, "oracle depth");
  analyze->add_flag("--corroborate", o.corroborate,
                    "floating-point root corroboration");
  analyze->add_flag("--dot", o.dot, "also write DOT files");
  analyze->callback([&] { rc = cmd_analyze(o); });

  auto* oracle =
      add_common(app.add_subcommand("oracle", "brute-force ground truth"));
  oracle->add_option("--k", o.oracle_k, "oracle depth");
  oracle->callback([&] { rc = cmd_oracle(o); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  } catch (const cg::CapError& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return 3;
  } catch (const cg::InternalError& e) {
    std::cerr << "internal invariant violation: " << e.what() << "\n";
    return 4;
  } catch (const cg::InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  }
  return rc;
}
