// edgedepth command-line interface.
#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "edgedepth/catalog.hpp"
#include "edgedepth/named.hpp"
#include "edgedepth/parallel.hpp"
#include "edgedepth/report.hpp"

using namespace edgedepth;

namespace {

constexpr int kInputError = 1;
constexpr int kFound = 2;

struct Input {
  std::string path;
  std::string format = "graph6";
  std::vector<std::string> g6;
  std::vector<std::string> named;
};

// complete:N cycle:N path:N star:N triangle-tail:S cone-pendant triangle-fork
Graph named_graph(const std::string& spec) {
  auto colon = spec.find(':');
  std::string name = spec.substr(0, colon);
  int arg = 0;
  if (colon != std::string::npos) arg = std::stoi(spec.substr(colon + 1));
  if (name == "complete") return named::complete(arg);
  if (name == "cycle") return named::cycle(arg);
  if (name == "path") return named::path(arg);
  if (name == "star") return named::star(arg);
  if (name == "triangle-tail") return named::triangle_with_tail(arg);
  if (name == "cone-pendant") return named::cone_with_pendant();
  if (name == "triangle-fork") return named::triangle_with_fork();
  throw CatalogError(0, "unknown named graph '" + spec + "'");
}

std::vector<Graph> load(const Input& in) {
  std::vector<Graph> out;
  for (const auto& s : in.g6) {
    Graph g = from_graph6(s);
    if (g.has_isolated_vertices()) throw CatalogError(0, "graph '" + s + "' has isolated vertices");
    out.push_back(g);
  }
  for (const auto& s : in.named) out.push_back(named_graph(s));
  if (!in.path.empty()) {
    const CatalogFormat f = parse_catalog_format(in.format);
    Catalog c;
    if (in.path == "-") {
      c = parse_catalog(std::cin, f);
    } else {
      c = ingest_catalog(in.path, f);
    }
    for (const auto& w : c.warnings) std::cerr << "warning: " << w << '\n';
    for (auto& g : c.graphs) out.push_back(std::move(g));
  }
  if (out.empty()) throw CatalogError(0, "no input graphs (give a catalog file, --g6 or --named)");
  return out;
}

void emit(const std::string& text, const std::string& out) {
  if (out.empty() || out == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(out);
  if (!f) throw CatalogError(0, "cannot write '" + out + "'");
  f << text;
}

void add_input(CLI::App* sub, Input& in) {
  sub->add_option("input", in.path, "Catalog file, or - for stdin");
  sub->add_option("--format", in.format, "Catalog format")->check(CLI::IsMember({"graph6", "edgelist"}));
  sub->add_option("--g6", in.g6, "Inline graph6 string");
  sub->add_option("--named", in.named,
                  "complete:N, cycle:N, path:N, star:N, triangle-tail:S, cone-pendant, triangle-fork");
}

Json parameters(const AnalyzeOptions& opt) {
  Json p{{"with_oracle", opt.with_oracle}, {"field", opt.prime}};
  p["t_max"] = opt.t_max > 0 ? Json(opt.t_max) : Json("auto");
  return p;
}

bool any_inconsistent(const Json& results) {
  for (const auto& r : results) {
    if (r.contains("checks")) {
      for (const auto& c : r["checks"]) {
        if (!c["consistent"].get<bool>()) return true;
      }
    }
    if (r.contains("profile")) {
      for (const char* k : {"ordinary", "symbolic"}) {
        for (const auto& c : r["profile"][k]) {
          if (c.contains("oracle_consistent") && !c["oracle_consistent"].get<bool>()) return true;
        }
      }
    }
  }
  return false;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Depth of powers of edge ideals: classification, theorem checks, conjecture search"};
  app.require_subcommand(0, 1);

  Input input;
  AnalyzeOptions opt;
  int jobs = 0;
  std::string out;
  std::string verify;
  bool tsv = false;
  int gen_min = 2, gen_max = 6;
  bool gen_non_bipartite = false;
  std::string gen_format = "graph6";

  app.add_option("--verify", verify, "Replay every witness in a JSON report");

  auto common = [&](CLI::App* sub, bool with_t) {
    add_input(sub, input);
    if (with_t) {
      sub->add_option("--tmax", opt.t_max, "Largest power (default s+2, or 4)")->check(CLI::Range(1, 12));
      sub->add_option("--field", opt.prime, "Prime field for the homology oracle");
      sub->add_flag("--with-oracle", opt.with_oracle, "Cross-check with Betti numbers");
    }
    sub->add_option("--jobs", jobs, "Worker threads (default EDGEDEPTH_JOBS or all cores)");
    sub->add_option("--out", out, "Output path");
  };
  auto* analyze_cmd = app.add_subcommand("analyze", "Invariants, depth profile and theorem checks");
  common(analyze_cmd, true);
  auto* profile_cmd = app.add_subcommand("profile", "Depth classes of I^t and I^(t)");
  common(profile_cmd, true);
  profile_cmd->add_flag("--tsv", tsv, "Tab-separated table instead of JSON");
  auto* check_cmd = app.add_subcommand("check-theorems", "Hypotheses and conclusions of every criterion");
  common(check_cmd, true);
  auto* search_cmd = app.add_subcommand("search-conjectures", "Counterexample search for both conjectures");
  common(search_cmd, true);
  auto* inv_cmd = app.add_subcommand("invariants", "phi*, mu*, s and related graph data");
  common(inv_cmd, false);
  auto* gen_cmd = app.add_subcommand("generate", "Connected graphs up to isomorphism");
  gen_cmd->add_option("--min-n", gen_min, "Smallest order")->check(CLI::Range(2, 9));
  gen_cmd->add_option("--max-n", gen_max, "Largest order")->check(CLI::Range(2, 9));
  gen_cmd->add_flag("--non-bipartite", gen_non_bipartite, "Only non-bipartite graphs");
  gen_cmd->add_option("--format", gen_format, "Output format")->check(CLI::IsMember({"graph6", "edgelist"}));
  gen_cmd->add_option("--out", out, "Output path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kInputError;
  }

  try {
    if (opt.prime < 2 || !is_prime(opt.prime)) throw CatalogError(0, "--field must be a prime");
    if (!verify.empty()) {
      std::ifstream f(verify);
      if (!f) throw CatalogError(0, "cannot read '" + verify + "'");
      Json doc = Json::parse(f);
      VerifyResult r = verify_report(doc);
      for (const auto& msg : r.failures) std::cerr << "FAIL " << msg << '\n';
      std::cout << (r.ok() ? "verified" : "verification failed") << " (" << r.checked << " checks, "
                << r.failures.size() << " failures)\n";
      if (app.get_subcommands().empty()) return r.ok() ? 0 : kFound;
      if (!r.ok()) return kFound;
    }
    if (app.get_subcommands().empty()) {
      if (verify.empty()) std::cout << app.help();
      return 0;
    }
    if (*gen_cmd) {
      if (gen_min > gen_max) throw CatalogError(0, "--min-n exceeds --max-n");
      std::vector<Graph> all;
      for (int n = gen_min; n <= gen_max; ++n) {
        for (auto& g : generate_connected_graphs(n, gen_non_bipartite)) all.push_back(std::move(g));
      }
      std::ostringstream s;
      if (gen_format == "graph6") {
        write_graph6_catalog(s, all);
      } else {
        write_edgelist_catalog(s, all);
      }
      emit(s.str(), out);
      return 0;
    }

    const std::vector<Graph> graphs = load(input);
    const int workers = resolve_jobs(jobs);

    if (*search_cmd) {
      const int t_max = opt.t_max > 0 ? opt.t_max : 5;
      auto reports = run_conjecture_search(graphs, t_max, workers);
      Json results = Json::array();
      bool found = false;
      for (const auto& r : reports) {
        results.push_back(to_json(r));
        found = found || r.found();
        std::cerr << r.id << ": " << r.status() << " (" << r.graphs_scanned << " graphs, " << r.premises
                  << " premises)\n";
      }
      Json doc = document("conjecture-search", {{"t_max", t_max}, {"catalog_size", graphs.size()}}, results);
      emit(doc.dump(2) + "\n", out);
      return found ? kFound : 0;
    }

    std::string kind;
    std::function<Json(const Graph&)> entry;
    if (*analyze_cmd) {
      kind = "analysis";
      entry = [&](const Graph& g) { return analyze(g, opt); };
    } else if (*profile_cmd) {
      kind = "profile";
      entry = [&](const Graph& g) { return profile_entry(g, opt); };
    } else if (*check_cmd) {
      kind = "theorem-checks";
      entry = [&](const Graph& g) { return check_entry(g, opt); };
    } else {
      kind = "invariants";
      entry = [&](const Graph& g) { return invariants_entry(g); };
    }
    auto results = parallel_map(graphs.size(), workers, [&](std::size_t i) { return entry(graphs[i]); });
    Json arr = Json::array();
    for (auto& r : results) arr.push_back(std::move(r));
    const bool bad = any_inconsistent(arr);
    if (tsv) {
      std::string text = profile_tsv_header();
      for (std::size_t i = 0; i < arr.size(); ++i) text += profile_tsv_rows(i, arr[i]);
      emit(text, out);
    } else {
      Json params = kind == "invariants" ? Json::object() : parameters(opt);
      emit(document(kind, params, arr).dump(2) + "\n", out);
    }
    return bad ? kFound : 0;
  } catch (const CatalogError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const Json::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  }
}
