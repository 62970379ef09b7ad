// geodex: construct, verify, count within, and exhaustively search
// k-geodetic digraphs. Digraphs travel between subcommands as digraph6
// lines, so invocations compose into pipelines.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "geodex/canonical.hpp"
#include "geodex/constructions.hpp"
#include "geodex/counting.hpp"
#include "geodex/digraph6.hpp"
#include "geodex/geodecity.hpp"
#include "geodex/search.hpp"
#include "geodex/version.hpp"

namespace {

using nlohmann::json;
using namespace geodex;

constexpr int kExitOk = 0;
constexpr int kExitInvalidInput = 2;
constexpr int kExitBudgetExceeded = 3;

struct Output {
  std::string format = "json";  // json | csv | digraph6
  bool stable = false;          // zero all timing fields for byte-identical reruns
};

json make_envelope(const std::string& subcommand, const json& config, const json& payload, double wall_seconds,
                   bool stable) {
  return json{{"tool", kToolName},
              {"version", kVersion},
              {"subcommand", subcommand},
              {"config", config},
              {"payload", payload},
              {"timing", json{{"wall_seconds", stable ? 0.0 : wall_seconds}}}};
}

void print_envelope(const std::string& subcommand, const json& config, const json& payload, double wall_seconds,
                    const Output& out) {
  std::cout << make_envelope(subcommand, config, payload, wall_seconds, out.stable).dump(2) << "\n";
}

std::vector<std::pair<std::string, Digraph>> read_digraphs(const std::string& input_path) {
  std::istream* in = &std::cin;
  std::ifstream file;
  if (!input_path.empty()) {
    file.open(input_path);
    if (!file) throw std::invalid_argument("cannot open input file: " + input_path);
    in = &file;
  }
  std::vector<std::pair<std::string, Digraph>> graphs;
  std::string line;
  while (std::getline(*in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    graphs.emplace_back(line, parse_digraph6(line));
  }
  return graphs;
}

json walk_to_json(const Walk& w) { return json{{"vertices", w.vertices}, {"length", w.length()}}; }

json digraph_lines_json(const std::vector<Digraph>& graphs) {
  json arr = json::array();
  for (const Digraph& g : graphs) arr.push_back(emit_digraph6(g));
  return arr;
}

int env_threads() {
  if (const char* v = std::getenv("GEODEX_THREADS")) {
    char* end = nullptr;
    long t = std::strtol(v, &end, 10);
    if (end && *end == '\0' && t >= 1 && t <= 1024) return static_cast<int>(t);
    throw std::invalid_argument("GEODEX_THREADS must be an integer in [1,1024]");
  }
  return 1;
}

json constraints_json(const SearchConstraints& c) {
  return json{{"n", c.n},
              {"k", c.k},
              {"require_strong", c.require_strong},
              {"forbid_sources_sinks", c.forbid_sources_sinks},
              {"min_size", c.min_size ? json(*c.min_size) : json()}};
}

json census_json(const CensusRecord& r, bool stable) {
  return json{{"constraints", constraints_json(r.constraints)},
              {"max_size", r.max_size ? json(*r.max_size) : json()},
              {"class_count", r.class_count},
              {"representatives", digraph_lines_json(r.representatives)},
              {"nodes_explored", r.nodes_explored},
              {"wall_seconds", stable ? 0.0 : r.wall_seconds},
              {"complete", r.complete},
              {"status", r.status}};
}

// ---------------------------------------------------------------------------
int run_check(const Output& out, int k, const std::string& input) {
  auto t0 = std::chrono::steady_clock::now();
  json payload = json::array();
  std::string csv = "index,n,m,is_k_geodetic,witness_from,witness_to\n";
  for (std::size_t i = 0; const auto& [line, g] : read_digraphs(input)) {
    GeodecityReport rep = is_k_geodetic(g, k);
    json w;
    std::string wf = "", wt = "";
    if (rep.witness) {
      w = json{{"first", walk_to_json(rep.witness->first)}, {"second", walk_to_json(rep.witness->second)}};
      wf = std::to_string(rep.witness->first.vertices.front());
      wt = std::to_string(rep.witness->first.vertices.back());
    }
    payload.push_back(json{{"index", i},
                           {"digraph6", line},
                           {"n", g.n()},
                           {"m", g.m()},
                           {"k", k},
                           {"is_k_geodetic", rep.is_k_geodetic},
                           {"witness", rep.witness ? w : json()}});
    csv += std::to_string(i) + "," + std::to_string(g.n()) + "," + std::to_string(g.m()) + "," +
           (rep.is_k_geodetic ? "true" : "false") + "," + wf + "," + wt + "\n";
    ++i;
  }
  double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (out.format == "csv")
    std::cout << csv;
  else
    print_envelope("check", json{{"k", k}, {"input", input}, {"format", out.format}}, payload, wall, out);
  return kExitOk;
}

int run_girth(const Output& out, const std::string& input) {
  auto t0 = std::chrono::steady_clock::now();
  json payload = json::array();
  std::string csv = "index,n,m,geodetic_girth\n";
  for (std::size_t i = 0; const auto& [line, g] : read_digraphs(input)) {
    std::optional<int> gg = geodetic_girth(g);
    payload.push_back(json{{"index", i},
                           {"digraph6", line},
                           {"n", g.n()},
                           {"m", g.m()},
                           {"geodetic_girth", gg ? json(*gg) : json()}});
    csv += std::to_string(i) + "," + std::to_string(g.n()) + "," + std::to_string(g.m()) + "," +
           (gg ? std::to_string(*gg) : "unbounded") + "\n";
    ++i;
  }
  double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (out.format == "csv")
    std::cout << csv;
  else
    print_envelope("girth", json{{"input", input}, {"format", out.format}}, payload, wall, out);
  return kExitOk;
}

int run_construct(const Output& out, const std::string& family, const json& config, const ConstructionSpec& spec) {
  auto t0 = std::chrono::steady_clock::now();
  LabeledDigraph built = build_construction(spec);
  if (out.format == "digraph6") {
    std::cout << emit_digraph6(built.digraph) << "\n";
    return kExitOk;
  }
  json payload{{"family", family},
               {"n", built.digraph.n()},
               {"m", built.digraph.m()},
               {"labels", built.labels},
               {"digraph6", emit_digraph6(built.digraph)}};
  double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  print_envelope("construct", config, payload, wall, out);
  return kExitOk;
}

int run_count(const Output& out, std::optional<int> cycles, std::optional<int> paths, std::optional<int> k,
              const std::string& input) {
  auto t0 = std::chrono::steady_clock::now();
  json payload = json::array();
  std::string csv = "index,n,m,pattern,length,count,per_arc_max\n";
  for (std::size_t i = 0; const auto& [line, g] : read_digraphs(input)) {
    json item{{"index", i}, {"digraph6", line}, {"n", g.n()}, {"m", g.m()}};
    if (cycles) {
      CountReport r = count_directed_cycles(g, *cycles);
      item["cycles"] = json{{"length", r.length}, {"count", r.count.str()}, {"per_arc_max", r.per_arc_max}};
      csv += std::to_string(i) + "," + std::to_string(g.n()) + "," + std::to_string(g.m()) + ",cycles," +
             std::to_string(r.length) + "," + r.count.str() + "," + std::to_string(r.per_arc_max) + "\n";
    }
    if (paths) {
      CountReport r = count_directed_paths(g, *paths);
      item["paths"] = json{{"length", r.length}, {"count", r.count.str()}, {"per_arc_max", r.per_arc_max}};
      csv += std::to_string(i) + "," + std::to_string(g.n()) + "," + std::to_string(g.m()) + ",paths," +
             std::to_string(r.length) + "," + r.count.str() + "," + std::to_string(r.per_arc_max) + "\n";
    }
    if (k) {
      item["bounds"] = json{{"k", *k},
                            {"triangle_upper_bound", triangle_upper_bound(g.n())},
                            {"cycle_count_upper_bound", cycle_count_upper_bound(g.n(), *k).str()},
                            {"min_out_degree_within_bound", min_out_degree_bound_check(g, *k)}};
    }
    payload.push_back(std::move(item));
    ++i;
  }
  double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  json config{{"cycles", cycles ? json(*cycles) : json()},
              {"paths", paths ? json(*paths) : json()},
              {"k", k ? json(*k) : json()},
              {"input", input},
              {"format", out.format}};
  if (out.format == "csv")
    std::cout << csv;
  else
    print_envelope("count", config, payload, wall, out);
  return kExitOk;
}

int run_search(const Output& out, const SearchConstraints& c, const SearchOptions& opts) {
  CensusRecord rec = extremal_search(c, opts);
  json config{{"constraints", constraints_json(c)},
              {"threads", opts.threads},
              {"split_depth", opts.split_depth},
              {"max_nodes", opts.max_nodes},
              {"max_seconds", opts.max_seconds},
              {"checkpoint", opts.checkpoint_path},
              {"format", out.format}};
  if (out.format == "digraph6") {
    for (const Digraph& g : rec.representatives) std::cout << emit_digraph6(g) << "\n";
  } else {
    print_envelope("search", config, census_json(rec, out.stable), rec.wall_seconds, out);
  }
  return rec.complete ? kExitOk : kExitBudgetExceeded;
}

int run_table(const Output& out, int k, int n_from, int n_to, bool strong, SearchOptions opts) {
  auto t0 = std::chrono::steady_clock::now();
  std::string csv = "n,k,max_size,class_count,complete,status\n";
  json rows = json::array();
  bool all_complete = true;
  for (int n = n_from; n <= n_to; ++n) {
    SearchConstraints c;
    c.n = n;
    c.k = k;
    c.require_strong = strong;
    // Seed the size floor with a verified witness so the search only has
    // to prove maximality. The seed never changes the answer: a wrong
    // floor above the true maximum would yield an empty census, which
    // verify_extremal_witness rules out beforehand.
    json seed;
    try {
      LabeledDigraph w = g_construction(n, k);
      long long sz = w.digraph.m();
      if (verify_extremal_witness(w.digraph, c, sz)) {
        c.min_size = sz;
        seed = json{{"witness", emit_digraph6(w.digraph)}, {"size", sz}};
      }
    } catch (const std::invalid_argument&) {
      // no witness at this (n,k); search unseeded
    }
    CensusRecord rec = extremal_search(c, opts);
    all_complete = all_complete && rec.complete;
    csv += std::to_string(n) + "," + std::to_string(k) + "," +
           (rec.max_size ? std::to_string(*rec.max_size) : "") + "," + std::to_string(rec.class_count) + "," +
           (rec.complete ? "true" : "false") + "," + rec.status + "\n";
    json row = census_json(rec, out.stable);
    row["seed"] = seed;
    rows.push_back(std::move(row));
  }
  double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  json config{{"k", k},        {"n_from", n_from},
              {"strong", strong}, {"threads", opts.threads},
              {"n_to", n_to},  {"max_nodes", opts.max_nodes},
              {"max_seconds", opts.max_seconds}, {"format", out.format}};
  if (out.format == "json")
    print_envelope("table", config, rows, wall, out);
  else
    std::cout << csv;
  return all_complete ? kExitOk : kExitBudgetExceeded;
}

int run_verify(const Output& out, int k, bool strong, bool noss, std::optional<long long> min_size,
               std::optional<long long> size, const std::string& input) {
  auto t0 = std::chrono::steady_clock::now();
  json payload = json::array();
  std::string csv = "index,n,m,ok\n";
  for (std::size_t i = 0; const auto& [line, g] : read_digraphs(input)) {
    SearchConstraints c;
    c.n = g.n();
    c.k = k;
    c.require_strong = strong;
    c.forbid_sources_sinks = noss;
    c.min_size = min_size;
    long long claimed = size.value_or(g.m());
    bool ok = verify_extremal_witness(g, c, claimed);
    payload.push_back(json{{"index", i}, {"digraph6", line}, {"n", g.n()}, {"m", g.m()}, {"ok", ok}});
    csv += std::to_string(i) + "," + std::to_string(g.n()) + "," + std::to_string(g.m()) + "," +
           (ok ? "true" : "false") + "\n";
    ++i;
  }
  double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  json config{{"k", k},
              {"strong", strong},
              {"no_sources_sinks", noss},
              {"min_size", min_size ? json(*min_size) : json()},
              {"size", size ? json(*size) : json()},
              {"input", input},
              {"format", out.format}};
  if (out.format == "csv")
    std::cout << csv;
  else
    print_envelope("verify", config, payload, wall, out);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"k-geodetic digraph toolkit"};
  app.require_subcommand(1);

  Output out;
  app.add_option("--format", out.format, "Output format: json, csv, or digraph6")
      ->check(CLI::IsMember({"json", "csv", "digraph6"}));
  app.add_flag("--stable-output", out.stable, "Zero timing fields so identical configs give identical bytes");

  // check
  auto* check = app.add_subcommand("check", "Test digraph6 lines for k-geodecity, with violation witnesses");
  int check_k = 2;
  std::string check_input;
  check->add_option("--k", check_k, "Geodecity level")->required()->check(CLI::PositiveNumber);
  check->add_option("--input", check_input, "Read digraph6 lines from a file instead of stdin");

  // girth
  auto* girth = app.add_subcommand("girth", "Report the geodetic girth of digraph6 lines");
  std::string girth_input;
  girth->add_option("--input", girth_input, "Read digraph6 lines from a file instead of stdin");

  // construct
  auto* construct = app.add_subcommand("construct", "Emit a named construction");
  std::string cons_family;
  std::optional<int> cons_d, cons_k, cons_a, cons_b, cons_t, cons_r, cons_n;
  std::string cons_fixture;
  bool cons_variant = false;
  construct
      ->add_option("family", cons_family,
                   "permutation | bipartite | triangle-expansion | family-a | family-b | family-b-prime | "
                   "family-c | family-d | g | fixture")
      ->required();
  construct->add_option("--d", cons_d, "Degree (permutation)");
  construct->add_option("--k", cons_k, "Geodecity level (permutation, g)");
  construct->add_option("--a", cons_a, "First part size (bipartite)");
  construct->add_option("--b", cons_b, "Second part size (bipartite)");
  construct->add_option("--t", cons_t, "Matching size (bipartite) or family parameter t");
  construct->add_option("--r", cons_r, "Family parameter r");
  construct->add_option("--n", cons_n, "Order (g)");
  construct->add_option("--name", cons_fixture, "Fixture name: hoof | c3 | diamond | two-triangles-6");
  construct->add_flag("--variant", cons_variant, "For g: route rule-iii arcs to column 1 instead of column 2");

  // count
  auto* count = app.add_subcommand("count", "Count directed cycles/paths and report counting bounds");
  std::optional<int> count_cycles, count_paths, count_k;
  std::string count_input;
  count->add_option("--cycles", count_cycles, "Count directed cycles of this length");
  count->add_option("--paths", count_paths, "Count directed paths of this length");
  count->add_option("--k", count_k, "Geodecity level for the bound report");
  count->add_option("--input", count_input, "Read digraph6 lines from a file instead of stdin");

  // search
  auto* search = app.add_subcommand("search", "Exhaustive census of k-geodetic digraphs");
  SearchConstraints sc;
  std::optional<long long> sc_min_size;
  SearchOptions so;
  std::optional<int> so_threads;
  search->add_option("--n", sc.n, "Order")->required()->check(CLI::PositiveNumber);
  search->add_option("--k", sc.k, "Geodecity level")->required()->check(CLI::PositiveNumber);
  search->add_flag("--strong", sc.require_strong, "Restrict to strongly connected digraphs");
  search->add_flag("--no-sources-sinks", sc.forbid_sources_sinks, "Restrict to digraphs without sources or sinks");
  search->add_option("--min-size", sc_min_size, "Collect only digraphs with at least this many arcs");
  search->add_option("--threads", so_threads, "Worker threads (default: GEODEX_THREADS or 1)");
  search->add_option("--split-depth", so.split_depth, "Depth of the parallel frontier")->check(CLI::NonNegativeNumber);
  search->add_option("--max-nodes", so.max_nodes, "Node budget");
  search->add_option("--max-seconds", so.max_seconds, "Time budget in seconds");
  search->add_option("--checkpoint", so.checkpoint_path, "Checkpoint file for resumable runs");

  // table
  auto* table = app.add_subcommand("table", "Run seeded searches over a range of orders; CSV grid output");
  int tb_k = 2, tb_from = 0, tb_to = 0;
  bool tb_strong = false;
  SearchOptions tb_opts;
  std::optional<int> tb_threads;
  table->add_option("--k", tb_k, "Geodecity level")->required()->check(CLI::PositiveNumber);
  table->add_option("--n-from", tb_from, "First order")->required()->check(CLI::PositiveNumber);
  table->add_option("--n-to", tb_to, "Last order")->required()->check(CLI::PositiveNumber);
  table->add_flag("--strong", tb_strong, "Restrict to strongly connected digraphs");
  table->add_option("--threads", tb_threads, "Worker threads (default: GEODEX_THREADS or 1)");
  table->add_option("--max-nodes", tb_opts.max_nodes, "Node budget per cell");
  table->add_option("--max-seconds", tb_opts.max_seconds, "Time budget per cell in seconds");

  // verify
  auto* verify = app.add_subcommand("verify", "Check extremal-witness certificates for digraph6 lines");
  int vf_k = 2;
  bool vf_strong = false, vf_noss = false;
  std::optional<long long> vf_min_size, vf_size;
  std::string vf_input;
  verify->add_option("--k", vf_k, "Geodecity level")->required()->check(CLI::PositiveNumber);
  verify->add_flag("--strong", vf_strong, "Require strong connectivity");
  verify->add_flag("--no-sources-sinks", vf_noss, "Require no sources and no sinks");
  verify->add_option("--min-size", vf_min_size, "Require at least this many arcs");
  verify->add_option("--size", vf_size, "Claimed size (default: the digraph's arc count)");
  verify->add_option("--input", vf_input, "Read digraph6 lines from a file instead of stdin");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInvalidInput;
  }

  try {
    if (*check) return run_check(out, check_k, check_input);
    if (*girth) return run_girth(out, girth_input);
    if (*construct) {
      ConstructionSpec spec;
      spec.family = family_from_name(cons_family);
      spec.variant = cons_variant;
      auto put = [&spec](const char* name, const std::optional<int>& v) {
        if (v) spec.params[name] = *v;
      };
      put("d", cons_d);
      put("k", cons_k);
      put("a", cons_a);
      put("b", cons_b);
      put("t", cons_t);
      put("r", cons_r);
      put("n", cons_n);
      if (spec.family == Family::FixtureDigraph) {
        if (cons_fixture.empty()) throw std::invalid_argument("fixture requires --name");
        spec.params["fixture"] = static_cast<long long>(fixture_from_name(cons_fixture));
      }
      json config{{"family", cons_family}, {"params", spec.params}, {"variant", cons_variant},
                  {"name", cons_fixture},  {"format", out.format}};
      return run_construct(out, cons_family, config, spec);
    }
    if (*count) return run_count(out, count_cycles, count_paths, count_k, count_input);
    if (*search) {
      sc.min_size = sc_min_size;
      so.threads = so_threads.value_or(env_threads());
      return run_search(out, sc, so);
    }
    if (*table) {
      tb_opts.threads = tb_threads.value_or(env_threads());
      if (tb_to < tb_from) throw std::invalid_argument("--n-to must be at least --n-from");
      return run_table(out, tb_k, tb_from, tb_to, tb_strong, tb_opts);
    }
    if (*verify) return run_verify(out, vf_k, vf_strong, vf_noss, vf_min_size, vf_size, vf_input);
  } catch (const Digraph6ParseError& e) {
    std::cerr << "error: " << e.what() << " (byte offset " << e.byte_offset() << ")\n";
    return kExitInvalidInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  }
  return kExitOk;
}
