#include "cli/commands.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cli/instances.hpp"
#include "ecg/acyclicity.hpp"
#include "ecg/connectivity.hpp"
#include "ecg/corpus.hpp"
#include "ecg/errors.hpp"
#include "ecg/fixtures.hpp"
#include "ecg/io.hpp"
#include "ecg/oracle.hpp"
#include "ecg/pc_structures.hpp"
#include "ecg/reductions.hpp"
#include "json.hpp"

namespace ecg::cli {

namespace {

using Json = nlohmann::ordered_json;
namespace fs = std::filesystem;

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  bool oracle = false;
  int type4_bound = kDefaultType4Bound;
  std::uint64_t seed = 1;
  std::string json_out;
};

struct Input {
  std::string path;
  std::string text;
  Graph graph;
};

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw IoError("cannot open " + path);
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

Input load(const std::string& path) {
  Input in{path, read_text(path), {}};
  in.graph = parse_graph(in.text);
  return in;
}

Json input_json(const Input& in) {
  Json j{{"path", in.path},
         {"digest", "fnv1a:" + fnv1a_hex(in.text)},
         {"n", in.graph.vertex_count()},
         {"m", in.graph.edge_count()},
         {"c", in.graph.color_count()}};
  if (auto warnings = lint(in.graph); !warnings.empty()) {
    j["warnings"] = std::move(warnings);
  }
  return j;
}

Json one_based(const std::vector<int>& items) {
  Json out = Json::array();
  for (int v : items) {
    out.push_back(v + 1);
  }
  return out;
}

Json walk_json(const Walk& w) {
  return Json{{"vertices", one_based(w.vertices)}, {"edges", one_based(w.edges)}};
}

void require(bool ok, const std::string& what) {
  if (!ok) {
    throw InternalError("emitted certificate failed verification: " + what);
  }
}

// ---- walk structures ----

enum class Structure { cycle, trail, walk };

bool witness_valid(const Graph& g, const Walk& w, Structure kind) {
  if (!is_pc_walk(g, w) || !w.closed() || w.length() < 2) {
    return false;
  }
  switch (kind) {
    case Structure::cycle:
      return is_cycle(w);
    case Structure::trail:
      return is_trail(w);
    case Structure::walk:
      return true;
  }
  return false;
}

Json detection_json(const Graph& g, Structure kind, bool oracle, int witness_bound) {
  Json j;
  if (oracle) {
    if (g.vertex_count() > oracle::kDefaultConnectivityBound) {
      throw CapacityError("brute-force walk-structure search", g.vertex_count(),
                          oracle::kDefaultConnectivityBound);
    }
    std::optional<Walk> witness;
    bool present = false;
    if (kind == Structure::cycle) {
      witness = oracle::find_pc_cycle(g);
      present = witness.has_value();
    } else if (kind == Structure::trail) {
      witness = oracle::find_pc_closed_trail(g);
      present = witness.has_value();
    } else {
      present = oracle::has_pc_closed_walk(g);
    }
    j["present"] = present;
    if (witness) {
      require(witness_valid(g, *witness, kind), "walk-structure witness");
      j["witness"] = walk_json(*witness);
    }
    return j;
  }
  Detection d;
  if (kind == Structure::cycle) {
    d = witness_bound > 0 ? has_pc_cycle(g, witness_bound) : has_pc_cycle(g);
  } else if (kind == Structure::trail) {
    d = witness_bound > 0 ? has_pc_closed_trail(g, witness_bound) : has_pc_closed_trail(g);
  } else {
    d = has_pc_closed_walk(g);
  }
  j["present"] = d.present;
  if (d.witness) {
    require(witness_valid(g, *d.witness, kind), "walk-structure witness");
    j["witness"] = walk_json(*d.witness);
  }
  if (d.witness_refused) {
    j["witness_refused"] = *d.witness_refused;
  }
  return j;
}

// ---- classify ----

Json classify_one(const Input& in, const Options& opt, int& code) {
  const Graph& g = in.graph;
  Json j{{"input", input_json(in)}, {"method", opt.oracle ? "oracle" : "fast"}};
  std::array<std::optional<bool>, 5> member;
  std::array<std::optional<VertexOrdering>, 5> certificate;
  if (opt.oracle) {
    for (int k = 1; k <= 5; ++k) {
      certificate[k - 1] = oracle::brute_recognize(g, k);
      member[k - 1] = certificate[k - 1].has_value();
    }
  } else {
    const Classification c = classify(g, opt.type4_bound);
    member = c.membership;
    certificate = c.certificate;
  }
  int level = 0;
  while (level < 5 && member[level].value_or(false)) {
    ++level;
  }
  Json types = Json::array();
  for (int k = 1; k <= 5; ++k) {
    Json t{{"type", k}};
    if (!member[k - 1]) {
      t["member"] = "unknown";
    } else {
      t["member"] = *member[k - 1];
    }
    if (certificate[k - 1]) {
      require(verify_ordering(g, *certificate[k - 1], k),
              "type-" + std::to_string(k) + " ordering");
      t["ordering"] = one_based(*certificate[k - 1]);
    }
    types.push_back(std::move(t));
  }
  j["level"] = level;
  if (level == 3 && !member[3]) {
    j["level_note"] = "unknown at level 4";
    code = kCapacity;
  }
  j["types"] = std::move(types);
  j["structures"] = Json{{"pc_cycle", detection_json(g, Structure::cycle, opt.oracle, 0)},
                         {"pc_closed_trail", detection_json(g, Structure::trail, opt.oracle, 0)},
                         {"pc_closed_walk", detection_json(g, Structure::walk, opt.oracle, 0)}};
  return j;
}

// ---- connectivity ----

Vertex terminal(const Graph& g, int one_based_id, const char* name) {
  if (one_based_id < 1 || one_based_id > g.vertex_count()) {
    throw GraphError(std::string(name) + " = " + std::to_string(one_based_id) +
                     " is not a vertex (1.." + std::to_string(g.vertex_count()) + ")");
  }
  return one_based_id - 1;
}

void verify_connectivity(const Graph& g, const SeparatorPackingResult& r, Vertex x, Vertex y) {
  require(r.t == static_cast<int>(r.paths.size()) && r.s >= r.t, "separator/packing sizes");
  std::set<Vertex> inner;
  std::set<EdgeId> used;
  for (const Walk& p : r.paths) {
    require(is_pc_walk(g, p) && is_path(p) && p.vertices.front() == x && p.vertices.back() == y,
            "PC x-y path");
    for (std::size_t i = 1; i + 1 < p.vertices.size(); ++i) {
      require(r.edge_variant || inner.insert(p.vertices[i]).second, "vertex-disjoint paths");
    }
    for (EdgeId e : p.edges) {
      require(!r.edge_variant || used.insert(e).second, "edge-disjoint paths");
    }
  }
  std::vector<bool> gone_v(static_cast<std::size_t>(g.vertex_count()), false);
  std::vector<bool> gone_e(static_cast<std::size_t>(g.edge_count()), false);
  for (Vertex v : r.separator) {
    require(v != x && v != y, "separator avoids the terminals");
    gone_v[v] = true;
  }
  for (EdgeId e : r.edge_separator) {
    gone_e[g.edge_index(e)] = true;
  }
  require(!oracle::pc_path_exists(g, x, y, gone_v, gone_e), "separator meets every PC path");
}

Json connectivity_json(const SeparatorPackingResult& r) {
  Json j{{"method", std::string(method_name(r.method))},
         {"variant", r.edge_variant ? "edge-disjoint" : "vertex-disjoint"},
         {"s", r.s}};
  if (r.edge_variant) {
    j["edge_separator"] = one_based(r.edge_separator);
  } else {
    j["separator"] = one_based(r.separator);
  }
  j["t"] = r.t;
  Json paths = Json::array();
  for (const Walk& p : r.paths) {
    paths.push_back(walk_json(p));
  }
  j["paths"] = std::move(paths);
  j["menger_equal"] = r.menger_equal;
  return j;
}

// ---- reduce ----

struct ReduceArgs {
  std::string kind;
  std::string input;
  std::string out;
  std::string map;
  std::vector<int> sizes;
  int size = 2;
};

void write_map(const std::string& path, const Reduction& r) {
  std::ofstream out(path);
  if (!out) {
    throw IoError("cannot write " + path);
  }
  out << "# vertex names, 1-based\n";
  for (std::size_t v = 0; v < r.names.size(); ++v) {
    out << "v " << v + 1 << " " << r.names[v] << "\n";
  }
  if (r.x) {
    out << "x " << *r.x + 1 << "\n";
  }
  if (r.y) {
    out << "y " << *r.y + 1 << "\n";
  }
}

Json reduce(const ReduceArgs& a) {
  const std::string text = read_text(a.input);
  Json j{{"kind", a.kind},
         {"input", Json{{"path", a.input}, {"digest", "fnv1a:" + fnv1a_hex(text)}}}};
  Reduction r;
  if (a.kind == "digraph") {
    r = digraph_to_2ecg(parse_digraph(text));
  } else if (a.kind == "betweenness") {
    r = betweenness_to_type4(parse_betweenness(text));
  } else if (a.kind == "vertex-cover") {
    r = vertex_cover_to_separator(parse_plain_graph(text));
  } else if (a.kind == "rbpm") {
    const RbpmInstance inst = parse_rbpm(text);
    const auto [normalized, split] = normalize_rbpm(inst);
    Json pairs = Json::array();
    for (int p : split) {
      pairs.push_back(Json::array({inst.pairs[p].first + 1, inst.pairs[p].second + 1}));
    }
    j["normalization"] = Json{{"split_pairs", std::move(pairs)}};
    r = rbpm_to_packing(normalized);
  } else if (a.kind == "extend") {
    const Graph g = parse_graph(text);
    std::vector<int> sizes = a.sizes;
    if (sizes.empty()) {
      sizes.assign(static_cast<std::size_t>(g.vertex_count()), a.size);
    } else if (static_cast<int>(sizes.size()) != g.vertex_count()) {
      throw GraphError("--sizes needs one entry per vertex (" +
                       std::to_string(g.vertex_count()) + ")");
    }
    r = extend(g, sizes);
  } else if (a.kind == "split") {
    r = vertex_split_edge_transform(parse_graph(text));
  } else if (a.kind == "fvs") {
    r = fvs_to_type5_deletion(parse_digraph(text));
  } else if (a.kind == "bipartization") {
    r = bipartization_to_type5_deletion(parse_plain_graph(text));
  } else {
    throw GraphError("unknown reduction kind '" + a.kind + "'");
  }

  const std::string map_path = a.map.empty() ? a.out + ".map" : a.map;
  write_graph_file(a.out, r.graph,
                   "ecg reduce " + a.kind + " " + fs::path(a.input).filename().string());
  write_map(map_path, r);
  // The written file must read back as the same graph.
  const Graph back = parse_graph(read_text(a.out));
  require(back.vertex_count() == r.graph.vertex_count() &&
              back.edge_count() == r.graph.edge_count() && serialize(back) == serialize(r.graph),
          "written graph re-parses identically");
  j["output"] = Json{{"graph", a.out},
                     {"map", map_path},
                     {"n", r.graph.vertex_count()},
                     {"m", r.graph.edge_count()},
                     {"c", r.graph.color_count()}};
  if (r.x) {
    j["x"] = *r.x + 1;
  }
  if (r.y) {
    j["y"] = *r.y + 1;
  }
  return j;
}

// ---- fixtures ----

Json write_fixtures(const std::string& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) {
    throw IoError("cannot create " + dir + ": " + ec.message());
  }
  Json manifest = Json::array();
  Json files = Json::array();
  for (const Fixture& f : canonical_fixtures()) {
    const std::string file = f.name + ".ecg";
    std::string comment = f.name + ": " + f.description + "\nvertices:";
    for (std::size_t v = 0; v < f.vertex_names.size(); ++v) {
      comment += " " + std::to_string(v + 1) + "=" + f.vertex_names[v];
    }
    write_graph_file(fs::path(dir) / file, f.graph, comment);
    Json entry{{"file", file},
               {"name", f.name},
               {"description", f.description},
               {"expected_level", f.expected_level},
               {"vertices", f.vertex_names}};
    if (f.x && f.y) {
      entry["x"] = *f.x + 1;
      entry["y"] = *f.y + 1;
    }
    if (f.expected_s) {
      entry["expected_s"] = *f.expected_s;
    }
    if (f.expected_t) {
      entry["expected_t"] = *f.expected_t;
    }
    manifest.push_back(std::move(entry));
    files.push_back((fs::path(dir) / file).string());
  }
  const fs::path manifest_path = fs::path(dir) / "manifest.json";
  std::ofstream out(manifest_path);
  if (!out) {
    throw IoError("cannot write " + manifest_path.string());
  }
  out << Json{{"fixtures", manifest}}.dump(2) << "\n";
  return Json{{"directory", dir}, {"files", files}, {"manifest", manifest_path.string()}};
}

// ---- oracle-check ----

struct CheckLog {
  int checks = 0;
  Json disagreements = Json::array();
  Json skipped = Json::array();

  void compare(const std::string& label, const std::string& check, const Json& fast,
               const Json& brute) {
    ++checks;
    if (fast != brute) {
      disagreements.push_back(
          Json{{"graph", label}, {"check", check}, {"fast", fast}, {"oracle", brute}});
    }
  }
};

void oracle_check_graph(const std::string& label, const Graph& g, std::optional<int> x1,
                        std::optional<int> y1, const Options& opt, CheckLog& log) {
  const int n = g.vertex_count();
  if (n <= oracle::kDefaultOrderingBound) {
    for (int k = 1; k <= 5; ++k) {
      if (k == 4 && n > opt.type4_bound) {
        continue;
      }
      std::optional<VertexOrdering> fast;
      switch (k) {
        case 1: fast = recognize_type1(g); break;
        case 2: fast = recognize_type2(g); break;
        case 3: fast = recognize_type3(g); break;
        case 4: fast = recognize_type4(g, opt.type4_bound); break;
        default: fast = recognize_type5(g); break;
      }
      const auto brute = oracle::brute_recognize(g, k);
      log.compare(label, "type " + std::to_string(k), fast.has_value(), brute.has_value());
      if (fast) {
        log.compare(label, "type " + std::to_string(k) + " certificate",
                    oracle::literal_ordering_check(g, *fast, k), true);
      }
    }
  } else {
    log.skipped.push_back(Json{{"graph", label}, {"check", "orderings"}, {"reason", "n > 8"}});
  }
  if (n <= oracle::kDefaultConnectivityBound) {
    log.compare(label, "pc cycle", has_pc_cycle(g).present, oracle::find_pc_cycle(g).has_value());
    log.compare(label, "pc closed trail", has_pc_closed_trail(g).present,
                oracle::find_pc_closed_trail(g).has_value());
    log.compare(label, "pc closed walk", has_pc_closed_walk(g).present,
                oracle::has_pc_closed_walk(g));
    log.compare(label, "type 5 vs cycle parity", recognize_type5(g).has_value(),
                oracle::cycle_parity_condition(g));
  } else {
    log.skipped.push_back(Json{{"graph", label}, {"check", "walk structures"}, {"reason", "n > 12"}});
  }
  if (!x1 || !y1) {
    return;
  }
  const Vertex x = terminal(g, *x1, "x");
  const Vertex y = terminal(g, *y1, "y");
  if (x == y || g.adjacent(x, y) || n > oracle::kDefaultConnectivityBound) {
    log.skipped.push_back(Json{{"graph", label}, {"check", "connectivity"},
                               {"reason", "terminals equal, adjacent, or n > 12"}});
    return;
  }
  const auto brute = menger_gap(g, x, y);
  log.compare(label, "brute s >= t", brute.s >= brute.t, true);
  try {
    const auto flow = solve_type4(g, x, y);
    log.compare(label, "separator size", flow.s, brute.s);
    log.compare(label, "packing size", flow.t, brute.t);
  } catch (const PreconditionError&) {
    log.skipped.push_back(Json{{"graph", label}, {"check", "flow"}, {"reason", "not type 4"}});
  }
}

// ---- driver ----

std::string error_kind(int code) {
  switch (code) {
    case kParse: return "parse";
    case kCapacity: return "capacity";
    case kInfeasible: return "infeasible";
    case kInternal: return "internal";
    default: return "usage";
  }
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Properly colored walks, acyclicity types and PC connectivity in edge-colored graphs",
               "ecg"};
  app.require_subcommand(1);
  Options opt;
  app.add_flag("--oracle", opt.oracle, "Force brute-force mode");
  app.add_option("--type4-bound", opt.type4_bound, "Largest n for the exact type-4 search")
      ->check(CLI::Range(1, 28));
  app.add_option("--seed", opt.seed, "Seed for generated instances");
  app.add_option("--json-out", opt.json_out, "Also write the report to this file");

  std::vector<std::string> files;
  auto* classify_cmd = app.add_subcommand("classify", "Acyclicity level with certificates");
  classify_cmd->add_option("files", files, "Graph files")->required();

  std::string structure;
  std::string file;
  int witness_bound = 0;
  auto* detect_cmd = app.add_subcommand("detect", "PC cycle, closed trail or closed walk");
  detect_cmd->add_option("structure", structure, "cycle | trail | walk")
      ->required()
      ->check(CLI::IsMember({"cycle", "trail", "walk"}));
  detect_cmd->add_option("file", file, "Graph file")->required();
  detect_cmd->add_option("--witness-bound", witness_bound, "Largest search space for a witness");

  int x1 = 0;
  int y1 = 0;
  bool edge_variant = false;
  int bound = oracle::kDefaultConnectivityBound;
  auto* conn_cmd = app.add_subcommand("connectivity", "Minimum PC separator and maximum packing");
  conn_cmd->add_option("file", file, "Graph file")->required();
  conn_cmd->add_option("-x,--x", x1, "First terminal (1-based)")->required();
  conn_cmd->add_option("-y,--y", y1, "Second terminal (1-based)")->required();
  conn_cmd->add_flag("--edge", edge_variant, "Edge separator and edge-disjoint packing");
  conn_cmd->add_option("--bound", bound, "Largest n for the exhaustive search");

  ReduceArgs reduce_args;
  auto* reduce_cmd = app.add_subcommand("reduce", "Build a reduction image");
  reduce_cmd->add_option("kind", reduce_args.kind)
      ->required()
      ->check(CLI::IsMember({"digraph", "betweenness", "vertex-cover", "rbpm", "extend", "split",
                             "fvs", "bipartization"}));
  reduce_cmd->add_option("input", reduce_args.input, "Instance file")->required();
  reduce_cmd->add_option("-o,--out", reduce_args.out, "Output graph file")->required();
  reduce_cmd->add_option("--map", reduce_args.map, "Vertex name map (default <out>.map)");
  reduce_cmd->add_option("--sizes", reduce_args.sizes, "extend: copies per vertex")
      ->delimiter(',');
  reduce_cmd->add_option("--size", reduce_args.size, "extend: copies of every vertex")
      ->check(CLI::PositiveNumber);

  std::string out_dir;
  auto* fixtures_cmd = app.add_subcommand("fixtures", "Write the example graphs and manifest");
  fixtures_cmd->add_option("dir", out_dir, "Output directory")->required();

  std::vector<std::string> check_files;
  std::optional<int> check_x;
  std::optional<int> check_y;
  int random_count = 0;
  auto* check_cmd = app.add_subcommand("oracle-check", "Compare fast results to brute force");
  check_cmd->add_option("files", check_files, "Graph files");
  check_cmd->add_option("-x,--x", check_x, "Connectivity terminal (1-based)");
  check_cmd->add_option("-y,--y", check_y, "Connectivity terminal (1-based)");
  check_cmd->add_option("--random", random_count, "Also check this many seeded random graphs");

  for (CLI::App* sub : app.get_subcommands({})) {
    sub->fallthrough();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  const CLI::App* chosen = app.get_subcommands().front();
  const std::string command = chosen->get_name();
  const auto start = std::chrono::steady_clock::now();
  Json report{{"command", command}};
  int code = kOk;

  try {
    if (chosen == classify_cmd) {
      if (files.size() == 1) {
        report.update(classify_one(load(files.front()), opt, code));
      } else {
        Json batch = Json::array();
        for (const std::string& f : files) {
          int one = kOk;
          batch.push_back(classify_one(load(f), opt, one));
          code = std::max(code, one);
        }
        report["batch"] = std::move(batch);
      }
    } else if (chosen == detect_cmd) {
      const Input in = load(file);
      const Structure kind = structure == "cycle"   ? Structure::cycle
                             : structure == "trail" ? Structure::trail
                                                    : Structure::walk;
      report["input"] = input_json(in);
      report["structure"] = structure;
      report["method"] = opt.oracle ? "oracle" : "fast";
      report.update(detection_json(in.graph, kind, opt.oracle, witness_bound));
    } else if (chosen == conn_cmd) {
      const Input in = load(file);
      const Graph& g = in.graph;
      const Vertex x = terminal(g, x1, "x");
      const Vertex y = terminal(g, y1, "y");
      if (x == y) {
        throw GraphError("x and y must differ");
      }
      report["input"] = input_json(in);
      report["x"] = x1;
      report["y"] = y1;
      SeparatorPackingResult r;
      std::optional<std::string> fallback;
      if (edge_variant) {
        r = edge_disjoint_variant(g, x, y, bound);
      } else if (opt.oracle) {
        r = menger_gap(g, x, y, bound);
      } else {
        try {
          r = solve_type4(g, x, y);
        } catch (const PreconditionError& e) {
          fallback = e.what();
          r = menger_gap(g, x, y, bound);
        }
      }
      verify_connectivity(g, r, x, y);
      report.update(connectivity_json(r));
      if (fallback) {
        report["fallback_reason"] = *fallback;
      }
    } else if (chosen == reduce_cmd) {
      report.update(reduce(reduce_args));
    } else if (chosen == fixtures_cmd) {
      report.update(write_fixtures(out_dir));
    } else if (chosen == check_cmd) {
      CheckLog log;
      int graphs = 0;
      for (const std::string& f : check_files) {
        oracle_check_graph(f, load(f).graph, check_x, check_y, opt, log);
        ++graphs;
      }
      corpus::Rng rng(opt.seed);
      for (int i = 0; i < random_count; ++i) {
        const Graph g = corpus::random_graph(rng);
        oracle_check_graph("random #" + std::to_string(i + 1) + ":\n" + serialize(g), g,
                           std::nullopt, std::nullopt, opt, log);
        ++graphs;
      }
      report["seed"] = opt.seed;
      report["graphs"] = graphs;
      report["checks"] = log.checks;
      report["disagreements"] = log.disagreements;
      report["skipped"] = log.skipped;
      if (!log.disagreements.empty()) {
        code = kInternal;
      }
    }
  } catch (const ParseError& e) {
    code = kParse;
    report["error"] = Json{{"kind", "parse"}, {"message", e.what()}, {"line", e.line()}};
  } catch (const GraphError& e) {
    code = kParse;
    report["error"] = Json{{"kind", "input"}, {"message", e.what()}};
  } catch (const CapacityError& e) {
    code = kCapacity;
    report["error"] = Json{{"kind", "capacity"}, {"message", e.what()},
                           {"size", e.size()}, {"bound", e.bound()}};
  } catch (const InfeasibleError& e) {
    code = kInfeasible;
    report["error"] = Json{{"kind", "infeasible"}, {"message", e.what()}};
  } catch (const InternalError& e) {
    code = kInternal;
    report["error"] = Json{{"kind", "internal"}, {"message", e.what()}};
  } catch (const UnsupportedError& e) {
    code = kUsage;
    report["error"] = Json{{"kind", "unsupported"}, {"message", e.what()}};
  } catch (const IoError& e) {
    code = kUsage;
    report["error"] = Json{{"kind", "io"}, {"message", e.what()}};
  } catch (const std::runtime_error& e) {
    code = kUsage;
    report["error"] = Json{{"kind", "io"}, {"message", e.what()}};
  }

  report["exit_code"] = code;
  report["timing_ms"] =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  if (report.contains("error")) {
    err << "ecg " << command << ": " << error_kind(code) << " error: "
        << report["error"]["message"].get<std::string>() << "\n";
  }
  const std::string text = report.dump(2);
  out << text << "\n";
  if (!opt.json_out.empty()) {
    std::ofstream file_out(opt.json_out);
    if (!file_out) {
      err << "ecg: cannot write " << opt.json_out << "\n";
      return code == kOk ? kUsage : code;
    }
    file_out << text << "\n";
  }
  return code;
}

}  // namespace ecg::cli
