#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "megkit/chordal.hpp"
#include "megkit/io.hpp"
#include "megkit/megset.hpp"
#include "megkit/oracle.hpp"

namespace megkit {
namespace {

using ordered_json = nlohmann::ordered_json;

// Bad flag values and the like; mapped to exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

class Timer {
 public:
  double ms() const {
    auto dt = std::chrono::steady_clock::now() - start_;
    return std::chrono::duration<double, std::milli>(dt).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ =
      std::chrono::steady_clock::now();
};

// MEGKIT_THREADS caps internal parallelism. Every algorithm here runs
// sequentially, so any valid cap is honored as-is; the value is still
// validated so typos fail loudly.
int parse_thread_cap() {
  const char* raw = std::getenv("MEGKIT_THREADS");
  if (raw == nullptr || *raw == '\0') return 0;
  long long value = 0;
  const char* end = raw + std::string_view(raw).size();
  auto [ptr, ec] = std::from_chars(raw, end, value);
  if (ec != std::errc() || ptr != end || value < 0) {
    throw UsageError("MEGKIT_THREADS must be a non-negative integer");
  }
  return static_cast<int>(std::min<long long>(value, 1 << 20));
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(errc::malformed, "cannot open '" + path + "'");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

GraphDocument load_document(const std::string& path) {
  return parse_graph_auto(read_file(path));
}

std::vector<std::string> split_csv(const std::string& text) {
  std::vector<std::string> out;
  if (text.empty()) return out;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = text.find(',', start);
    if (comma == std::string::npos) {
      out.push_back(text.substr(start));
      return out;
    }
    out.push_back(text.substr(start, comma - start));
    start = comma + 1;
  }
}

std::vector<Vertex> vertices_from_csv(const GraphDocument& doc,
                                      const std::string& csv,
                                      const char* flag) {
  std::vector<Vertex> out;
  for (const std::string& token : split_csv(csv)) {
    std::optional<Vertex> v = vertex_from_label(doc, token);
    if (!v) {
      throw UsageError("unknown vertex '" + token + "' in " + flag);
    }
    out.push_back(*v);
  }
  return out;
}

std::string format_vertex_list(const GraphDocument& doc,
                               const std::vector<Vertex>& vs,
                               const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i > 0) out += sep;
    out += label_of(doc, vs[i]);
  }
  return out;
}

std::string format_set(const GraphDocument& doc,
                       const std::vector<Vertex>& vs) {
  return "{" + format_vertex_list(doc, vs, ", ") + "}";
}

ordered_json labels_json(const GraphDocument& doc,
                         const std::vector<Vertex>& vs) {
  ordered_json arr = ordered_json::array();
  for (Vertex v : vs) arr.push_back(label_of(doc, v));
  return arr;
}

ordered_json edges_json(const GraphDocument& doc,
                        const std::vector<EdgeRef>& edges) {
  ordered_json arr = ordered_json::array();
  for (const EdgeRef& e : edges) {
    arr.push_back(
        ordered_json::array({label_of(doc, e.u), label_of(doc, e.v)}));
  }
  return arr;
}

ordered_json input_json(const std::string& path, const GraphDocument& doc) {
  return ordered_json{
      {"path", path},
      {"format", doc.format == GraphFormat::Dimacs ? "dimacs" : "edgelist"},
      {"digest", graph_digest(doc.graph)},
      {"vertices", doc.graph.vertex_count()},
      {"edges", doc.graph.edge_count()},
  };
}

void emit_report(const std::string& command, const std::string& path,
                 const GraphDocument& doc, ordered_json result, double ms) {
  ordered_json j{
      {"command", command},
      {"input", input_json(path, doc)},
      {"result", std::move(result)},
      {"elapsed_ms", std::round(ms * 1000.0) / 1000.0},
  };
  std::cout << j.dump(2) << "\n";
}

int run_mandatory(const std::string& path, bool naive, bool json) {
  GraphDocument doc = load_document(path);
  Timer timer;
  VertexSet mand =
      naive ? mandatory_naive(doc.graph) : mandatory_fast(doc.graph);
  double ms = timer.ms();
  if (json) {
    ordered_json result{
        {"algorithm", naive ? "naive" : "fast"},
        {"count", mand.size()},
        {"mandatory", labels_json(doc, mand.members())},
    };
    emit_report("mandatory", path, doc, std::move(result), ms);
  } else {
    std::cout << "mandatory vertices (" << mand.size() << " of "
              << doc.graph.vertex_count()
              << "): " << format_set(doc, mand.members()) << "\n";
  }
  return 0;
}

int run_verify(const std::string& path, const std::string& set_csv,
               bool json) {
  GraphDocument doc = load_document(path);
  VertexSet m(vertices_from_csv(doc, set_csv, "--set"));
  Timer timer;
  MonitorReport report = monitored_edges(doc.graph, m);
  double ms = timer.ms();
  if (json) {
    std::vector<EdgeRef> unmonitored;
    for (const EdgeMonitor& em : report.edges) {
      if (!em.monitored) unmonitored.push_back(em.edge);
    }
    ordered_json result{
        {"set", labels_json(doc, m.members())},
        {"is_meg_set", report.is_meg_set},
        {"monitored", report.monitored_count},
        {"total", report.total_edges},
        {"unmonitored", edges_json(doc, unmonitored)},
    };
    emit_report("verify", path, doc, std::move(result), ms);
  } else {
    std::cout << (report.is_meg_set ? "meg-set (" : "not a meg-set (")
              << report.monitored_count << "/" << report.total_edges
              << " edges monitored)\n";
  }
  return report.is_meg_set ? 0 : 1;
}

int run_chordal(const std::string& path, bool json) {
  GraphDocument doc = load_document(path);
  Timer timer;
  ChordalityCertificate cert = check_chordal(doc.graph);
  double ms = timer.ms();
  if (json) {
    ordered_json certificate =
        cert.is_peo()
            ? ordered_json{{"type", "peo"},
                           {"order", labels_json(doc, cert.order())}}
            : ordered_json{{"type", "hole"},
                           {"cycle", labels_json(doc, cert.cycle())}};
    ordered_json result{{"chordal", cert.is_peo()},
                        {"certificate", std::move(certificate)}};
    emit_report("chordal", path, doc, std::move(result), ms);
  } else if (cert.is_peo()) {
    std::cout << "chordal\npeo: " << format_vertex_list(doc, cert.order(), " ")
              << "\n";
  } else {
    std::cout << "not chordal\nhole "
              << format_vertex_list(doc, cert.cycle(), "-") << "\n";
  }
  return cert.is_peo() ? 0 : 1;
}

int run_minmeg(const std::string& path, bool no_prune, bool skip_unique,
               std::optional<int> max_size, bool json) {
  GraphDocument doc = load_document(path);
  MinMegOptions opt;
  opt.mandatory_pruning = !no_prune;
  opt.check_uniqueness = !skip_unique;
  opt.max_size = max_size;
  Timer timer;
  MinMegResult res;
  try {
    res = min_meg_brute(doc.graph, opt);
  } catch (const Error& e) {
    if (e.code() == errc::size_cap_exceeded) {
      std::cerr << "error: " << e.what() << "\n";
      return 1;
    }
    throw;
  }
  double ms = timer.ms();
  if (json) {
    ordered_json result{
        {"size", res.optimum_size},
        {"optimum", labels_json(doc, res.optimum.members())},
        {"unique_minimum", res.is_unique_minimum
                               ? ordered_json(*res.is_unique_minimum)
                               : ordered_json(nullptr)},
        {"nodes_enumerated", res.nodes_enumerated},
        {"pruning", opt.mandatory_pruning},
    };
    emit_report("minmeg", path, doc, std::move(result), ms);
  } else {
    std::cout << "minimum meg-set (size " << res.optimum_size
              << "): " << format_set(doc, res.optimum.members()) << "\n";
    if (res.is_unique_minimum) {
      std::cout << "unique minimum: "
                << (*res.is_unique_minimum ? "yes" : "no") << "\n";
    } else {
      std::cout << "unique minimum: not checked\n";
    }
    std::cout << "enumerated " << res.nodes_enumerated
              << " candidate sets\n";
  }
  return 0;
}

int run_gen(int n, int attach, std::uint64_t seed,
            const std::string& format) {
  Graph g = gen_chordal(n, attach, seed);
  GraphDocument doc;
  doc.graph = std::move(g);
  std::string stamp = "n=" + std::to_string(n) +
                      " attach=" + std::to_string(attach) +
                      " seed=" + std::to_string(seed);
  if (format == "dimacs") {
    doc.format = GraphFormat::Dimacs;
    std::cout << "c gen " << stamp << "\n" << serialize_dimacs(doc);
  } else {
    doc.format = GraphFormat::EdgeList;
    std::cout << "# gen " << stamp << "\n" << serialize_edgelist(doc);
  }
  return 0;
}

int run_monitor(const std::string& path, const std::string& pair_csv,
                bool json) {
  GraphDocument doc = load_document(path);
  std::vector<Vertex> pair = vertices_from_csv(doc, pair_csv, "--pair");
  if (pair.size() != 2 || pair[0] == pair[1]) {
    throw UsageError("--pair needs two distinct vertices, as 'a,b'");
  }
  std::sort(pair.begin(), pair.end());
  Timer timer;
  std::vector<EdgeRef> monitored;
  for (const EdgeRef& e : doc.graph.edges()) {
    if (pair_monitors_edge(doc.graph, pair[0], pair[1], e)) {
      monitored.push_back(e);
    }
  }
  double ms = timer.ms();
  if (json) {
    ordered_json result{
        {"pair", labels_json(doc, pair)},
        {"monitored_count", static_cast<int>(monitored.size())},
        {"total", doc.graph.edge_count()},
        {"monitored", edges_json(doc, monitored)},
    };
    emit_report("monitor", path, doc, std::move(result), ms);
  } else {
    std::cout << "pair " << format_set(doc, pair) << " monitors "
              << monitored.size() << "/" << doc.graph.edge_count()
              << " edges";
    for (const EdgeRef& e : monitored) {
      std::cout << " (" << label_of(doc, e.u) << "," << label_of(doc, e.v)
                << ")";
    }
    std::cout << "\n";
  }
  return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
  CLI::App app{"monitoring edge-geodetic sets: mandatory vertices, set "
               "verification, chordality certificates, brute-force minima"};
  app.name("megkit");
  app.require_subcommand(1);

  std::string file;
  bool json = false;
  bool naive = false;
  std::string set_csv;
  std::string pair_csv;
  bool no_prune = false;
  bool skip_unique = false;
  int max_size = 0;
  int gen_n = 0;
  int gen_attach = 0;
  std::uint64_t gen_seed = 0;
  std::string gen_format = "edgelist";

  CLI::App* c_mand = app.add_subcommand(
      "mandatory", "vertices contained in every monitoring edge-geodetic set");
  c_mand->add_option("file", file, "graph file (edge list or DIMACS)")
      ->required();
  c_mand->add_flag("--naive", naive, "direct support-set evaluation");
  c_mand->add_flag("--json", json, "emit a JSON report");

  CLI::App* c_verify = app.add_subcommand(
      "verify", "check whether a vertex set monitors every edge");
  c_verify->add_option("file", file, "graph file (edge list or DIMACS)")
      ->required();
  c_verify->add_option("--set", set_csv, "comma-separated vertices, e.g. 0,2,5")
      ->required();
  c_verify->add_flag("--json", json, "emit a JSON report");

  CLI::App* c_chordal =
      app.add_subcommand("chordal", "chordality with a checkable certificate");
  c_chordal->add_option("file", file, "graph file (edge list or DIMACS)")
      ->required();
  c_chordal->add_flag("--json", json, "emit a JSON report");

  CLI::App* c_minmeg = app.add_subcommand(
      "minmeg", "exhaustive minimum monitoring edge-geodetic set");
  c_minmeg->add_option("file", file, "graph file (edge list or DIMACS)")
      ->required();
  c_minmeg->add_flag("--no-prune", no_prune,
                     "do not restrict the search to mandatory supersets");
  c_minmeg->add_flag("--skip-unique", skip_unique,
                     "skip the uniqueness scan at the optimum size");
  c_minmeg->add_option("--max-size", max_size, "stop after this cardinality")
      ->check(CLI::NonNegativeNumber);
  c_minmeg->add_flag("--json", json, "emit a JSON report");

  CLI::App* c_gen =
      app.add_subcommand("gen", "generate a random connected chordal graph");
  c_gen->add_option("--n", gen_n, "vertex count")
      ->required()
      ->check(CLI::PositiveNumber);
  c_gen->add_option("--attach", gen_attach, "largest attachment clique")
      ->required()
      ->check(CLI::PositiveNumber);
  c_gen->add_option("--seed", gen_seed, "generator seed")->required();
  c_gen->add_option("--format", gen_format, "output format")
      ->check(CLI::IsMember({"edgelist", "dimacs"}));

  CLI::App* c_monitor = app.add_subcommand(
      "monitor", "edges a single pair of vertices monitors");
  c_monitor->add_option("file", file, "graph file (edge list or DIMACS)")
      ->required();
  c_monitor->add_option("--pair", pair_csv, "two vertices, e.g. 0,4")
      ->required();
  c_monitor->add_flag("--json", json, "emit a JSON report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    (void)parse_thread_cap();
    if (c_mand->parsed()) return run_mandatory(file, naive, json);
    if (c_verify->parsed()) return run_verify(file, set_csv, json);
    if (c_chordal->parsed()) return run_chordal(file, json);
    if (c_minmeg->parsed()) {
      std::optional<int> cap;
      if (c_minmeg->count("--max-size") > 0) cap = max_size;
      return run_minmeg(file, no_prune, skip_unique, cap, json);
    }
    if (c_gen->parsed()) return run_gen(gen_n, gen_attach, gen_seed, gen_format);
    if (c_monitor->parsed()) return run_monitor(file, pair_csv, json);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 2;
}

}  // namespace megkit
