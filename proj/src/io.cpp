#include "megkit/io.hpp"

#include <algorithm>
#include <charconv>
#include <cstdint>

namespace megkit {

namespace {

constexpr int kMaxVertices = 10'000'000;
constexpr long long kMaxEdges = 100'000'000;

struct Lines {
  std::string_view text;
  std::size_t pos = 0;
  int number = 0;  // 1-based number of the line last returned

  std::optional<std::string_view> next() {
    if (pos >= text.size()) return std::nullopt;
    std::size_t end = text.find('\n', pos);
    std::string_view line;
    if (end == std::string_view::npos) {
      line = text.substr(pos);
      pos = text.size();
    } else {
      line = text.substr(pos, end - pos);
      pos = end + 1;
    }
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    ++number;
    return line;
  }
};

bool is_blank(std::string_view line) {
  return line.find_first_not_of(" \t") == std::string_view::npos;
}

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
    if (i > start) fields.push_back(line.substr(start, i - start));
  }
  return fields;
}

long long parse_number(std::string_view field, int line) {
  long long value = 0;
  const char* begin = field.data();
  const char* end = begin + field.size();
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr != end) {
    throw Error(errc::malformed,
                "expected an integer, got '" + std::string(field) + "'", line);
  }
  return value;
}

struct Header {
  int n = 0;
  long long m = 0;
};

Header read_header_fields(std::string_view nf, std::string_view mf, int line) {
  long long n = parse_number(nf, line);
  long long m = parse_number(mf, line);
  if (n < 0 || n > kMaxVertices) {
    throw Error(errc::malformed,
                "vertex count " + std::to_string(n) + " out of range", line);
  }
  if (m < 0 || m > kMaxEdges) {
    throw Error(errc::malformed,
                "edge count " + std::to_string(m) + " out of range", line);
  }
  return Header{static_cast<int>(n), m};
}

// Shared edge validation with line-accurate errors. build_graph would catch
// the same problems, but too late to name the input line.
struct EdgeAccumulator {
  int n;
  std::vector<std::pair<Vertex, Vertex>> pairs;
  std::unordered_set<std::uint64_t> keys;

  void add(long long a, long long b, int line) {
    if (a < 0 || a >= n) {
      throw Error(errc::id_out_of_range,
                  "vertex id " + std::to_string(a) + " not in [0, " +
                      std::to_string(n) + ")",
                  line);
    }
    if (b < 0 || b >= n) {
      throw Error(errc::id_out_of_range,
                  "vertex id " + std::to_string(b) + " not in [0, " +
                      std::to_string(n) + ")",
                  line);
    }
    if (a == b) {
      throw Error(errc::self_loop,
                  "self loop at vertex " + std::to_string(a), line);
    }
    Vertex u = static_cast<Vertex>(std::min(a, b));
    Vertex v = static_cast<Vertex>(std::max(a, b));
    std::uint64_t key = (static_cast<std::uint64_t>(u) << 32) |
                        static_cast<std::uint32_t>(v);
    if (!keys.insert(key).second) {
      throw Error(errc::duplicate_edge,
                  "edge (" + std::to_string(u) + ", " + std::to_string(v) +
                      ") listed twice",
                  line);
    }
    pairs.emplace_back(u, v);
  }
};

}  // namespace

GraphDocument parse_edgelist(std::string_view text) {
  Lines lines{text};
  bool have_header = false;
  Header header;
  EdgeAccumulator acc{0, {}, {}};
  long long seen = 0;

  while (auto line = lines.next()) {
    if (is_blank(*line)) continue;
    std::vector<std::string_view> fields = split_fields(*line);
    if (!fields.empty() && fields[0].front() == '#') continue;

    if (!have_header) {
      if (fields.size() != 2) {
        throw Error(errc::malformed, "expected header 'n m'", lines.number);
      }
      header = read_header_fields(fields[0], fields[1], lines.number);
      acc.n = header.n;
      have_header = true;
      continue;
    }
    if (seen == header.m) {
      throw Error(errc::edge_count_mismatch,
                  "more edge lines than the declared " +
                      std::to_string(header.m),
                  lines.number);
    }
    if (fields.size() != 2) {
      throw Error(errc::malformed, "expected edge line 'u v'", lines.number);
    }
    acc.add(parse_number(fields[0], lines.number),
            parse_number(fields[1], lines.number), lines.number);
    ++seen;
  }

  if (!have_header) {
    throw Error(errc::malformed, "no 'n m' header line found",
                std::max(1, lines.number));
  }
  if (seen != header.m) {
    throw Error(errc::edge_count_mismatch,
                "declared " + std::to_string(header.m) + " edges, found " +
                    std::to_string(seen),
                std::max(1, lines.number));
  }
  GraphDocument doc;
  doc.format = GraphFormat::EdgeList;
  doc.graph = build_graph(header.n, acc.pairs);
  return doc;
}

GraphDocument parse_dimacs(std::string_view text) {
  Lines lines{text};
  bool have_header = false;
  Header header;
  EdgeAccumulator acc{0, {}, {}};
  long long seen = 0;

  while (auto line = lines.next()) {
    if (is_blank(*line)) continue;
    std::vector<std::string_view> fields = split_fields(*line);
    std::string_view tag = fields[0];

    if (tag.front() == 'c') continue;
    if (tag == "p") {
      if (have_header) {
        throw Error(errc::malformed, "second 'p' line", lines.number);
      }
      if (fields.size() != 4 || fields[1] != "edge") {
        throw Error(errc::malformed, "expected 'p edge n m'", lines.number);
      }
      header = read_header_fields(fields[2], fields[3], lines.number);
      acc.n = header.n;
      have_header = true;
      continue;
    }
    if (tag == "e") {
      if (!have_header) {
        throw Error(errc::missing_header, "'e' line before 'p edge n m'",
                    lines.number);
      }
      if (seen == header.m) {
        throw Error(errc::edge_count_mismatch,
                    "more edge lines than the declared " +
                        std::to_string(header.m),
                    lines.number);
      }
      if (fields.size() != 3) {
        throw Error(errc::malformed, "expected edge line 'e u v'",
                    lines.number);
      }
      long long a = parse_number(fields[1], lines.number);
      long long b = parse_number(fields[2], lines.number);
      if (a < 1 || a > header.n || b < 1 || b > header.n) {
        throw Error(errc::id_out_of_range,
                    "vertex ids are 1-based and at most " +
                        std::to_string(header.n),
                    lines.number);
      }
      acc.add(a - 1, b - 1, lines.number);
      ++seen;
      continue;
    }
    throw Error(errc::malformed,
                "unrecognized line tag '" + std::string(tag) + "'",
                lines.number);
  }

  if (!have_header) {
    throw Error(errc::missing_header, "no 'p edge n m' line found",
                std::max(1, lines.number));
  }
  if (seen != header.m) {
    throw Error(errc::edge_count_mismatch,
                "declared " + std::to_string(header.m) + " edges, found " +
                    std::to_string(seen),
                std::max(1, lines.number));
  }
  GraphDocument doc;
  doc.format = GraphFormat::Dimacs;
  std::vector<std::string> labels(header.n);
  for (int v = 0; v < header.n; ++v) labels[v] = std::to_string(v + 1);
  doc.labels = std::move(labels);
  doc.graph = build_graph(header.n, acc.pairs);
  return doc;
}

GraphDocument parse_graph_auto(std::string_view text) {
  Lines lines{text};
  while (auto line = lines.next()) {
    if (is_blank(*line)) continue;
    std::vector<std::string_view> fields = split_fields(*line);
    char head = fields[0].front();
    if (head == 'c' || head == 'p') return parse_dimacs(text);
    return parse_edgelist(text);
  }
  return parse_edgelist(text);  // empty input: let the edge list parser complain
}

std::string serialize_edgelist(const GraphDocument& doc) {
  const Graph& g = doc.graph;
  std::string out = std::to_string(g.vertex_count()) + " " +
                    std::to_string(g.edge_count()) + "\n";
  for (const EdgeRef& e : g.edges()) {
    out += std::to_string(e.u);
    out += ' ';
    out += std::to_string(e.v);
    out += '\n';
  }
  return out;
}

std::string serialize_dimacs(const GraphDocument& doc) {
  const Graph& g = doc.graph;
  std::string out = "p edge " + std::to_string(g.vertex_count()) + " " +
                    std::to_string(g.edge_count()) + "\n";
  for (const EdgeRef& e : g.edges()) {
    out += "e ";
    out += std::to_string(e.u + 1);
    out += ' ';
    out += std::to_string(e.v + 1);
    out += '\n';
  }
  return out;
}

std::string label_of(const GraphDocument& doc, Vertex v) {
  doc.graph.require_vertex(v);
  if (doc.labels) return (*doc.labels)[v];
  return std::to_string(v);
}

std::optional<Vertex> vertex_from_label(const GraphDocument& doc,
                                        const std::string& name) {
  if (doc.labels) {
    for (Vertex v = 0; v < doc.graph.vertex_count(); ++v) {
      if ((*doc.labels)[v] == name) return v;
    }
    return std::nullopt;
  }
  long long value = 0;
  const char* begin = name.data();
  const char* end = begin + name.size();
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr != end) return std::nullopt;
  if (value < 0 || value >= doc.graph.vertex_count()) return std::nullopt;
  return static_cast<Vertex>(value);
}

std::string graph_digest(const Graph& g) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  auto mix = [&h](std::uint64_t value) {
    for (int byte = 0; byte < 8; ++byte) {
      h ^= (value >> (8 * byte)) & 0xff;
      h *= 0x100000001b3ULL;
    }
  };
  mix(static_cast<std::uint64_t>(g.vertex_count()));
  mix(static_cast<std::uint64_t>(g.edge_count()));
  for (const EdgeRef& e : g.edges()) {
    mix((static_cast<std::uint64_t>(e.u) << 32) |
        static_cast<std::uint32_t>(e.v));
  }
  static const char* hex = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[i] = hex[h & 0xf];
    h >>= 4;
  }
  return out;
}

}  // namespace megkit
