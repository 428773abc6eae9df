#include "hypograph/graph_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace hypograph {

using nlohmann::json;

std::string graph_to_json(const SimpleGraph& g) {
  json j;
  j["n"] = g.order();
  j["edges"] = json::array();
  for (auto [u, v] : g.edges()) j["edges"].push_back({u, v});
  if (g.has_labels()) j["labels"] = g.labels();
  return j.dump(2);
}

SimpleGraph graph_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw GraphError(std::string("invalid graph JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("n") || !j["n"].is_number_integer())
    throw GraphError("graph JSON needs an integer field \"n\"");
  int n = j["n"].get<int>();
  std::vector<std::pair<int, int>> edges;
  if (j.contains("edges")) {
    if (!j["edges"].is_array()) throw GraphError("graph JSON field \"edges\" must be an array");
    for (const auto& e : j["edges"]) {
      if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
          !e[1].is_number_integer())
        throw GraphError("graph JSON edges must be [u,v] integer pairs");
      edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
  }
  std::vector<std::string> labels;
  if (j.contains("labels")) {
    if (!j["labels"].is_array()) throw GraphError("graph JSON field \"labels\" must be an array");
    for (const auto& l : j["labels"]) {
      if (!l.is_string()) throw GraphError("graph JSON labels must be strings");
      labels.push_back(l.get<std::string>());
    }
  }
  return make_graph(n, edges, std::move(labels));
}

namespace {

constexpr int kG6Low = 63;    // printable offset
constexpr int kG6High = 126;

int g6_value(char c, const std::string& line) {
  if (c < kG6Low || c > kG6High)
    throw GraphError("invalid graph6 character in line: " + line);
  return c - kG6Low;
}

}  // namespace

SimpleGraph graph_from_graph6(const std::string& raw) {
  std::string line = raw;
  const std::string header = ">>graph6<<";
  if (line.rfind(header, 0) == 0) line = line.substr(header.size());
  while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.pop_back();
  if (line.empty()) throw GraphError("empty graph6 line");

  std::size_t pos = 0;
  long n;
  if (line[pos] == 126) {
    if (line.size() >= 2 && line[1] == 126)
      throw GraphError("graph6 orders beyond 2^18 are not supported");
    if (line.size() < 4) throw GraphError("truncated graph6 order: " + line);
    n = 0;
    for (int i = 1; i <= 3; ++i) n = (n << 6) | g6_value(line[i], line);
    pos = 4;
  } else {
    n = g6_value(line[pos], line);
    pos = 1;
  }
  if (n < 1 || n > kMaxOrder)
    throw GraphError("graph6 order " + std::to_string(n) + " outside supported range 1.." +
                     std::to_string(kMaxOrder));

  long total_bits = n * (n - 1) / 2;
  long needed = (total_bits + 5) / 6;
  if (static_cast<long>(line.size()) - static_cast<long>(pos) < needed)
    throw GraphError("truncated graph6 body: " + line);

  std::vector<std::pair<int, int>> edges;
  long bit = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++bit) {
      int chunk = g6_value(line[pos + bit / 6], line);
      if ((chunk >> (5 - bit % 6)) & 1) edges.emplace_back(i, j);
    }
  }
  return make_graph(static_cast<int>(n), edges);
}

std::string graph_to_graph6(const SimpleGraph& g) {
  int n = g.order();
  std::string out;
  if (n < kG6Low) {
    out.push_back(static_cast<char>(n + kG6Low));
  } else {
    out.push_back(static_cast<char>(126));
    out.push_back(static_cast<char>(((n >> 12) & 0x3f) + kG6Low));
    out.push_back(static_cast<char>(((n >> 6) & 0x3f) + kG6Low));
    out.push_back(static_cast<char>((n & 0x3f) + kG6Low));
  }
  int chunk = 0, filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      chunk = (chunk << 1) | (g.edge(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(chunk + kG6Low));
        chunk = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((chunk << (6 - filled)) + kG6Low));
  return out;
}

std::vector<SimpleGraph> read_graph6(std::istream& in) {
  std::vector<SimpleGraph> graphs;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    graphs.push_back(graph_from_graph6(line));
  }
  return graphs;
}

SimpleGraph load_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw GraphError("cannot open graph file: " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  std::string text = buffer.str();
  std::size_t first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) throw GraphError("empty graph file: " + path);
  if (text[first] == '{') return graph_from_json(text);
  std::istringstream lines(text);
  auto graphs = read_graph6(lines);
  if (graphs.empty()) throw GraphError("no graphs in file: " + path);
  return graphs.front();
}

std::string graph_to_dot(const SimpleGraph& g, const std::string& name) {
  std::ostringstream out;
  out << "graph " << name << " {\n";
  for (int v = 0; v < g.order(); ++v)
    out << "  n" << v << " [label=\"" << g.label(v) << "\"];\n";
  for (auto [u, v] : g.edges()) out << "  n" << u << " -- n" << v << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace hypograph
