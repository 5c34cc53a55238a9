#include "noncent/graph.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"

namespace noncent {

std::size_t NonCentralizerGraph::edge_count() const noexcept {
  const auto n = vertices.size();
  std::size_t squares = 0;
  for (const auto& p : parts) squares += p.size() * p.size();
  return (n * n - squares) / 2;
}

std::vector<std::size_t> NonCentralizerGraph::degrees() const {
  std::vector<std::size_t> part_size_of(vertices.empty() ? 0 : vertices.back() + 1, 0);
  for (const auto& p : parts)
    for (auto v : p) part_size_of[v] = p.size();
  std::vector<std::size_t> out;
  out.reserve(vertices.size());
  for (auto v : vertices) out.push_back(vertices.size() - part_size_of[v]);
  return out;
}

NonCentralizerGraph build_graph(const BetaPartition& beta, bool induced) {
  NonCentralizerGraph graph;
  graph.induced = induced;
  const std::size_t first = induced ? 1 : 0;
  for (std::size_t x = 0; x < beta.parent.order(); ++x) {
    if (induced && beta.class_of[x] == 0) continue;
    graph.vertices.push_back(static_cast<Element>(x));
    graph.labels.push_back(beta.parent.label(static_cast<Element>(x)));
  }
  for (std::size_t i = first; i < beta.size(); ++i) graph.parts.push_back(beta.classes[i]);
  return graph;
}

NonCentralizerGraph build_graph(const FiniteGroup& g, bool induced) { return build_graph(beta_partition(g), induced); }

std::vector<std::size_t> degree_sequence(const NonCentralizerGraph& graph) {
  std::vector<std::size_t> out;
  out.reserve(graph.vertex_count());
  for (const auto& p : graph.parts) out.insert(out.end(), p.size(), graph.vertex_count() - p.size());
  std::sort(out.begin(), out.end());
  return out;
}

EdgeSet oracle_graph(const FiniteGroup& g, bool induced) {
  if (g.order() > 256) throw Error(Errc::TooLarge, "oracle graph above order 256");
  const auto n = g.order();
  std::vector<ElementSet> cents;
  cents.reserve(n);
  for (std::size_t x = 0; x < n; ++x) cents.push_back(centralizer_set(g, static_cast<Element>(x)));
  std::vector<char> central(n, 0);
  for (std::size_t x = 0; x < n; ++x) central[x] = cents[x].count() == n;
  EdgeSet out;
  for (std::size_t u = 0; u < n; ++u) {
    if (induced && central[u]) continue;
    for (std::size_t v = u + 1; v < n; ++v) {
      if (induced && central[v]) continue;
      if (!(cents[u] == cents[v])) out.emplace(static_cast<Element>(u), static_cast<Element>(v));
    }
  }
  return out;
}

EdgeSet edges(const NonCentralizerGraph& graph) {
  EdgeSet out;
  for (std::size_t i = 0; i < graph.parts.size(); ++i)
    for (std::size_t j = i + 1; j < graph.parts.size(); ++j)
      for (auto u : graph.parts[i])
        for (auto v : graph.parts[j]) out.emplace(std::min(u, v), std::max(u, v));
  return out;
}

GraphFormat parse_graph_format(std::string_view name) {
  if (name == "dot") return GraphFormat::Dot;
  if (name == "edge-list") return GraphFormat::EdgeList;
  if (name == "parts-json") return GraphFormat::PartsJson;
  throw Error(Errc::UnknownFormat, std::string(name));
}

namespace {

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

std::string export_graph(const NonCentralizerGraph& graph, GraphFormat format) {
  std::ostringstream os;
  switch (format) {
    case GraphFormat::EdgeList:
      for (const auto& [u, v] : edges(graph)) os << u << ' ' << v << '\n';
      break;
    case GraphFormat::PartsJson: {
      nlohmann::json j;
      j["parts"] = graph.parts;
      j["induced"] = graph.induced;
      os << j.dump() << '\n';
      break;
    }
    case GraphFormat::Dot: {
      std::vector<std::string> label_of(graph.vertices.empty() ? 0 : graph.vertices.back() + 1);
      for (std::size_t i = 0; i < graph.vertices.size(); ++i) label_of[graph.vertices[i]] = graph.labels[i];
      os << "graph noncentralizer {\n";
      for (std::size_t i = 0; i < graph.parts.size(); ++i) {
        os << "  subgraph cluster_" << i << " {\n    label=\"part " << i << "\";\n";
        for (auto v : graph.parts[i]) os << "    " << v << " [label=\"" << dot_escape(label_of[v]) << "\"];\n";
        os << "  }\n";
      }
      for (const auto& [u, v] : edges(graph)) os << "  " << u << " -- " << v << ";\n";
      os << "}\n";
      break;
    }
  }
  return os.str();
}

}  // namespace noncent
