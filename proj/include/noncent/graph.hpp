#pragma once

#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "noncent/analysis.hpp"

namespace noncent {

/// Complete multipartite graph whose parts are the equal-centralizer
/// classes. Vertices are element indices of the parent group; two vertices
/// are adjacent exactly when they lie in different parts. Edges are never
/// stored.
struct NonCentralizerGraph {
  std::vector<Element> vertices;           // ascending element indices
  std::vector<std::string> labels;         // parallel to `vertices`
  std::vector<std::vector<Element>> parts;
  bool induced = false;

  std::size_t vertex_count() const noexcept { return vertices.size(); }
  std::size_t edge_count() const noexcept;
  /// Degree of every vertex, in vertex order.
  std::vector<std::size_t> degrees() const;
};

/// Builds the graph on G, or on G \ Z(G) when `induced` is set.
NonCentralizerGraph build_graph(const FiniteGroup& g, bool induced);
NonCentralizerGraph build_graph(const BetaPartition& beta, bool induced);

/// Ascending degree multiset, computed from part sizes.
std::vector<std::size_t> degree_sequence(const NonCentralizerGraph& graph);

using EdgeSet = std::set<std::pair<Element, Element>>;

/// Independent edge set from direct centralizer comparison (u < v).
/// Throws Errc::TooLarge above order 256.
EdgeSet oracle_graph(const FiniteGroup& g, bool induced);

/// Edges u < v generated from the part structure, ascending.
EdgeSet edges(const NonCentralizerGraph& graph);

enum class GraphFormat { Dot, EdgeList, PartsJson };

/// Parses "dot", "edge-list" or "parts-json"; throws Errc::UnknownFormat.
GraphFormat parse_graph_format(std::string_view name);
std::string export_graph(const NonCentralizerGraph& graph, GraphFormat format);

}  // namespace noncent
