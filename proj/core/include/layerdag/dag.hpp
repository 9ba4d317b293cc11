#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace layerdag {

/// Directed edge: `parent -> child`. Node labels run 1..p.
struct Edge {
  int parent = 0;
  int child = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Ordered partition of the node set by longest directed distance to a sink.
/// Layer 0 holds all sinks and isolated nodes; a node's parents always sit in
/// strictly higher layers.
class LayerDecomposition {
 public:
  LayerDecomposition() = default;
  explicit LayerDecomposition(std::vector<std::vector<int>> layers);

  [[nodiscard]] int layer_count() const { return static_cast<int>(layers_.size()); }
  [[nodiscard]] const std::vector<std::vector<int>>& layers() const { return layers_; }
  [[nodiscard]] const std::vector<int>& layer(int t) const { return layers_.at(t); }

  /// Layer index of `node`; throws if the node is not present.
  [[nodiscard]] int layer_of(int node) const;

  [[nodiscard]] int node_count() const;
  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const LayerDecomposition&, const LayerDecomposition&) = default;

 private:
  std::vector<std::vector<int>> layers_;  // each sorted ascending
};

/// Immutable directed acyclic graph over nodes 1..p.
///
/// Construction validates labels, rejects self-loops and duplicates, and
/// runs a topological sort; a cycle raises StructuralError naming a witness.
class Dag {
 public:
  Dag() = default;
  Dag(int p, std::vector<Edge> edges);

  [[nodiscard]] int node_count() const { return p_; }
  [[nodiscard]] int edge_count() const { return static_cast<int>(edges_.size()); }
  [[nodiscard]] const std::vector<Edge>& edges() const { return edges_; }
  [[nodiscard]] bool has_edge(int parent, int child) const;

  /// Parents of `node`, sorted ascending.
  [[nodiscard]] const std::vector<int>& parents_of(int node) const;
  /// Children of `node`, sorted ascending.
  [[nodiscard]] const std::vector<int>& children_of(int node) const;

  /// Markov blanket: parents, children, and co-parents of children.
  [[nodiscard]] std::vector<int> markov_blanket(int node) const;

 private:
  int p_ = 0;
  std::vector<Edge> edges_;                    // sorted
  std::vector<std::vector<int>> parents_;      // index 0 unused
  std::vector<std::vector<int>> children_;
};

/// Unique bottom-up layer decomposition: node k's layer index equals the
/// length of the longest directed path from k to any sink.
[[nodiscard]] LayerDecomposition layer_decompose(const Dag& dag);

/// Hub graph: node 1 is the sole parent of nodes 2..p. Requires p >= 2.
[[nodiscard]] Dag generate_hub(int p);

/// Preferential-attachment DAG. Nodes arrive in label order; node v draws
/// min(m_edges, v-1) distinct parents from earlier nodes, each sampled
/// without replacement with probability proportional to (degree + 1).
[[nodiscard]] Dag generate_ba(int p, int m_edges, std::uint64_t seed);

}  // namespace layerdag
