#include "layerdag/dag.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "layerdag/errors.hpp"
#include "layerdag/rng.hpp"

namespace layerdag {

namespace {

// Longest distance to a sink via reverse Kahn peeling. Throws StructuralError
// with a cycle witness when some nodes never become sinks.
std::vector<int> longest_sink_distance(int p, const std::vector<std::vector<int>>& parents,
                                       const std::vector<std::vector<int>>& children) {
  std::vector<int> out_degree(p + 1, 0);
  std::vector<int> distance(p + 1, 0);
  std::vector<int> queue;
  queue.reserve(p);
  for (int v = 1; v <= p; ++v) {
    out_degree[v] = static_cast<int>(children[v].size());
    if (out_degree[v] == 0) {
      queue.push_back(v);
    }
  }
  std::size_t head = 0;
  int processed = 0;
  while (head < queue.size()) {
    const int v = queue[head++];
    ++processed;
    for (int parent : parents[v]) {
      distance[parent] = std::max(distance[parent], distance[v] + 1);
      if (--out_degree[parent] == 0) {
        queue.push_back(parent);
      }
    }
  }
  if (processed < p) {
    // Every unprocessed node still has a child among the unprocessed set;
    // walking child pointers inside that set must revisit a node.
    int start = 0;
    for (int v = 1; v <= p; ++v) {
      if (out_degree[v] > 0) {
        start = v;
        break;
      }
    }
    std::vector<int> seen_at(p + 1, -1);
    std::vector<int> path;
    int v = start;
    while (seen_at[v] < 0) {
      seen_at[v] = static_cast<int>(path.size());
      path.push_back(v);
      for (int child : children[v]) {
        if (out_degree[child] > 0) {
          v = child;
          break;
        }
      }
    }
    std::ostringstream msg;
    msg << "directed cycle detected: ";
    for (std::size_t i = seen_at[v]; i < path.size(); ++i) {
      msg << path[i] << " -> ";
    }
    msg << v;
    throw StructuralError(msg.str());
  }
  return distance;
}

}  // namespace

LayerDecomposition::LayerDecomposition(std::vector<std::vector<int>> layers)
    : layers_(std::move(layers)) {
  for (auto& layer : layers_) {
    std::sort(layer.begin(), layer.end());
  }
}

int LayerDecomposition::layer_of(int node) const {
  for (int t = 0; t < layer_count(); ++t) {
    if (std::binary_search(layers_[t].begin(), layers_[t].end(), node)) {
      return t;
    }
  }
  throw std::invalid_argument("node " + std::to_string(node) + " not in any layer");
}

int LayerDecomposition::node_count() const {
  int total = 0;
  for (const auto& layer : layers_) {
    total += static_cast<int>(layer.size());
  }
  return total;
}

std::string LayerDecomposition::to_string() const {
  std::ostringstream out;
  for (int t = 0; t < layer_count(); ++t) {
    out << "A" << t << " = {";
    for (std::size_t i = 0; i < layers_[t].size(); ++i) {
      out << (i ? "," : "") << layers_[t][i];
    }
    out << "}";
    if (t + 1 < layer_count()) {
      out << " ";
    }
  }
  return out.str();
}

Dag::Dag(int p, std::vector<Edge> edges) : p_(p), edges_(std::move(edges)) {
  if (p_ < 0) {
    throw std::invalid_argument("node count must be nonnegative");
  }
  std::sort(edges_.begin(), edges_.end());
  parents_.assign(p_ + 1, {});
  children_.assign(p_ + 1, {});
  const Edge* previous = nullptr;
  for (const Edge& e : edges_) {
    if (e.parent < 1 || e.parent > p_ || e.child < 1 || e.child > p_) {
      throw StructuralError("edge " + std::to_string(e.parent) + " -> " +
                            std::to_string(e.child) + " references a label outside 1.." +
                            std::to_string(p_));
    }
    if (e.parent == e.child) {
      throw StructuralError("self-loop at node " + std::to_string(e.parent));
    }
    if (previous != nullptr && *previous == e) {
      throw StructuralError("duplicate edge " + std::to_string(e.parent) + " -> " +
                            std::to_string(e.child));
    }
    previous = &e;
    parents_[e.child].push_back(e.parent);
    children_[e.parent].push_back(e.child);
  }
  longest_sink_distance(p_, parents_, children_);  // acyclicity check
}

bool Dag::has_edge(int parent, int child) const {
  return std::binary_search(edges_.begin(), edges_.end(), Edge{parent, child});
}

const std::vector<int>& Dag::parents_of(int node) const {
  return parents_.at(node);
}

const std::vector<int>& Dag::children_of(int node) const {
  return children_.at(node);
}

std::vector<int> Dag::markov_blanket(int node) const {
  std::vector<int> blanket = parents_of(node);
  for (int child : children_of(node)) {
    blanket.push_back(child);
    for (int co_parent : parents_of(child)) {
      if (co_parent != node) {
        blanket.push_back(co_parent);
      }
    }
  }
  std::sort(blanket.begin(), blanket.end());
  blanket.erase(std::unique(blanket.begin(), blanket.end()), blanket.end());
  return blanket;
}

LayerDecomposition layer_decompose(const Dag& dag) {
  const int p = dag.node_count();
  std::vector<std::vector<int>> parents(p + 1);
  std::vector<std::vector<int>> children(p + 1);
  for (int v = 1; v <= p; ++v) {
    parents[v] = dag.parents_of(v);
    children[v] = dag.children_of(v);
  }
  const std::vector<int> distance = longest_sink_distance(p, parents, children);
  int depth = 0;
  for (int v = 1; v <= p; ++v) {
    depth = std::max(depth, distance[v] + 1);
  }
  std::vector<std::vector<int>> layers(p > 0 ? depth : 0);
  for (int v = 1; v <= p; ++v) {
    layers[distance[v]].push_back(v);
  }
  return LayerDecomposition(std::move(layers));
}

Dag generate_hub(int p) {
  if (p < 2) {
    throw std::invalid_argument("hub graph requires p >= 2");
  }
  std::vector<Edge> edges;
  edges.reserve(p - 1);
  for (int k = 2; k <= p; ++k) {
    edges.push_back({1, k});
  }
  return Dag(p, std::move(edges));
}

Dag generate_ba(int p, int m_edges, std::uint64_t seed) {
  if (p < 1) {
    throw std::invalid_argument("preferential-attachment graph requires p >= 1");
  }
  if (m_edges < 1) {
    throw std::invalid_argument("edges per node must be >= 1");
  }
  RngStream stream(seed);
  std::vector<Edge> edges;
  std::vector<std::uint64_t> degree(p + 1, 0);
  for (int v = 2; v <= p; ++v) {
    const int wanted = std::min(m_edges, v - 1);
    std::vector<int> pool(v - 1);
    std::iota(pool.begin(), pool.end(), 1);
    for (int draw = 0; draw < wanted; ++draw) {
      std::uint64_t total = 0;
      for (int candidate : pool) {
        total += degree[candidate] + 1;
      }
      std::uint64_t ticket = stream.below(total);
      std::size_t chosen = 0;
      for (; chosen < pool.size(); ++chosen) {
        const std::uint64_t weight = degree[pool[chosen]] + 1;
        if (ticket < weight) {
          break;
        }
        ticket -= weight;
      }
      const int parent = pool[chosen];
      pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(chosen));
      edges.push_back({parent, v});
      ++degree[parent];
      ++degree[v];
    }
  }
  return Dag(p, std::move(edges));
}

}  // namespace layerdag
