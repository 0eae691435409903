#pragma once

#include <utility>
#include <vector>

#include "lapgraph/matrix.hpp"

namespace lapgraph {

// Simple undirected graph on n labeled vertices. Vertices are 0-based in
// code; every user-facing format is 1-based to match the v1..vn labeling.
class Graph {
 public:
  // Validates the edge list: no loops, no duplicates, endpoints in range.
  static Graph build(int n, const std::vector<std::pair<int, int>>& edges);

  int vertex_count() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }

  // Canonical edge list: each pair (i, j) with i < j, sorted lexicographically.
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }

  const std::vector<int>& neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }
  bool adjacent(int u, int v) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  Graph() = default;

  int n_ = 1;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::vector<int>> adj_;
};

struct GraphFamily {
  enum class Kind { Path, Cycle, Complete, CompleteBipartite };

  Kind kind = Kind::Path;
  int m = 0;  // side-A size for CompleteBipartite, unused otherwise
  int n = 0;  // vertex count; side-B size for CompleteBipartite

  static GraphFamily path(int n);
  static GraphFamily cycle(int n);
  static GraphFamily complete(int n);
  static GraphFamily complete_bipartite(int m, int n);

  int vertex_count() const;

  friend bool operator==(const GraphFamily&, const GraphFamily&) = default;
};

Graph generate(const GraphFamily& family);

// New vertex n adjacent to every existing vertex.
Graph star_of(const Graph& g);

// New degree-1 vertex n attached to v.
Graph attach_pendant(const Graph& g, int v);

// Removes v; vertices above v shift down by one. Requires g.vertex_count() > 1.
Graph delete_vertex(const Graph& g, int v);

bool is_connected(const Graph& g);

// Degree diagonal minus adjacency; integer-valued, zero row sums.
ExactMatrix laplacian(const Graph& g);

}  // namespace lapgraph
