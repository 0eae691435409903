#include "lapgraph/graph.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

namespace lapgraph {

namespace {

std::string pair_text(int i, int j) {
  // 1-based in diagnostics.
  return "(" + std::to_string(i + 1) + ", " + std::to_string(j + 1) + ")";
}

}  // namespace

Graph Graph::build(int n, const std::vector<std::pair<int, int>>& edges) {
  if (n < 1) throw std::invalid_argument("vertex count must be positive");
  std::set<std::pair<int, int>> seen;
  Graph g;
  g.n_ = n;
  g.adj_.assign(n, {});
  for (auto [i, j] : edges) {
    if (i < 0 || i >= n || j < 0 || j >= n) {
      throw std::invalid_argument("endpoint out of range: edge " + pair_text(i, j));
    }
    if (i == j) {
      throw std::invalid_argument("loop edge: " + pair_text(i, j));
    }
    auto e = std::minmax(i, j);
    if (!seen.insert(e).second) {
      throw std::invalid_argument("duplicate edge: " + pair_text(e.first, e.second));
    }
  }
  g.edges_.assign(seen.begin(), seen.end());
  for (auto [i, j] : g.edges_) {
    g.adj_[i].push_back(j);
    g.adj_[j].push_back(i);
  }
  for (auto& list : g.adj_) std::sort(list.begin(), list.end());
  return g;
}

bool Graph::adjacent(int u, int v) const {
  const auto& list = adj_[u];
  return std::binary_search(list.begin(), list.end(), v);
}

GraphFamily GraphFamily::path(int n) {
  if (n < 1) throw std::invalid_argument("path requires n >= 1");
  return {Kind::Path, 0, n};
}

GraphFamily GraphFamily::cycle(int n) {
  if (n < 3) throw std::invalid_argument("cycle requires n >= 3");
  return {Kind::Cycle, 0, n};
}

GraphFamily GraphFamily::complete(int n) {
  if (n < 1) throw std::invalid_argument("complete graph requires n >= 1");
  return {Kind::Complete, 0, n};
}

GraphFamily GraphFamily::complete_bipartite(int m, int n) {
  if (m < 1 || n < 1) throw std::invalid_argument("complete bipartite requires m, n >= 1");
  return {Kind::CompleteBipartite, m, n};
}

int GraphFamily::vertex_count() const {
  return kind == Kind::CompleteBipartite ? m + n : n;
}

Graph generate(const GraphFamily& family) {
  std::vector<std::pair<int, int>> edges;
  switch (family.kind) {
    case GraphFamily::Kind::Path:
      for (int i = 0; i + 1 < family.n; ++i) edges.emplace_back(i, i + 1);
      return Graph::build(family.n, edges);
    case GraphFamily::Kind::Cycle:
      for (int i = 0; i + 1 < family.n; ++i) edges.emplace_back(i, i + 1);
      edges.emplace_back(family.n - 1, 0);
      return Graph::build(family.n, edges);
    case GraphFamily::Kind::Complete:
      for (int i = 0; i < family.n; ++i)
        for (int j = i + 1; j < family.n; ++j) edges.emplace_back(i, j);
      return Graph::build(family.n, edges);
    case GraphFamily::Kind::CompleteBipartite:
      for (int i = 0; i < family.m; ++i)
        for (int j = 0; j < family.n; ++j) edges.emplace_back(i, family.m + j);
      return Graph::build(family.m + family.n, edges);
  }
  throw std::logic_error("unreachable family kind");
}

Graph star_of(const Graph& g) {
  const int n = g.vertex_count();
  auto edges = g.edges();
  for (int v = 0; v < n; ++v) edges.emplace_back(v, n);
  return Graph::build(n + 1, edges);
}

Graph attach_pendant(const Graph& g, int v) {
  const int n = g.vertex_count();
  if (v < 0 || v >= n) {
    throw std::invalid_argument("pendant anchor out of range: vertex " + std::to_string(v + 1));
  }
  auto edges = g.edges();
  edges.emplace_back(v, n);
  return Graph::build(n + 1, edges);
}

Graph delete_vertex(const Graph& g, int v) {
  const int n = g.vertex_count();
  if (v < 0 || v >= n) {
    throw std::invalid_argument("vertex out of range: " + std::to_string(v + 1));
  }
  if (n == 1) throw std::invalid_argument("cannot delete the only vertex");
  std::vector<std::pair<int, int>> edges;
  for (auto [i, j] : g.edges()) {
    if (i == v || j == v) continue;
    edges.emplace_back(i - (i > v ? 1 : 0), j - (j > v ? 1 : 0));
  }
  return Graph::build(n - 1, edges);
}

bool is_connected(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<char> seen(n, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    const int u = stack.back();
    stack.pop_back();
    for (int w : g.neighbors(u)) {
      if (!seen[w]) {
        seen[w] = 1;
        ++count;
        stack.push_back(w);
      }
    }
  }
  return count == n;
}

ExactMatrix laplacian(const Graph& g) {
  const auto n = static_cast<std::size_t>(g.vertex_count());
  ExactMatrix l(n, n);
  for (std::size_t i = 0; i < n; ++i) l(i, i) = g.degree(static_cast<int>(i));
  for (auto [i, j] : g.edges()) {
    l(i, j) = -1;
    l(j, i) = -1;
  }
  return l;
}

}  // namespace lapgraph
