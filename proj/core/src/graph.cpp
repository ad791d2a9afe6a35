#include "tg/graph.hpp"

#include <algorithm>
#include <queue>
#include <string>

#include "tg/error.hpp"

namespace tg {

namespace {

std::string edge_name(int u, int v) {
  return "(" + std::to_string(u + 1) + "," + std::to_string(v + 1) + ")";
}

}  // namespace

VertexSet to_vertex_set(VertexMask mask) { return Coalition(mask).members(); }

VertexMask to_mask(const VertexSet& vertices) {
  return Coalition::of(std::span<const int>(vertices)).mask();
}

Graph::Graph(int vertices) : Graph(vertices, {}) {}

Graph::Graph(int vertices, const std::vector<Edge>& edges) : n_(vertices) {
  if (n_ < 0 || n_ > 64) {
    throw InvalidInput("graph order " + std::to_string(n_) + " outside 0..64");
  }
  adjacency_.assign(n_, {});
  masks_.assign(n_, 0);
  for (Edge e : edges) {
    if (e.u < 0 || e.v < 0 || e.u >= n_ || e.v >= n_) {
      throw InvalidInput("edge " + edge_name(e.u, e.v) + " has an endpoint outside 1.." +
                         std::to_string(n_));
    }
    if (e.u == e.v) throw InvalidInput("self-loop at vertex " + std::to_string(e.u + 1));
    if (e.u > e.v) std::swap(e.u, e.v);
    if (adjacent(e.u, e.v)) throw InvalidInput("duplicate edge " + edge_name(e.u, e.v));
    masks_[e.u] |= VertexMask{1} << e.v;
    masks_[e.v] |= VertexMask{1} << e.u;
    edges_.push_back(e);
  }
  std::sort(edges_.begin(), edges_.end());
  for (Edge e : edges_) {
    adjacency_[e.u].push_back(e.v);
    adjacency_[e.v].push_back(e.u);
  }
  for (auto& list : adjacency_) std::sort(list.begin(), list.end());
}

bool Graph::has_isolated_vertex() const {
  return std::any_of(masks_.begin(), masks_.end(), [](VertexMask m) { return m == 0; });
}

Graph Graph::induced(const VertexSet& vertices) const {
  std::vector<int> local(n_, -1);
  for (std::size_t k = 0; k < vertices.size(); ++k) local[vertices[k]] = static_cast<int>(k);
  std::vector<Edge> sub;
  for (Edge e : edges_) {
    if (local[e.u] >= 0 && local[e.v] >= 0) sub.push_back({local[e.u], local[e.v]});
  }
  return Graph(static_cast<int>(vertices.size()), sub);
}

Graph Graph::without(int vertex) const {
  VertexSet rest;
  for (int v = 0; v < n_; ++v) {
    if (v != vertex) rest.push_back(v);
  }
  return induced(rest);
}

std::vector<VertexSet> Graph::components() const {
  std::vector<VertexSet> out;
  std::vector<char> seen(n_, 0);
  for (int s = 0; s < n_; ++s) {
    if (seen[s]) continue;
    VertexSet comp;
    std::queue<int> frontier;
    frontier.push(s);
    seen[s] = 1;
    while (!frontier.empty()) {
      int v = frontier.front();
      frontier.pop();
      comp.push_back(v);
      for (int w : adjacency_[v]) {
        if (!seen[w]) {
          seen[w] = 1;
          frontier.push(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

std::optional<std::vector<int>> Graph::two_colouring() const {
  std::vector<int> side(n_, -1);
  for (int s = 0; s < n_; ++s) {
    if (side[s] >= 0) continue;
    side[s] = 0;
    std::queue<int> frontier;
    frontier.push(s);
    while (!frontier.empty()) {
      int v = frontier.front();
      frontier.pop();
      for (int w : adjacency_[v]) {
        if (side[w] < 0) {
          side[w] = 1 - side[v];
          frontier.push(w);
        } else if (side[w] == side[v]) {
          return std::nullopt;
        }
      }
    }
  }
  return side;
}

Graph pair_graph(const SimpleGame& game) {
  std::vector<Edge> edges;
  for (Coalition w : game.minimal_winning()) {
    if (w.size() == 2) {
      auto m = w.members();
      edges.push_back({m[0], m[1]});
    }
  }
  return Graph(game.players(), edges);
}

SimpleGame graphic_game(const Graph& g) {
  std::vector<Coalition> winners;
  winners.reserve(g.size());
  for (Edge e : g.edges()) winners.push_back(Coalition::of({e.u, e.v}));
  return SimpleGame(g.order(), std::move(winners));
}

BipartiteGraph::BipartiteGraph(int vertices, VertexSet a_side, VertexSet b_side,
                               const std::vector<Edge>& edges) {
  n_ = vertices;
  a_ = std::move(a_side);
  b_ = std::move(b_side);
  std::sort(a_.begin(), a_.end());
  std::sort(b_.begin(), b_.end());
  local_.assign(n_, {false, -1});
  std::vector<char> seen(n_, 0);
  auto claim = [&](int v, bool in_a, int idx) {
    if (v < 0 || v >= n_) {
      throw InvalidInput("side vertex " + std::to_string(v + 1) + " outside 1.." +
                         std::to_string(n_));
    }
    if (seen[v]) throw InvalidInput("vertex " + std::to_string(v + 1) + " listed twice");
    seen[v] = 1;
    local_[v] = {in_a, idx};
  };
  for (std::size_t i = 0; i < a_.size(); ++i) claim(a_[i], true, static_cast<int>(i));
  for (std::size_t j = 0; j < b_.size(); ++j) claim(b_[j], false, static_cast<int>(j));
  for (int v = 0; v < n_; ++v) {
    if (!seen[v]) throw InvalidInput("vertex " + std::to_string(v + 1) + " on neither side");
  }
  a_adj_.assign(a_.size(), {});
  b_adj_.assign(b_.size(), {});
  for (Edge e : edges) {
    if (e.u < 0 || e.v < 0 || e.u >= n_ || e.v >= n_) {
      throw InvalidInput("edge " + edge_name(e.u, e.v) + " outside the vertex range");
    }
    int a = e.u, b = e.v;
    if (!local_[a].first) std::swap(a, b);
    if (!local_[a].first || local_[b].first) {
      throw InvalidInput("edge " + edge_name(e.u, e.v) + " does not cross the sides");
    }
    a_adj_[local_[a].second].push_back(local_[b].second);
  }
  index();
}

void BipartiteGraph::index() {
  b_adj_.assign(b_.size(), {});
  edge_count_ = 0;
  for (std::size_t i = 0; i < a_adj_.size(); ++i) {
    auto& list = a_adj_[i];
    std::sort(list.begin(), list.end());
    if (std::adjacent_find(list.begin(), list.end()) != list.end()) {
      throw InvalidInput("duplicate edge at A vertex " + std::to_string(a_[i] + 1));
    }
    for (int j : list) b_adj_[j].push_back(static_cast<int>(i));
    edge_count_ += list.size();
  }
}

BipartiteGraph BipartiteGraph::from_graph(const Graph& g, const VertexSet& a_side) {
  std::vector<char> in_a(g.order(), 0);
  for (int v : a_side) {
    if (v < 0 || v >= g.order()) {
      throw InvalidInput("A-side vertex " + std::to_string(v + 1) + " out of range");
    }
    in_a[v] = 1;
  }
  VertexSet a, b;
  for (int v = 0; v < g.order(); ++v) (in_a[v] ? a : b).push_back(v);
  return BipartiteGraph(g.order(), a, b, g.edges());
}

BipartiteGraph BipartiteGraph::from_local(int a_count, int b_count,
                                          const std::vector<std::pair<int, int>>& edges) {
  BipartiteGraph g;
  g.n_ = a_count + b_count;
  for (int i = 0; i < a_count; ++i) g.a_.push_back(i);
  for (int j = 0; j < b_count; ++j) g.b_.push_back(a_count + j);
  g.local_.resize(g.n_);
  for (int i = 0; i < a_count; ++i) g.local_[i] = {true, i};
  for (int j = 0; j < b_count; ++j) g.local_[a_count + j] = {false, j};
  g.a_adj_.assign(a_count, {});
  for (auto [i, j] : edges) {
    if (i < 0 || i >= a_count || j < 0 || j >= b_count) {
      throw InvalidInput("local edge out of range");
    }
    g.a_adj_[i].push_back(j);
  }
  g.index();
  return g;
}

std::vector<Edge> BipartiteGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (std::size_t i = 0; i < a_adj_.size(); ++i) {
    for (int j : a_adj_[i]) out.push_back({a_[i], b_[j]});
  }
  return out;
}

BipartiteGraph BipartiteGraph::induced_local(const std::vector<int>& a_local,
                                             const std::vector<int>& b_local) const {
  BipartiteGraph g;
  g.n_ = n_;
  std::vector<int> b_map(b_.size(), -1);
  std::vector<int> a_sorted = a_local, b_sorted = b_local;
  std::sort(a_sorted.begin(), a_sorted.end());
  std::sort(b_sorted.begin(), b_sorted.end());
  for (int i : a_sorted) g.a_.push_back(a_[i]);
  for (std::size_t k = 0; k < b_sorted.size(); ++k) {
    g.b_.push_back(b_[b_sorted[k]]);
    b_map[b_sorted[k]] = static_cast<int>(k);
  }
  g.local_.assign(n_, {false, -1});
  for (std::size_t k = 0; k < g.a_.size(); ++k) g.local_[g.a_[k]] = {true, static_cast<int>(k)};
  for (std::size_t k = 0; k < g.b_.size(); ++k) g.local_[g.b_[k]] = {false, static_cast<int>(k)};
  g.a_adj_.assign(g.a_.size(), {});
  for (std::size_t k = 0; k < a_sorted.size(); ++k) {
    for (int j : a_adj_[a_sorted[k]]) {
      if (b_map[j] >= 0) g.a_adj_[k].push_back(b_map[j]);
    }
  }
  g.index();
  return g;
}

Graph strong_product_p2(const Graph& g) {
  const int n = g.order();
  if (2 * n > 64) throw LimitExceeded("strong product would exceed 64 vertices");
  std::vector<Edge> edges;
  for (Edge e : g.edges()) {
    edges.push_back({e.u, e.v});
    edges.push_back({n + e.u, n + e.v});
    edges.push_back({e.u, n + e.v});
    edges.push_back({e.v, n + e.u});
  }
  for (int i = 0; i < n; ++i) edges.push_back({i, n + i});
  return Graph(2 * n, edges);
}

bool is_independent(const Graph& g, VertexMask set) {
  for (VertexMask m = set; m != 0; m &= m - 1) {
    if (g.neighbor_mask(std::countr_zero(m)) & set) return false;
  }
  return true;
}

}  // namespace tg
