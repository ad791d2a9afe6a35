#include <algorithm>
#include <limits>
#include <queue>
#include <stdexcept>

#include "tg/graph.hpp"

namespace tg {

namespace {

class HopcroftKarp {
 public:
  explicit HopcroftKarp(const BipartiteGraph& g)
      : g_(g),
        mate_a_(g.a_count(), -1),
        mate_b_(g.b_count(), -1),
        level_(g.a_count(), 0),
        next_(g.a_count(), 0) {}

  std::size_t run() {
    std::size_t size = 0;
    while (layer()) {
      std::fill(next_.begin(), next_.end(), 0);
      for (int a = 0; a < g_.a_count(); ++a) {
        if (mate_a_[a] < 0 && augment(a)) ++size;
      }
    }
    return size;
  }

  std::vector<int>& mate_a() { return mate_a_; }
  std::vector<int>& mate_b() { return mate_b_; }

 private:
  static constexpr int kInf = std::numeric_limits<int>::max();

  bool layer() {
    std::queue<int> frontier;
    for (int a = 0; a < g_.a_count(); ++a) {
      if (mate_a_[a] < 0) {
        level_[a] = 0;
        frontier.push(a);
      } else {
        level_[a] = kInf;
      }
    }
    bool found = false;
    while (!frontier.empty()) {
      int a = frontier.front();
      frontier.pop();
      for (int b : g_.a_neighbors(a)) {
        int next = mate_b_[b];
        if (next < 0) {
          found = true;
        } else if (level_[next] == kInf) {
          level_[next] = level_[a] + 1;
          frontier.push(next);
        }
      }
    }
    return found;
  }

  bool augment(int a) {
    const auto& nbrs = g_.a_neighbors(a);
    for (; next_[a] < static_cast<int>(nbrs.size()); ++next_[a]) {
      int b = nbrs[next_[a]];
      int next = mate_b_[b];
      if (next < 0 || (level_[next] == level_[a] + 1 && augment(next))) {
        mate_a_[a] = b;
        mate_b_[b] = a;
        ++next_[a];
        return true;
      }
    }
    level_[a] = kInf;
    return false;
  }

  const BipartiteGraph& g_;
  std::vector<int> mate_a_;
  std::vector<int> mate_b_;
  std::vector<int> level_;
  std::vector<int> next_;
};

}  // namespace

BipartiteMatching max_matching_bipartite(const BipartiteGraph& g) {
  HopcroftKarp hk(g);
  BipartiteMatching m;
  m.size = hk.run();
  m.mate_of_a = std::move(hk.mate_a());
  m.mate_of_b = std::move(hk.mate_b());

  // König: Z = vertices reachable from free A vertices along alternating
  // paths; cover = (A \ Z) + (B & Z).
  std::vector<char> za(g.a_count(), 0), zb(g.b_count(), 0);
  std::queue<int> frontier;
  for (int a = 0; a < g.a_count(); ++a) {
    if (m.mate_of_a[a] < 0) {
      za[a] = 1;
      frontier.push(a);
    }
  }
  while (!frontier.empty()) {
    int a = frontier.front();
    frontier.pop();
    for (int b : g.a_neighbors(a)) {
      if (zb[b] || m.mate_of_a[a] == b) continue;
      zb[b] = 1;
      int next = m.mate_of_b[b];
      if (next >= 0 && !za[next]) {
        za[next] = 1;
        frontier.push(next);
      }
    }
  }
  for (int a = 0; a < g.a_count(); ++a) {
    if (!za[a]) m.cover_a.push_back(a);
  }
  for (int b = 0; b < g.b_count(); ++b) {
    if (zb[b]) m.cover_b.push_back(b);
  }
  if (m.cover_a.size() + m.cover_b.size() != m.size) {
    throw std::logic_error("König cover size differs from matching size");
  }
  for (int a = 0; a < g.a_count(); ++a) {
    if (!za[a]) continue;
    for (int b : g.a_neighbors(a)) {
      if (!zb[b]) throw std::logic_error("König cover misses an edge");
    }
  }
  return m;
}

namespace {

// Edmonds' blossom algorithm, BFS from each free vertex with blossom
// contraction through the base array.
class Blossom {
 public:
  explicit Blossom(const Graph& g)
      : g_(g),
        n_(g.order()),
        mate_(n_, -1),
        parent_(n_),
        base_(n_),
        in_queue_(n_),
        in_blossom_(n_) {}

  Matching run() {
    // Greedy start.
    for (Edge e : g_.edges()) {
      if (mate_[e.u] < 0 && mate_[e.v] < 0) {
        mate_[e.u] = e.v;
        mate_[e.v] = e.u;
      }
    }
    for (int v = 0; v < n_; ++v) {
      if (mate_[v] >= 0) continue;
      int end = find_path(v);
      while (end >= 0) {
        int pv = parent_[end];
        int ppv = mate_[pv];
        mate_[end] = pv;
        mate_[pv] = end;
        end = ppv;
      }
    }
    Matching m;
    m.mate = mate_;
    for (int v = 0; v < n_; ++v) {
      if (mate_[v] > v) ++m.size;
    }
    return m;
  }

 private:
  int lca(int a, int b) {
    std::vector<char> used(n_, 0);
    while (true) {
      a = base_[a];
      used[a] = 1;
      if (mate_[a] < 0) break;
      a = parent_[mate_[a]];
    }
    while (true) {
      b = base_[b];
      if (used[b]) return b;
      b = parent_[mate_[b]];
    }
  }

  void mark_path(int v, int b, int child) {
    while (base_[v] != b) {
      in_blossom_[base_[v]] = 1;
      in_blossom_[base_[mate_[v]]] = 1;
      parent_[v] = child;
      child = mate_[v];
      v = parent_[mate_[v]];
    }
  }

  int find_path(int root) {
    std::fill(parent_.begin(), parent_.end(), -1);
    std::fill(in_queue_.begin(), in_queue_.end(), 0);
    for (int i = 0; i < n_; ++i) base_[i] = i;
    std::queue<int> q;
    q.push(root);
    in_queue_[root] = 1;
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int to : g_.neighbors(v)) {
        if (base_[v] == base_[to] || mate_[v] == to) continue;
        if (to == root || (mate_[to] >= 0 && parent_[mate_[to]] >= 0)) {
          int cur = lca(v, to);
          std::fill(in_blossom_.begin(), in_blossom_.end(), 0);
          mark_path(v, cur, to);
          mark_path(to, cur, v);
          for (int i = 0; i < n_; ++i) {
            if (in_blossom_[base_[i]]) {
              base_[i] = cur;
              if (!in_queue_[i]) {
                in_queue_[i] = 1;
                q.push(i);
              }
            }
          }
        } else if (parent_[to] < 0) {
          parent_[to] = v;
          if (mate_[to] < 0) return to;
          in_queue_[mate_[to]] = 1;
          q.push(mate_[to]);
        }
      }
    }
    return -1;
  }

  const Graph& g_;
  int n_;
  std::vector<int> mate_;
  std::vector<int> parent_;
  std::vector<int> base_;
  std::vector<char> in_queue_;
  std::vector<char> in_blossom_;
};

}  // namespace

Matching max_matching_general(const Graph& g) { return Blossom(g).run(); }

}  // namespace tg
