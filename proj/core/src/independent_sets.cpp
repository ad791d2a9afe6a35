#include <algorithm>
#include <bit>
#include <queue>

#include "tg/error.hpp"
#include "tg/graph.hpp"

namespace tg {

namespace {

// Edmonds-Karp on a small dense network with exact capacities.
class RationalFlow {
 public:
  explicit RationalFlow(int nodes) : cap_(nodes, std::vector<Rational>(nodes)), adj_(nodes) {}

  void add_arc(int from, int to, const Rational& capacity) {
    if (cap_[from][to] == 0 && cap_[to][from] == 0) {
      adj_[from].push_back(to);
      adj_[to].push_back(from);
    }
    cap_[from][to] += capacity;
  }

  Rational run(int s, int t) {
    Rational total = 0;
    const int n = static_cast<int>(cap_.size());
    while (true) {
      std::vector<int> parent(n, -1);
      parent[s] = s;
      std::queue<int> q;
      q.push(s);
      while (!q.empty() && parent[t] < 0) {
        int v = q.front();
        q.pop();
        for (int w : adj_[v]) {
          if (parent[w] < 0 && cap_[v][w] > 0) {
            parent[w] = v;
            q.push(w);
          }
        }
      }
      if (parent[t] < 0) return total;
      Rational push = cap_[parent[t]][t];
      for (int v = t; v != s; v = parent[v]) {
        if (cap_[parent[v]][v] < push) push = cap_[parent[v]][v];
      }
      for (int v = t; v != s; v = parent[v]) {
        cap_[parent[v]][v] -= push;
        cap_[v][parent[v]] += push;
      }
      total += push;
    }
  }

  std::vector<char> reachable(int s) const {
    std::vector<char> seen(cap_.size(), 0);
    std::queue<int> q;
    q.push(s);
    seen[s] = 1;
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int w : adj_[v]) {
        if (!seen[w] && cap_[v][w] > 0) {
          seen[w] = 1;
          q.push(w);
        }
      }
    }
    return seen;
  }

 private:
  std::vector<std::vector<Rational>> cap_;
  std::vector<std::vector<int>> adj_;
};

}  // namespace

WeightedSet mwis_bipartite(const BipartiteGraph& g, const std::vector<Rational>& weights) {
  if (weights.size() != static_cast<std::size_t>(g.order())) {
    throw InvalidInput("weight vector has " + std::to_string(weights.size()) +
                       " entries for " + std::to_string(g.order()) + " vertices");
  }
  Rational total = 0;
  for (std::size_t v = 0; v < weights.size(); ++v) {
    if (weights[v] < 0) {
      throw InvalidInput("negative weight at vertex " + std::to_string(v + 1));
    }
    total += weights[v];
  }
  // Minimum-weight vertex cover as a minimum s-t cut; the complement of the
  // cover is a maximum-weight independent set.
  const int na = g.a_count(), nb = g.b_count();
  const int s = na + nb, t = s + 1;
  RationalFlow flow(na + nb + 2);
  const Rational infinite = total + 1;
  for (int i = 0; i < na; ++i) {
    flow.add_arc(s, i, weights[g.a_side()[i]]);
    for (int j : g.a_neighbors(i)) flow.add_arc(i, na + j, infinite);
  }
  for (int j = 0; j < nb; ++j) flow.add_arc(na + j, t, weights[g.b_side()[j]]);
  const Rational cut = flow.run(s, t);
  const auto source_side = flow.reachable(s);

  WeightedSet out;
  for (int i = 0; i < na; ++i) {
    if (source_side[i]) out.vertices.push_back(g.a_side()[i]);
  }
  for (int j = 0; j < nb; ++j) {
    if (!source_side[na + j]) out.vertices.push_back(g.b_side()[j]);
  }
  std::sort(out.vertices.begin(), out.vertices.end());
  out.weight = total - cut;
  return out;
}

namespace {

class MisReverseSearch {
 public:
  MisReverseSearch(const Graph& g, const std::function<bool(VertexMask)>& visit)
      : g_(g), n_(g.order()), visit_(visit) {}

  void run() { descend(0, 0); }

 private:
  static VertexMask prefix(int i) { return i >= 64 ? ~VertexMask{0} : (VertexMask{1} << i) - 1; }

  // Lexicographically greedy maximal independent set of G[0..i) containing s.
  VertexMask greedy_extend(VertexMask s, int i) const {
    for (int u = 0; u < i; ++u) {
      if (!((s >> u) & 1U) && (g_.neighbor_mask(u) & s) == 0) s |= VertexMask{1} << u;
    }
    return s;
  }

  bool maximal_in_prefix(VertexMask s, int i) const {
    const VertexMask outside = prefix(i) & ~s;
    for (VertexMask m = outside; m != 0; m &= m - 1) {
      if ((g_.neighbor_mask(std::countr_zero(m)) & s) == 0) return false;
    }
    return true;
  }

  // t is a maximal independent set of G[0..i).
  bool descend(VertexMask t, int i) {
    if (i == n_) return visit_(t);
    const VertexMask bit = VertexMask{1} << i;
    const VertexMask nbrs = g_.neighbor_mask(i) & prefix(i);
    if ((t & nbrs) == 0) return descend(t | bit, i + 1);
    if (!descend(t, i + 1)) return false;
    const VertexMask swapped = (t & ~nbrs) | bit;
    if (maximal_in_prefix(swapped, i + 1) && greedy_extend(t & ~nbrs, i) == t) {
      return descend(swapped, i + 1);
    }
    return true;
  }

  const Graph& g_;
  int n_;
  const std::function<bool(VertexMask)>& visit_;
};

}  // namespace

void enumerate_mis(const Graph& g, const std::function<bool(VertexMask)>& visit) {
  MisReverseSearch(g, visit).run();
}

std::vector<VertexSet> maximal_independent_sets(const Graph& g) {
  std::vector<Coalition> sets;
  enumerate_mis(g, [&](VertexMask m) {
    sets.emplace_back(m);
    return true;
  });
  std::sort(sets.begin(), sets.end());
  std::vector<VertexSet> out;
  out.reserve(sets.size());
  for (Coalition c : sets) out.push_back(c.members());
  return out;
}

namespace {

class MaxIndependentSet {
 public:
  explicit MaxIndependentSet(const Graph& g) : g_(g) {}

  VertexMask run() {
    search(g_.order() >= 64 ? ~VertexMask{0} : (VertexMask{1} << g_.order()) - 1, 0);
    return best_;
  }

 private:
  int degree_in(int v, VertexMask cand) const {
    return std::popcount(g_.neighbor_mask(v) & cand);
  }

  void search(VertexMask cand, VertexMask current) {
    while (true) {
      if (cand == 0) {
        if (std::popcount(current) > std::popcount(best_) || best_size_ < 0) {
          best_ = current;
          best_size_ = std::popcount(current);
        }
        return;
      }
      if (std::popcount(current) + std::popcount(cand) <= best_size_) return;
      // A vertex of degree <= 1 in the candidate graph belongs to some
      // maximum independent set of it.
      int low = -1;
      int high = -1, high_deg = -1;
      for (VertexMask m = cand; m != 0; m &= m - 1) {
        int v = std::countr_zero(m);
        int d = degree_in(v, cand);
        if (d <= 1) {
          low = v;
          break;
        }
        if (d > high_deg) {
          high = v;
          high_deg = d;
        }
      }
      if (low >= 0) {
        current |= VertexMask{1} << low;
        cand &= ~(g_.neighbor_mask(low) | (VertexMask{1} << low));
        continue;
      }
      const VertexMask bit = VertexMask{1} << high;
      search(cand & ~(g_.neighbor_mask(high) | bit), current | bit);
      cand &= ~bit;
    }
  }

  const Graph& g_;
  VertexMask best_ = 0;
  int best_size_ = -1;
};

}  // namespace

IndependentSet max_independent_set_exact(const Graph& g) {
  const VertexMask best = MaxIndependentSet(g).run();
  return {to_vertex_set(best), std::popcount(best)};
}

namespace {

bool extend_kp2(const Graph& g, int k, std::size_t from, VertexMask blocked,
                std::vector<Edge>& chosen) {
  if (static_cast<int>(chosen.size()) == k) return true;
  const auto& edges = g.edges();
  const std::size_t needed = static_cast<std::size_t>(k) - chosen.size();
  for (std::size_t idx = from; idx + needed <= edges.size(); ++idx) {
    const Edge e = edges[idx];
    if (((blocked >> e.u) & 1U) || ((blocked >> e.v) & 1U)) continue;
    chosen.push_back(e);
    const VertexMask closed = g.neighbor_mask(e.u) | g.neighbor_mask(e.v) |
                              (VertexMask{1} << e.u) | (VertexMask{1} << e.v);
    if (extend_kp2(g, k, idx + 1, blocked | closed, chosen)) return true;
    chosen.pop_back();
  }
  return false;
}

}  // namespace

std::optional<std::vector<Edge>> find_induced_kP2(const Graph& g, int k) {
  if (k < 1) throw InvalidInput("k must be positive");
  std::vector<Edge> chosen;
  if (extend_kp2(g, k, 0, 0, chosen)) return chosen;
  return std::nullopt;
}

}  // namespace tg
