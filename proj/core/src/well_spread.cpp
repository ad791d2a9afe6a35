#include "tg/well_spread.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <stdexcept>

#include "tg/error.hpp"

namespace tg {

namespace {

BipartiteGraph blow_up(const BipartiteGraph& g, int p, int q) {
  const int na = g.a_count(), nb = g.b_count();
  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<std::size_t>(p) * q * g.edge_count());
  for (int c = 0; c < q; ++c) {
    for (int i = 0; i < na; ++i) {
      for (int j : g.a_neighbors(i)) {
        for (int d = 0; d < p; ++d) edges.emplace_back(c * na + i, d * nb + j);
      }
    }
  }
  return BipartiteGraph::from_local(q * na, p * nb, edges);
}

int neighborhood_size(const BipartiteGraph& g, const std::vector<int>& a_local) {
  std::vector<char> hit(g.b_count(), 0);
  int count = 0;
  for (int i : a_local) {
    for (int j : g.a_neighbors(i)) {
      if (!hit[j]) {
        hit[j] = 1;
        ++count;
      }
    }
  }
  return count;
}

// Largest S ⊆ A maximising q|S| - p|N(S)|, read off a maximum matching of
// the blow-up: the copies of A not reachable by alternating paths from
// unmatched copies of B.
std::vector<int> largest_maximiser(const BipartiteGraph& g, int p, int q) {
  const BipartiteGraph big = blow_up(g, p, q);
  const BipartiteMatching m = max_matching_bipartite(big);
  std::vector<char> reached_a(big.a_count(), 0), reached_b(big.b_count(), 0);
  std::queue<int> frontier;  // B copies
  for (int b = 0; b < big.b_count(); ++b) {
    if (m.mate_of_b[b] < 0) {
      reached_b[b] = 1;
      frontier.push(b);
    }
  }
  while (!frontier.empty()) {
    int b = frontier.front();
    frontier.pop();
    for (int a : big.b_neighbors(b)) {
      if (reached_a[a] || m.mate_of_b[b] == a) continue;
      reached_a[a] = 1;
      int next = m.mate_of_a[a];
      if (next >= 0 && !reached_b[next]) {
        reached_b[next] = 1;
        frontier.push(next);
      }
    }
  }
  const int na = g.a_count();
  std::vector<int> subset;
  for (int i = 0; i < na; ++i) {
    int kept = 0;
    for (int c = 0; c < q; ++c) kept += reached_a[c * na + i] ? 0 : 1;
    if (kept != 0 && kept != q) {
      throw std::logic_error("blow-up maximiser is not closed under copies");
    }
    if (kept == q) subset.push_back(i);
  }
  return subset;
}

}  // namespace

std::vector<Rational> candidate_fractions(int n) {
  std::vector<Rational> out;
  for (int q = 1; q <= n; ++q) {
    for (int p = 1; p <= q; ++p) {
      if (std::gcd(p, q) == 1) out.push_back(fraction(p, q));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool blow_up_has_hall_violator(const BipartiteGraph& g, int p, int q) {
  const BipartiteGraph big = blow_up(g, p, q);
  return max_matching_bipartite(big).size < static_cast<std::size_t>(big.a_count());
}

RatioResult max_ratio_subset(const BipartiteGraph& g, std::vector<RatioProbe>* trace) {
  if (g.a_count() == 0) throw PreconditionViolation("max_ratio_subset needs a nonempty A side");
  if (max_matching_bipartite(g).size != static_cast<std::size_t>(g.a_count())) {
    throw PreconditionViolation("A side cannot be matched into B");
  }
  const auto fractions = candidate_fractions(g.a_count() + g.b_count());
  // First fraction r with no S of ratio > r; the last one (1) always qualifies.
  std::size_t lo = 0, hi = fractions.size() - 1;
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo) / 2;
    const int p = static_cast<int>(fractions[mid].get_num().get_si());
    const int q = static_cast<int>(fractions[mid].get_den().get_si());
    const bool violator = blow_up_has_hall_violator(g, p, q);
    if (trace) trace->push_back({p, q, violator});
    if (violator) {
      lo = mid + 1;
    } else {
      hi = mid;
    }
  }
  const Rational ratio = fractions[lo];
  const int p = static_cast<int>(ratio.get_num().get_si());
  const int q = static_cast<int>(ratio.get_den().get_si());
  const std::vector<int> local = largest_maximiser(g, p, q);
  if (local.empty() ||
      fraction(static_cast<long>(local.size()), neighborhood_size(g, local)) !=
          ratio) {
    throw std::logic_error("ratio maximiser extraction failed");
  }
  RatioResult result;
  result.ratio = ratio;
  for (int i : local) result.subset.push_back(g.a_side()[i]);
  return result;
}

WellSpreadDecomposition decompose(const BipartiteGraph& g) {
  if (max_matching_bipartite(g).size != static_cast<std::size_t>(g.a_count())) {
    throw PreconditionViolation("A side cannot be matched into B");
  }
  for (int i = 0; i < g.a_count(); ++i) {
    if (g.a_neighbors(i).empty()) {
      throw PreconditionViolation("A-side vertex " + std::to_string(g.a_side()[i] + 1) +
                                  " is isolated");
    }
  }
  WellSpreadDecomposition d;
  std::vector<int> a_left(g.a_count()), b_left(g.b_count());
  std::iota(a_left.begin(), a_left.end(), 0);
  std::iota(b_left.begin(), b_left.end(), 0);
  while (!a_left.empty()) {
    const BipartiteGraph rest = g.induced_local(a_left, b_left);
    const RatioResult best = max_ratio_subset(rest);
    WellSpreadPart part;
    part.a_part = best.subset;
    std::vector<char> take_b(rest.b_count(), 0);
    for (int v : best.subset) {
      for (int j : rest.a_neighbors(rest.local_a(v))) take_b[j] = 1;
    }
    for (int j = 0; j < rest.b_count(); ++j) {
      if (take_b[j]) part.b_part.push_back(rest.b_side()[j]);
    }
    part.lambda = fraction(static_cast<long>(part.a_part.size()),
                           static_cast<long>(part.a_part.size() + part.b_part.size()));
    std::erase_if(a_left, [&](int i) {
      return std::binary_search(part.a_part.begin(), part.a_part.end(), g.a_side()[i]);
    });
    std::erase_if(b_left, [&](int j) {
      return std::binary_search(part.b_part.begin(), part.b_part.end(), g.b_side()[j]);
    });
    d.parts.push_back(std::move(part));
  }
  if (!b_left.empty()) {
    WellSpreadPart degenerate;
    for (int j : b_left) degenerate.b_part.push_back(g.b_side()[j]);
    degenerate.lambda = 0;
    d.parts.push_back(std::move(degenerate));
  }
  if (std::string err = check_decomposition(g, d); !err.empty()) {
    throw std::logic_error("well-spread decomposition invariant violated: " + err);
  }
  return d;
}

std::string check_decomposition(const BipartiteGraph& g, const WellSpreadDecomposition& d) {
  const int n = g.order();
  std::vector<int> part_of(n, -1);
  for (std::size_t k = 0; k < d.parts.size(); ++k) {
    const auto& part = d.parts[k];
    for (int v : part.a_part) {
      if (v < 0 || v >= n || g.local_a(v) < 0) return "A part holds a non-A vertex";
      if (part_of[v] >= 0) return "vertex in two parts";
      part_of[v] = static_cast<int>(k);
    }
    for (int v : part.b_part) {
      if (v < 0 || v >= n || g.local_b(v) < 0) return "B part holds a non-B vertex";
      if (part_of[v] >= 0) return "vertex in two parts";
      part_of[v] = static_cast<int>(k);
    }
    if (part.a_part.empty()) {
      if (part.lambda != 0) return "empty A part with nonzero lambda";
      for (int v : part.b_part) {
        if (!g.b_neighbors(g.local_b(v)).empty()) return "degenerate part holds a non-isolated vertex";
      }
    } else {
      if (part.lambda <= 0 || part.lambda * 2 > 1) return "lambda outside (0, 1/2]";
      const Rational expected = fraction(static_cast<long>(part.a_part.size()),
                                        static_cast<long>(part.a_part.size() + part.b_part.size()));
      if (part.lambda != expected) return "lambda does not match part sizes";
    }
    if (k > 0 && d.parts[k - 1].lambda < part.lambda) return "lambda increases";
  }
  for (int v : g.a_side()) {
    if (part_of[v] < 0) return "A vertex " + std::to_string(v + 1) + " in no part";
  }
  for (int v : g.b_side()) {
    if (part_of[v] < 0) return "B vertex " + std::to_string(v + 1) + " in no part";
  }
  for (Edge e : g.edges()) {
    // e.u in A, e.v in B
    if (part_of[e.u] < part_of[e.v]) return "edge joins A_i to B_j with i < j";
  }
  for (const auto& part : d.parts) {
    if (part.a_part.empty()) continue;
    std::vector<int> a_local, b_local;
    for (int v : part.a_part) a_local.push_back(g.local_a(v));
    for (int v : part.b_part) b_local.push_back(g.local_b(v));
    if (!is_well_spread(g.induced_local(a_local, b_local))) return "part is not well-spread";
  }
  return {};
}

bool is_well_spread(const BipartiteGraph& g) {
  if (g.a_count() == 0) throw PreconditionViolation("is_well_spread needs a nonempty A side");
  if (g.b_count() == 0) return false;
  if (max_matching_bipartite(g).size != static_cast<std::size_t>(g.a_count())) return false;
  return max_ratio_subset(g).ratio <= fraction(g.a_count(), g.b_count());
}

Contraction contract_odd_components(const Graph& g) {
  GEDecomposition ge = gallai_edmonds(g);
  const int na = static_cast<int>(ge.tutte_set.size());
  const int nb = static_cast<int>(ge.odd_components.size());
  std::vector<int> comp_of(g.order(), -1);
  for (int k = 0; k < nb; ++k) {
    for (int v : ge.odd_components[k]) comp_of[v] = k;
  }
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < na; ++i) {
    std::vector<int> hit;
    for (int w : g.neighbors(ge.tutte_set[i])) {
      if (comp_of[w] >= 0) hit.push_back(comp_of[w]);
    }
    std::sort(hit.begin(), hit.end());
    hit.erase(std::unique(hit.begin(), hit.end()), hit.end());
    for (int k : hit) edges.emplace_back(i, k);
  }
  BipartiteGraph contracted = BipartiteGraph::from_local(na, nb, edges);
  return {std::move(ge), std::move(contracted)};
}

}  // namespace tg
