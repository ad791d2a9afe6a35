#include "tg/generators.hpp"

#include <algorithm>
#include <numeric>

#include "tg/error.hpp"

namespace tg {

std::uint32_t Lcg64::next() {
  state_ = state_ * 6364136223846793005ULL + 1442695040888963407ULL;
  return static_cast<std::uint32_t>(state_ >> 32);
}

std::uint32_t Lcg64::below(std::uint32_t bound) {
  if (bound == 0) throw InvalidInput("empty range");
  const std::uint32_t limit = UINT32_MAX - UINT32_MAX % bound;
  std::uint32_t x;
  do {
    x = next();
  } while (x >= limit);
  return x % bound;
}

SimpleGame cycle_game(int n) {
  if (n < 4 || n % 2 != 0) {
    throw InvalidInput("cycle game needs an even n >= 4, got " + std::to_string(n));
  }
  std::vector<Coalition> winners;
  for (int i = 0; i < n; ++i) winners.push_back(Coalition::of({i, (i + 1) % n}));
  return SimpleGame(n, std::move(winners));
}

ProductInstance strong_product_game(const Graph& g) {
  if (g.order() < 1 || g.order() > kProductMaxVertices) {
    throw InvalidInput("strong product gadget needs 1.." + std::to_string(kProductMaxVertices) +
                       " vertices");
  }
  const IndependentSet best = max_independent_set_exact(g);
  return {graphic_game(strong_product_p2(g)), fraction(best.size, 2)};
}

namespace {

void check_players(int n) {
  if (n < 1 || n > kGeneratorMaxPlayers) {
    throw InvalidInput("generator needs 1.." + std::to_string(kGeneratorMaxPlayers) +
                       " players, got " + std::to_string(n));
  }
}

// Minimal elements of an up-closed family given as a table.
std::vector<Coalition> minimal_sets(const std::vector<char>& winning, int n) {
  std::vector<Coalition> out;
  for (std::uint64_t m = 1; m < winning.size(); ++m) {
    if (!winning[m]) continue;
    bool minimal = true;
    for (int i = 0; i < n && minimal; ++i) {
      if ((m >> i) & 1U && winning[m & ~(std::uint64_t{1} << i)]) minimal = false;
    }
    if (minimal) out.push_back(Coalition(m));
  }
  return out;
}

}  // namespace

GeneratedGame random_monotone_game(int n, int count, std::uint64_t seed) {
  check_players(n);
  if (count < 1) throw InvalidInput("count must be positive");
  Lcg64 rng(seed);
  std::vector<Coalition> accepted;
  const long budget = 64L * count + 256;
  for (long draw = 0; draw < budget && static_cast<int>(accepted.size()) < count; ++draw) {
    const int size = n == 1 ? 1 : 2 + static_cast<int>(rng.below(n - 1));
    std::vector<int> players(n);
    std::iota(players.begin(), players.end(), 0);
    for (int i = 0; i < size; ++i) {
      std::swap(players[i], players[i + rng.below(n - i)]);
    }
    const Coalition c = Coalition::of(std::span<const int>(players.data(), size));
    const bool comparable = std::any_of(accepted.begin(), accepted.end(), [&](Coalition a) {
      return a.is_subset_of(c) || c.is_subset_of(a);
    });
    if (!comparable) accepted.push_back(c);
  }
  GeneratedGame out{SimpleGame(n, accepted), std::nullopt};
  if (static_cast<int>(accepted.size()) < count) {
    out.warning = "sampling budget exhausted: " + std::to_string(accepted.size()) + " of " +
                  std::to_string(count) + " coalitions";
  }
  return out;
}

SimpleGame weighted_voting_game(const std::vector<Rational>& weights, const Rational& quota) {
  const int n = static_cast<int>(weights.size());
  check_players(n);
  for (int i = 0; i < n; ++i) {
    if (weights[i] < 0) throw InvalidInput("weight of player " + std::to_string(i + 1) + " is negative");
  }
  if (quota <= 0) throw InvalidInput("quota must be positive");
  std::vector<Rational> sum(std::size_t{1} << n);
  std::vector<char> winning(sum.size(), 0);
  for (std::uint64_t m = 1; m < sum.size(); ++m) {
    const int low = std::countr_zero(m);
    sum[m] = sum[m & (m - 1)] + weights[low];
    winning[m] = sum[m] >= quota;
  }
  if (!winning.back()) throw InvalidInput("no coalition meets the quota");
  return SimpleGame(n, minimal_sets(winning, n));
}

Graph random_graph(int n, int percent, Lcg64& rng) {
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (static_cast<int>(rng.below(100)) < percent) edges.push_back({u, v});
    }
  }
  return Graph(n, edges);
}

Graph attach_isolated(const Graph& g, Lcg64& rng) {
  const int n = g.order();
  if (n < 2) throw InvalidInput("need at least two vertices");
  std::vector<Edge> edges = g.edges();
  for (int v = 0; v < n; ++v) {
    if (g.degree(v) > 0) continue;
    int w = static_cast<int>(rng.below(n - 1));
    if (w >= v) ++w;
    edges.push_back({std::min(v, w), std::max(v, w)});
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return Graph(n, edges);
}

BipartiteGraph random_bipartite(int a, int b, int percent, Lcg64& rng) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < a; ++i) {
    for (int j = 0; j < b; ++j) {
      if (static_cast<int>(rng.below(100)) < percent) edges.emplace_back(i, j);
    }
  }
  return BipartiteGraph::from_local(a, b, edges);
}

SimpleGame random_complete_game(int n, int seeds, Lcg64& rng) {
  check_players(n);
  std::vector<char> winning(std::size_t{1} << n, 0);
  std::vector<std::uint64_t> work;
  auto mark = [&](std::uint64_t m) {
    if (!winning[m]) {
      winning[m] = 1;
      work.push_back(m);
    }
  };
  for (int s = 0; s < seeds; ++s) {
    std::uint64_t m = 0;
    while (m == 0) m = rng.next() & ((std::uint64_t{1} << n) - 1);
    mark(m);
  }
  while (!work.empty()) {
    const std::uint64_t m = work.back();
    work.pop_back();
    for (int j = 0; j < n; ++j) {
      const std::uint64_t bj = std::uint64_t{1} << j;
      if (!(m & bj)) {
        mark(m | bj);
        continue;
      }
      for (int i = 0; i < j; ++i) {
        const std::uint64_t bi = std::uint64_t{1} << i;
        if (!(m & bi)) mark((m & ~bj) | bi);
      }
    }
  }
  return SimpleGame(n, minimal_sets(winning, n));
}

}  // namespace tg
