#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tg/game.hpp"
#include "tg/graph.hpp"
#include "tg/rational.hpp"

namespace tg {

/// 64-bit linear congruential generator, x' = a x + c mod 2^64 with
/// a = 6364136223846793005, c = 1442695040888963407. Draws use the high
/// 32 bits of the new state.
class Lcg64 {
 public:
  explicit Lcg64(std::uint64_t seed) : state_(seed) {}

  std::uint32_t next();
  /// Uniform in [0, bound) by rejection; bound >= 1.
  std::uint32_t below(std::uint32_t bound);

 private:
  std::uint64_t state_;
};

/// Graphic game of the n-cycle: n even, n >= 4.
SimpleGame cycle_game(int n);

struct ProductInstance {
  SimpleGame game;
  Rational expected_alpha;
};

/// Graphic game of g ⊠ P2 together with independence_number(g) / 2.
ProductInstance strong_product_game(const Graph& g);
inline constexpr int kProductMaxVertices = 10;

struct GeneratedGame {
  SimpleGame game;
  std::optional<std::string> warning;
};

/// Seeded random antichain of up to `count` coalitions on n <= 16 players.
/// Each draw picks a size uniformly in 2..n (1 when n = 1) and then a
/// uniform subset of that size; draws comparable with an accepted
/// coalition are discarded. Stops after 64 * count + 256 draws.
GeneratedGame random_monotone_game(int n, int count, std::uint64_t seed);

/// Minimal winners of the weighted game [quota; weights], n <= 16.
SimpleGame weighted_voting_game(const std::vector<Rational>& weights, const Rational& quota);
inline constexpr int kGeneratorMaxPlayers = 16;

/// G(n, percent/100).
Graph random_graph(int n, int percent, Lcg64& rng);

/// Every isolated vertex gets an edge to a random other vertex (n >= 2).
Graph attach_isolated(const Graph& g, Lcg64& rng);

/// A = 0..a-1, B = a..a+b-1, each cross edge with probability percent/100.
BipartiteGraph random_bipartite(int a, int b, int percent, Lcg64& rng);

/// Complete game: the winning family generated by `seeds` random
/// coalitions, closed under supersets and under swapping a member for a
/// lower-indexed outsider. Lower index means more desirable.
SimpleGame random_complete_game(int n, int seeds, Lcg64& rng);

}  // namespace tg
