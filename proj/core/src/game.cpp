#include "tg/game.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

#include "tg/error.hpp"

namespace tg {

Coalition Coalition::of(std::initializer_list<int> members) {
  return of(std::span<const int>(members.begin(), members.size()));
}

Coalition Coalition::of(std::span<const int> members) {
  std::uint64_t mask = 0;
  for (int m : members) {
    if (m < 0 || m >= kMaxPlayers) {
      throw InvalidInput("player index " + std::to_string(m + 1) + " out of range");
    }
    mask |= std::uint64_t{1} << m;
  }
  return Coalition(mask);
}

std::vector<int> Coalition::members() const {
  std::vector<int> out;
  out.reserve(size());
  for (std::uint64_t m = mask_; m != 0; m &= m - 1) {
    out.push_back(std::countr_zero(m));
  }
  return out;
}

bool operator<(Coalition a, Coalition b) {
  const std::uint64_t diff = a.mask_ ^ b.mask_;
  if (diff == 0) return false;
  const int d = std::countr_zero(diff);
  const auto above = [d](std::uint64_t m) { return d == 63 ? 0 : m >> (d + 1); };
  if (a.contains(d)) {
    // a continues with d, b continues with something larger or ends.
    return above(b.mask_) != 0;
  }
  return above(a.mask_) == 0;
}

std::string to_string(Coalition c) {
  std::string out = "{";
  bool first = true;
  for (int m : c.members()) {
    if (!first) out += ",";
    out += std::to_string(m + 1);
    first = false;
  }
  return out + "}";
}

PayoffVector::PayoffVector(std::vector<Rational> values) : values_(std::move(values)) {
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (values_[i] < 0) {
      throw InvalidInput("negative payoff " + to_string(values_[i]) + " for player " +
                         std::to_string(i + 1));
    }
  }
}

PayoffVector::PayoffVector(std::size_t players, const Rational& value)
    : PayoffVector(std::vector<Rational>(players, value)) {}

void PayoffVector::set(std::size_t i, const Rational& value) {
  if (value < 0) {
    throw InvalidInput("negative payoff " + to_string(value) + " for player " +
                       std::to_string(i + 1));
  }
  values_.at(i) = value;
}

Rational PayoffVector::value_of(Coalition c) const {
  Rational sum = 0;
  for (std::uint64_t m = c.mask(); m != 0; m &= m - 1) {
    sum += values_.at(std::countr_zero(m));
  }
  return sum;
}

PayoffVector PayoffVector::scaled(const Rational& factor) const {
  std::vector<Rational> out(values_.size());
  for (std::size_t i = 0; i < values_.size(); ++i) out[i] = values_[i] * factor;
  return PayoffVector(std::move(out));
}

SimpleGame::SimpleGame(int players, std::vector<Coalition> minimal_winning)
    : players_(players), minimal_winning_(std::move(minimal_winning)) {
  if (players_ < 1 || players_ > kMaxPlayers) {
    throw InvalidInput("player count " + std::to_string(players_) + " outside 1.." +
                       std::to_string(kMaxPlayers));
  }
  if (minimal_winning_.empty()) {
    throw InvalidInput("a simple game needs at least one minimal winning coalition");
  }
  const Coalition all = Coalition::first(players_);
  for (Coalition c : minimal_winning_) {
    if (c.empty()) throw InvalidInput("empty minimal winning coalition");
    if (!c.is_subset_of(all)) {
      throw InvalidInput("coalition " + to_string(c) + " names a player outside 1.." +
                         std::to_string(players_));
    }
  }
  std::sort(minimal_winning_.begin(), minimal_winning_.end());
  for (std::size_t i = 0; i + 1 < minimal_winning_.size(); ++i) {
    if (minimal_winning_[i] == minimal_winning_[i + 1]) {
      throw InvalidInput("duplicate minimal winning coalition " +
                         to_string(minimal_winning_[i]));
    }
  }
  for (std::size_t i = 0; i < minimal_winning_.size(); ++i) {
    for (std::size_t j = 0; j < minimal_winning_.size(); ++j) {
      if (i != j && minimal_winning_[i].is_subset_of(minimal_winning_[j])) {
        throw InvalidInput("not an antichain: " + to_string(minimal_winning_[i]) +
                           " is contained in " + to_string(minimal_winning_[j]));
      }
    }
  }
}

bool SimpleGame::is_graphic() const {
  return std::all_of(minimal_winning_.begin(), minimal_winning_.end(),
                     [](Coalition c) { return c.size() == 2; });
}

bool SimpleGame::has_winner_of_size(int size) const {
  return std::any_of(minimal_winning_.begin(), minimal_winning_.end(),
                     [size](Coalition c) { return c.size() == size; });
}

void check_coalition(const SimpleGame& game, Coalition c) {
  if (!c.is_subset_of(game.grand_coalition())) {
    throw InvalidInput("coalition " + to_string(c) + " names a player outside 1.." +
                       std::to_string(game.players()));
  }
}

bool is_winning(const SimpleGame& game, Coalition c) {
  check_coalition(game, c);
  return std::any_of(game.minimal_winning().begin(), game.minimal_winning().end(),
                     [c](Coalition w) { return w.is_subset_of(c); });
}

EnumerationLimits EnumerationLimits::from_environment() {
  EnumerationLimits limits;
  if (const char* env = std::getenv("TG_MAX_COALITIONS"); env != nullptr && *env) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0' || v == 0) {
      throw InvalidInput(std::string("TG_MAX_COALITIONS must be a positive integer, got '") +
                         env + "'");
    }
    limits.max_coalitions = static_cast<std::size_t>(v);
  }
  return limits;
}

WinningTable::WinningTable(const SimpleGame& game, const EnumerationLimits& limits)
    : players_(game.players()) {
  if (players_ > limits.max_players) {
    throw LimitExceeded("exhaustive coalition enumeration limited to " +
                        std::to_string(limits.max_players) + " players, game has " +
                        std::to_string(players_));
  }
  const std::uint64_t size = std::uint64_t{1} << players_;
  table_.assign(size, 0);
  for (Coalition w : game.minimal_winning()) table_[w.mask()] = 1;
  // Up-closure, one player at a time.
  for (int i = 0; i < players_; ++i) {
    const std::uint64_t bit = std::uint64_t{1} << i;
    for (std::uint64_t m = 0; m < size; ++m) {
      if ((m & bit) != 0) table_[m] |= table_[m ^ bit];
    }
  }
}

std::vector<Coalition> maximal_losing(const SimpleGame& game,
                                      const EnumerationLimits& limits) {
  const WinningTable table(game, limits);
  const int n = game.players();
  const std::uint64_t size = std::uint64_t{1} << n;
  std::vector<Coalition> out;
  for (std::uint64_t m = 0; m < size; ++m) {
    const Coalition c(m);
    if (table.winning(c)) continue;
    bool maximal = true;
    for (int i = 0; i < n && maximal; ++i) {
      if (!c.contains(i) && !table.winning(c.with(i))) maximal = false;
    }
    if (!maximal) continue;
    out.push_back(c);
    if (out.size() > limits.max_coalitions) {
      throw LimitExceeded("more than " + std::to_string(limits.max_coalitions) +
                          " maximal losing coalitions (raise TG_MAX_COALITIONS)");
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

PayoffVector Preprocessed::lift(const PayoffVector& reduced_payoff) const {
  if (reduced_payoff.size() != original_index.size()) {
    throw InvalidInput("reduced payoff has " + std::to_string(reduced_payoff.size()) +
                       " entries, expected " + std::to_string(original_index.size()));
  }
  std::vector<Rational> out(static_cast<std::size_t>(original_players));
  for (const auto& [player, value] : fixed) out[player] = value;
  for (std::size_t i = 0; i < original_index.size(); ++i) {
    out[original_index[i]] = reduced_payoff[i];
  }
  return PayoffVector(std::move(out));
}

Coalition Preprocessed::lift(Coalition reduced_coalition) const {
  Coalition out;
  for (int m : reduced_coalition.members()) out = out.with(original_index.at(m));
  return out;
}

Preprocessed preprocess(const SimpleGame& game) {
  Preprocessed result;
  result.original_players = game.players();

  Coalition forced;  // singleton winners
  for (Coalition w : game.minimal_winning()) {
    if (w.size() == 1) forced = forced | w;
  }
  std::vector<Coalition> kept;
  Coalition covered;
  for (Coalition w : game.minimal_winning()) {
    if ((w & forced).empty()) {
      kept.push_back(w);
      covered = covered | w;
    }
  }
  std::vector<int> new_index(game.players(), -1);
  for (int i = 0; i < game.players(); ++i) {
    if (forced.contains(i)) {
      result.fixed[i] = 1;
    } else if (!covered.contains(i)) {
      result.fixed[i] = 0;
    } else {
      new_index[i] = static_cast<int>(result.original_index.size());
      result.original_index.push_back(i);
    }
  }
  if (kept.empty()) return result;

  std::vector<Coalition> reindexed;
  reindexed.reserve(kept.size());
  for (Coalition w : kept) {
    Coalition r;
    for (int m : w.members()) r = r.with(new_index[m]);
    reindexed.push_back(r);
  }
  result.reduced.emplace(static_cast<int>(result.original_index.size()),
                         std::move(reindexed));
  return result;
}

LosingMaximum max_losing_value(std::span<const Coalition> maximal_losing_sets,
                               const PayoffVector& payoff) {
  LosingMaximum best{Rational(0), Coalition()};
  bool first = true;
  for (Coalition l : maximal_losing_sets) {
    Rational v = payoff.value_of(l);
    if (first || v > best.value) {
      best.value = v;
      best.argmax = l;
      first = false;
    }
  }
  return best;
}

CriticalRatio critical_ratio(const SimpleGame& game, const PayoffVector& payoff,
                             const EnumerationLimits& limits) {
  if (payoff.size() != static_cast<std::size_t>(game.players())) {
    throw InvalidInput("payoff has " + std::to_string(payoff.size()) +
                       " entries for a game with " + std::to_string(game.players()) +
                       " players");
  }
  const auto losing = maximal_losing(game, limits);
  const Rational max_losing = max_losing_value(losing, payoff).value;
  Rational min_winning = payoff.value_of(game.minimal_winning().front());
  for (Coalition w : game.minimal_winning()) {
    Rational v = payoff.value_of(w);
    if (v < min_winning) min_winning = v;
  }
  if (max_losing == 0) return {false, Rational(0)};
  if (min_winning == 0) return {true, Rational(0)};
  return {false, Rational(max_losing / min_winning)};
}

bool at_least_as_desirable(const WinningTable& table, int i, int j) {
  if (i == j) return true;
  const int n = table.players();
  const std::uint64_t rest =
      Coalition::first(n).without(i).without(j).mask();
  // Iterate all submasks of rest, including 0.
  std::uint64_t s = rest;
  while (true) {
    const Coalition base(s);
    if (table.winning(base.with(j)) && !table.winning(base.with(i))) return false;
    if (s == 0) break;
    s = (s - 1) & rest;
  }
  return true;
}

std::optional<DesirabilityOrder> desirability_order(const SimpleGame& game,
                                                    const EnumerationLimits& limits) {
  const WinningTable table(game, limits);
  const int n = game.players();
  std::vector<std::vector<char>> geq(n, std::vector<char>(n, 1));
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      geq[i][j] = at_least_as_desirable(table, i, j) ? 1 : 0;
      geq[j][i] = at_least_as_desirable(table, j, i) ? 1 : 0;
      if (!geq[i][j] && !geq[j][i]) return std::nullopt;
    }
  }
  DesirabilityOrder result;
  result.order.resize(n);
  std::iota(result.order.begin(), result.order.end(), 0);
  std::stable_sort(result.order.begin(), result.order.end(), [&](int a, int b) {
    return geq[a][b] && !geq[b][a];
  });
  for (int pos = 0; pos + 1 < n; ++pos) {
    if (!geq[result.order[pos]][result.order[pos + 1]]) return std::nullopt;
  }
  return result;
}

GameClass classify(const Rational& alpha) {
  if (alpha < 1) return GameClass::weighted;
  if (alpha == 1) return GameClass::roughly_weighted;
  return GameClass::above_rough;
}

std::string_view to_string(GameClass c) {
  switch (c) {
    case GameClass::weighted:
      return "weighted";
    case GameClass::roughly_weighted:
      return "roughly_weighted";
    case GameClass::above_rough:
      return "above_rough";
  }
  return "unknown";
}

}  // namespace tg
