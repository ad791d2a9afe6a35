#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tg/rational.hpp"

namespace tg {

/// Players are 0-based inside the library; files and the CLI use 1-based ids.
inline constexpr int kMaxPlayers = 64;

/// A set of players, stored as a 64-bit mask.
class Coalition {
 public:
  constexpr Coalition() = default;
  constexpr explicit Coalition(std::uint64_t mask) : mask_(mask) {}

  /// 0-based members.
  static Coalition of(std::initializer_list<int> members);
  static Coalition of(std::span<const int> members);
  /// {0, ..., n-1}
  static constexpr Coalition first(int n) {
    return Coalition(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }

  constexpr std::uint64_t mask() const { return mask_; }
  constexpr bool empty() const { return mask_ == 0; }
  constexpr int size() const { return std::popcount(mask_); }
  constexpr bool contains(int player) const { return (mask_ >> player) & 1U; }
  constexpr bool is_subset_of(Coalition other) const {
    return (mask_ & ~other.mask_) == 0;
  }
  constexpr Coalition with(int player) const {
    return Coalition(mask_ | (std::uint64_t{1} << player));
  }
  constexpr Coalition without(int player) const {
    return Coalition(mask_ & ~(std::uint64_t{1} << player));
  }
  /// Highest member + 1, or 0 for the empty coalition.
  constexpr int span_size() const { return 64 - std::countl_zero(mask_); }

  std::vector<int> members() const;

  friend constexpr Coalition operator|(Coalition a, Coalition b) {
    return Coalition(a.mask_ | b.mask_);
  }
  friend constexpr Coalition operator&(Coalition a, Coalition b) {
    return Coalition(a.mask_ & b.mask_);
  }
  friend constexpr bool operator==(Coalition, Coalition) = default;
  /// Lexicographic order on the sorted member lists.
  friend bool operator<(Coalition a, Coalition b);

 private:
  std::uint64_t mask_ = 0;
};

/// "{1,3}" with 1-based ids.
std::string to_string(Coalition c);

/// Nonnegative exact payoff per player.
class PayoffVector {
 public:
  PayoffVector() = default;
  explicit PayoffVector(std::vector<Rational> values);
  PayoffVector(std::size_t players, const Rational& value);

  std::size_t size() const { return values_.size(); }
  const Rational& operator[](std::size_t i) const { return values_[i]; }
  const std::vector<Rational>& values() const { return values_; }
  void set(std::size_t i, const Rational& value);

  /// p(S)
  Rational value_of(Coalition c) const;

  PayoffVector scaled(const Rational& factor) const;

  friend bool operator==(const PayoffVector&, const PayoffVector&) = default;

 private:
  std::vector<Rational> values_;
};

/// A simple game given by its antichain of minimal winning coalitions.
class SimpleGame {
 public:
  /// Validates the antichain and stores it in canonical order. Throws
  /// InvalidInput naming the offending coalition or pair.
  SimpleGame(int players, std::vector<Coalition> minimal_winning);

  int players() const { return players_; }
  const std::vector<Coalition>& minimal_winning() const { return minimal_winning_; }
  Coalition grand_coalition() const { return Coalition::first(players_); }

  /// Every minimal winning coalition has exactly two players.
  bool is_graphic() const;
  bool has_winner_of_size(int size) const;

  friend bool operator==(const SimpleGame&, const SimpleGame&) = default;

 private:
  int players_;
  std::vector<Coalition> minimal_winning_;
};

/// Throws InvalidInput if the coalition has members outside 0..n-1.
void check_coalition(const SimpleGame& game, Coalition c);

bool is_winning(const SimpleGame& game, Coalition c);

/// Desk-scale guards for exhaustive enumeration.
struct EnumerationLimits {
  int max_players = 24;
  std::size_t max_coalitions = 200'000;

  /// Defaults, with max_coalitions taken from TG_MAX_COALITIONS when set.
  static EnumerationLimits from_environment();
};

/// Winning/losing flag for every subset of the players (2^n bytes).
class WinningTable {
 public:
  explicit WinningTable(const SimpleGame& game, const EnumerationLimits& limits = {});

  int players() const { return players_; }
  bool winning(Coalition c) const { return table_[c.mask()] != 0; }

 private:
  int players_;
  std::vector<std::uint8_t> table_;
};

/// Inclusion-maximal losing coalitions in canonical order.
std::vector<Coalition> maximal_losing(const SimpleGame& game,
                                      const EnumerationLimits& limits = {});

/// Outcome of removing singleton winners (payoff 1) and players outside
/// every minimal winner (payoff 0).
struct Preprocessed {
  int original_players = 0;
  /// Empty when every minimal winner was a singleton.
  std::optional<SimpleGame> reduced;
  /// original_index[i] is the original id of reduced player i.
  std::vector<int> original_index;
  std::map<int, Rational> fixed;

  /// Payoff on the original players: reduced values plus the fixed ones.
  PayoffVector lift(const PayoffVector& reduced_payoff) const;
  Coalition lift(Coalition reduced_coalition) const;
};

Preprocessed preprocess(const SimpleGame& game);

/// max p(L)/p(W) over winning W and losing L; may be infinite.
struct CriticalRatio {
  bool infinite = false;
  Rational value;
};

CriticalRatio critical_ratio(const SimpleGame& game, const PayoffVector& payoff,
                             const EnumerationLimits& limits = {});

/// Largest p(L) over losing coalitions and the first maximal losing
/// coalition (canonical order) attaining it.
struct LosingMaximum {
  Rational value;
  Coalition argmax;
};

LosingMaximum max_losing_value(std::span<const Coalition> maximal_losing_sets,
                               const PayoffVector& payoff);

/// Permutation of the players, most desirable first.
struct DesirabilityOrder {
  std::vector<int> order;
};

/// i ⪰ j: v(S+i) >= v(S+j) for every S avoiding i and j.
bool at_least_as_desirable(const WinningTable& table, int i, int j);

/// Total desirability order with ties broken by player index, or nullopt if
/// some pair of players is incomparable.
std::optional<DesirabilityOrder> desirability_order(const SimpleGame& game,
                                                    const EnumerationLimits& limits = {});

enum class GameClass { weighted, roughly_weighted, above_rough };

GameClass classify(const Rational& alpha);
std::string_view to_string(GameClass c);

}  // namespace tg
