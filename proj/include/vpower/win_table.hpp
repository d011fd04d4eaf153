#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "vpower/game.hpp"

namespace vpower {

/// Dense winning/losing table over all 2^n coalitions of a game.
class WinTable {
 public:
  /// Throws VotingError(TooManyPlayers) above `limits.max_players`.
  static WinTable build(const SimpleVotingGame& game, const Limits& limits = {});

  int players() const { return n_; }
  std::size_t size() const { return std::size_t{1} << n_; }
  bool operator[](Coalition s) const { return (words_[s >> 6] >> (s & 63)) & 1U; }
  std::span<const std::uint64_t> words() const { return words_; }

  /// Swing count for `p` using the active kernel set.
  std::uint64_t swings(PlayerId p) const;

  /// Minimal winning coalitions in ascending numeric order.
  std::vector<Coalition> minimal_winning() const;

 private:
  WinTable(int n, std::vector<std::uint64_t> words) : n_(n), words_(std::move(words)) {}
  int n_;
  std::vector<std::uint64_t> words_;
};

}  // namespace vpower
