#pragma once

// Brute-force reference implementations for tests. Each one works from the
// textbook definition and shares no code with the library beyond the game's
// plain rule data.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "vpower/game.hpp"
#include "vpower/rational.hpp"

namespace oracle {

using vpower::Coalition;
using vpower::Rational;
using vpower::SimpleVotingGame;

// Winning test straight from the rule: weight sum against the quota, or
// containment of some minimal winning coalition.
inline bool wins(const SimpleVotingGame& g, Coalition s) {
  if (const auto* w = g.weighted()) {
    std::int64_t sum = 0;
    for (std::size_t p = 0; p < w->weights.size(); ++p) {
      if ((s >> p) & 1U) sum += w->weights[p];
    }
    return sum >= w->quota;
  }
  for (Coalition m : g.explicit_rule()->min_winning) {
    if ((m & s) == m) return true;
  }
  return false;
}

// Swing count of i: coalitions S containing i with S winning and S - i losing.
inline std::uint64_t swings(const SimpleVotingGame& g, int i) {
  std::uint64_t count = 0;
  const Coalition end = Coalition{1} << g.players();
  for (Coalition s = 0; s < end; ++s) {
    if (((s >> i) & 1U) && wins(g, s) && !wins(g, s & ~(Coalition{1} << i))) ++count;
  }
  return count;
}

// Penrose-Banzhaf as swings / 2^(n-1).
inline std::vector<Rational> banzhaf(const SimpleVotingGame& g) {
  std::vector<Rational> out;
  for (int i = 0; i < g.players(); ++i) {
    out.push_back(Rational(static_cast<long>(swings(g, i))) / Rational(1L << (g.players() - 1)));
  }
  return out;
}

// Shapley-Shubik by walking all n! orderings and crediting the pivot.
inline std::vector<Rational> shapley(const SimpleVotingGame& g) {
  const int n = g.players();
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::vector<long> pivots(static_cast<std::size_t>(n), 0);
  long orderings = 0;
  do {
    ++orderings;
    Coalition s = 0;
    for (int p : order) {
      s |= Coalition{1} << p;
      if (wins(g, s)) {
        ++pivots[static_cast<std::size_t>(p)];
        break;
      }
    }
  } while (std::next_permutation(order.begin(), order.end()));
  std::vector<Rational> out;
  for (long c : pivots) out.push_back(Rational(c) / Rational(orderings));
  return out;
}

// Recursive-measure efficacy by direct recursion on the definition, no
// memoization.
inline Rational rm_alpha(const SimpleVotingGame& g, int i, Coalition s) {
  const Coalition me = Coalition{1} << i;
  const bool win = wins(g, s);
  const bool yes = (s & me) != 0;
  if (yes != win) return Rational(0);
  if (wins(g, s ^ me) != win) return Rational(1);
  std::vector<Coalition> kids;
  for (int j = 0; j < g.players(); ++j) {
    const Coalition b = Coalition{1} << j;
    const bool toward = win ? (s & b) != 0 : (s & b) == 0;
    if (toward && wins(g, s ^ b) == win) kids.push_back(s ^ b);
  }
  if (kids.empty()) return Rational(0);
  Rational sum;
  for (Coalition k : kids) sum += rm_alpha(g, i, k);
  return sum / Rational(static_cast<long>(kids.size()));
}

// All nontrivial monotone games on n players, found by filtering every
// Boolean function on the subset lattice. Returned as sorted winning tables.
inline std::vector<std::vector<bool>> monotone_tables(int n) {
  const std::size_t size = std::size_t{1} << n;
  std::vector<std::vector<bool>> out;
  for (std::uint64_t f = 0; f < (std::uint64_t{1} << size); ++f) {
    auto at = [f](Coalition s) { return ((f >> s) & 1U) != 0; };
    if (at(0) || !at(size - 1)) continue;
    bool monotone = true;
    for (Coalition s = 0; s < size && monotone; ++s) {
      for (int j = 0; j < n; ++j) {
        if (at(s) && !at(s | (Coalition{1} << j))) {
          monotone = false;
          break;
        }
      }
    }
    if (!monotone) continue;
    std::vector<bool> table(size);
    for (Coalition s = 0; s < size; ++s) table[s] = at(s);
    out.push_back(std::move(table));
  }
  return out;
}

inline std::vector<bool> table_of(const SimpleVotingGame& g) {
  std::vector<bool> t(std::size_t{1} << g.players());
  for (Coalition s = 0; s < t.size(); ++s) t[s] = wins(g, s);
  return t;
}

// Random weighted game with weights in [0, max_weight], at least one positive.
inline SimpleVotingGame random_weighted(std::mt19937_64& rng, int n, int max_weight) {
  std::uniform_int_distribution<std::int64_t> wd(0, max_weight);
  while (true) {
    std::vector<std::int64_t> w(static_cast<std::size_t>(n));
    for (auto& x : w) x = wd(rng);
    const std::int64_t total = std::accumulate(w.begin(), w.end(), std::int64_t{0});
    if (total == 0) continue;
    std::uniform_int_distribution<std::int64_t> qd(1, total);
    return vpower::make_weighted(qd(rng), std::move(w));
  }
}

}  // namespace oracle
