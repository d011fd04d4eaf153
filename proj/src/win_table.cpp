#include "vpower/win_table.hpp"

#include "vpower/simd/kernels.hpp"

namespace vpower {

WinTable WinTable::build(const SimpleVotingGame& game, const Limits& limits) {
  const int n = game.players();
  require_enumerable(n, limits);
  const auto& kernels = simd::active_kernels();
  std::vector<std::uint64_t> words(simd::words_for(n), 0);
  if (const auto* w = game.weighted()) {
    kernels.fill_weighted(w->weights, w->quota, words);
  } else {
    for (Coalition m : game.explicit_rule()->min_winning) words[m >> 6] |= std::uint64_t{1} << (m & 63);
    kernels.upward_closure(n, words);
  }
  return WinTable(n, std::move(words));
}

std::uint64_t WinTable::swings(PlayerId p) const {
  return simd::active_kernels().swing_count(n_, p, words_);
}

std::vector<Coalition> WinTable::minimal_winning() const {
  std::vector<Coalition> out;
  const Coalition end = Coalition{1} << n_;
  for (Coalition s = 1; s < end; ++s) {
    if (!(*this)[s]) continue;
    bool minimal = true;
    for (Coalition rest = s; rest != 0 && minimal; rest &= rest - 1) {
      if ((*this)[s & ~(rest & -rest)]) minimal = false;
    }
    if (minimal) out.push_back(s);
  }
  // ∅ winning (invalid game) is still reported so callers can reject it.
  if ((*this)[0]) out.insert(out.begin(), 0);
  return out;
}

}  // namespace vpower
