#pragma once

#include <cstdint>
#include <optional>

#include "coxcrystal/finite_group.hpp"

namespace coxcrystal {

// Exact k-round comparison game between two finite groups.  Player I picks an
// element on either side each round, player II answers on the other; player II
// survives when every unnested atomic formula (x = y, 1 = y, x^-1 = y,
// x0*x1 = y) holds on one side exactly when it holds on the other.
//
// pre: both orders <= 64, rounds <= 4 (exhaustive minimax with memoisation).
struct EfReport {
  int rounds = 0;
  bool duplicator_wins = false;
  std::int64_t positions_explored = 0;
};

EfReport ef_game(const FiniteGroupView& a, const FiniteGroupView& b, int rounds);

// Smallest number of rounds in which player I forces a win, nullopt when
// player II still survives max_rounds.
std::optional<int> least_distinguishing_rounds(const FiniteGroupView& a,
                                               const FiniteGroupView& b, int max_rounds);

}  // namespace coxcrystal
