#ifndef STPG_NORMAL_GAME_HPP
#define STPG_NORMAL_GAME_HPP

#include <vector>

#include "stpg/ext_real.hpp"
#include "stpg/stp.hpp"

namespace stpg {

/// Finite normal-form game in structure-vector form. Payoff row i lists
/// c_i over all strategy profiles in the lexicographic (player-1-major)
/// order of ProfileSpace; entries may be -inf (inadmissibility padding).
struct NormalGame {
  std::vector<int> cardinalities;   // (k_1, ..., k_n)
  std::vector<PayoffRow> payoffs;   // n rows, each of length kappa

  NormalGame() = default;
  NormalGame(std::vector<int> cards, std::vector<PayoffRow> rows);

  int players() const { return static_cast<int>(cardinalities.size()); }
  ProfileSpace space() const { return ProfileSpace(cardinalities); }
};

/// c_i at a profile of 1-based strategy indices.
ExtReal payoff(const NormalGame& g, int player, const std::vector<int>& profile);

/// Best responses of `player` against the opponents' strategies carried by
/// `profile` (the player's own coordinate is ignored). Ties are returned in
/// full; the set is empty only when every candidate payoff is -inf.
std::vector<int> best_responses(const NormalGame& g, int player,
                                const std::vector<int>& profile);

/// Exhaustive pure-Nash enumeration. A profile with its own payoff -inf for
/// some player is never an equilibrium (padding encodes inadmissibility).
std::vector<std::vector<int>> pure_nash(const NormalGame& g);

/// Equivalent vector form W_G = [V_2 - V_1, ..., V_n - V_1] as one row of
/// length (n-1)*kappa. Throws InfinitePayoffError on any -inf entry.
RowVector equivalent_vector_form(const NormalGame& g);

}  // namespace stpg

#endif  // STPG_NORMAL_GAME_HPP
