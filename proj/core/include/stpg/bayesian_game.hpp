#ifndef STPG_BAYESIAN_GAME_HPP
#define STPG_BAYESIAN_GAME_HPP

#include <optional>
#include <vector>

#include "stpg/ext_real.hpp"
#include "stpg/stp.hpp"

namespace stpg {

/// Finite static Bayesian game in padded structure-vector form.
///
/// Payoff row i has length tau * r and is indexed (t, a) with the type
/// profile most significant; inside t and a, player 1 is most significant.
/// An entry is finite exactly when every player's action is admissible under
/// that player's type; all other cells hold -inf.
struct BayesianGame {
  std::vector<int> type_cards;    // (tau_1, ..., tau_n)
  std::vector<int> action_cards;  // (r_1, ..., r_n)
  // admissible[i-1][j-1]: sorted 1-based actions allowed to player i of type j
  std::vector<std::vector<std::vector<int>>> admissible;
  std::vector<PayoffRow> payoffs;  // n rows of length tau * r
  RealVector prior;                // length tau, lexicographic type profiles

  int players() const { return static_cast<int>(type_cards.size()); }
  ProfileSpace type_space() const { return ProfileSpace(type_cards); }
  ProfileSpace action_space() const { return ProfileSpace(action_cards); }

  /// Flat (t, a) cell position from 1-based type/action profile indices.
  std::int64_t cell(std::int64_t t_idx, std::int64_t a_idx) const;

  bool action_admissible(int player, int type_index, int action) const;
  /// True iff a_j ∈ A_j(t_j) for every player j.
  bool profile_admissible(const std::vector<int>& types,
                          const std::vector<int>& actions) const;
};

/// Belief matrix of one player: column j is p_i(t_i^j), the conditional
/// distribution of the opponents' type profile (lexicographic order) given
/// own type j.
struct BeliefMatrix {
  int player = 1;
  RealMatrix columns;  // (tau / tau_i) x tau_i
};

/// Type-contingent pure strategy profile: action_for_type[i-1][j-1] is the
/// action player i of type j plays; always admissible.
struct TypeStrategy {
  std::vector<std::vector<int>> action_for_type;

  friend bool operator==(const TypeStrategy&, const TypeStrategy&) = default;
};

/// Builds the padded game from per-cell payoff tables. `tables[i-1]` is a
/// dense row over (t, a) whose entries are required exactly on admissible
/// cells; `std::nullopt` elsewhere. Throws ValidationError with a
/// field/coordinate diagnostic on missing entries, stray entries at
/// inadmissible cells, or a bad prior.
BayesianGame assemble(
    std::vector<int> type_cards, std::vector<int> action_cards,
    std::vector<std::vector<std::vector<int>>> admissible,
    const std::vector<std::vector<std::optional<double>>>& tables,
    RealVector prior);

/// Marginal prior of player i's own type.
RealVector marginal_prior(const BayesianGame& g, int player);

/// p_i(t_{-i} | t_i = t_i^j). Throws ZeroProbabilityTypeError when the
/// marginal of t_i^j vanishes.
RealVector belief(const BayesianGame& g, int player, int type_index);

BeliefMatrix belief_matrix(const BayesianGame& g, int player);

/// Ex-ante expectation sum_t Pr(t) c-bar_i(a, t); zero-probability types
/// cannot poison the sum (0 * -inf = 0).
ExtReal expected_payoff_tn(const BayesianGame& g, int player,
                           const std::vector<int>& action);

/// Interim expectation sum_{t_{-i}} p_i(t_{-i}|t_i^j) c-bar_i(a, t_i^j, t_{-i}).
ExtReal expected_payoff_th(const BayesianGame& g, int player,
                           const std::vector<int>& action, int type_index);

/// Pure Bayesian-Nash equilibria in the interim sense: every type of every
/// player best-responds, given beliefs, to the opponents' type-contingent
/// strategies. Requires all type marginals positive.
std::vector<TypeStrategy> interim_bne(const BayesianGame& g);

}  // namespace stpg

#endif  // STPG_BAYESIAN_GAME_HPP
