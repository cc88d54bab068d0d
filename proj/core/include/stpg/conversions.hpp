#ifndef STPG_CONVERSIONS_HPP
#define STPG_CONVERSIONS_HPP

#include <vector>

#include "stpg/bayesian_game.hpp"
#include "stpg/normal_game.hpp"

namespace stpg {

/// A Bayesian game converted to complete information.
///
/// Harsanyi / Selten: `game` is a normal game over the action cardinalities
/// (r_1, ..., r_n).
///
/// ActionType: player i's strategy is the pair (t_i, a_i), indexed t_i-major.
/// Since c_i^{AT} ignores the opponents' types, the payoff rows are stored
/// compactly: at_rows[i-1] has length tau_i * r, indexed (t_i, a). Use
/// at_payoff / at_lift / at_joint_game to evaluate over joint profiles.
struct ConvertedGame {
  enum class Kind { Harsanyi, Selten, ActionType };

  Kind kind = Kind::Harsanyi;
  std::vector<int> type_profile;  // Selten's fixed t-bar; empty otherwise
  std::vector<int> type_cards;
  std::vector<int> action_cards;
  NormalGame game;                 // Harsanyi / Selten payoff carrier
  std::vector<PayoffRow> at_rows;  // ActionType compact rows

  /// c_i^{AT} at own type t_i and full action profile a.
  ExtReal at_payoff(int player, int own_type,
                    const std::vector<int>& actions) const;
  /// State space of joint (t_i, a_i) pairs, one coordinate per player.
  ProfileSpace at_pair_space() const;
  /// Expands the compact rows to a NormalGame over ((tau_1 r_1), ...,
  /// (tau_n r_n)); payoffs are constant in the opponents' type coordinates.
  NormalGame at_joint_game() const;
};

/// V_i^H = V_i^c-bar ltimes p (prior as a column), with 0 * -inf = 0.
ConvertedGame harsanyi_convert(const BayesianGame& g);

/// V_i^S = V_i^c-bar ltimes W_[tau_i, prod_{k<i} tau_k] ltimes delta^{t-bar_i}
/// ltimes p_i(t-bar_i): the interim expectation at the fixed type profile.
ConvertedGame selten_convert(const BayesianGame& g,
                             const std::vector<int>& type_profile);

/// V_i^{AT} = V_i^c-bar ltimes W ltimes (I_{tau_i} * p_i): block j is the
/// Selten row for t-bar_i = j.
ConvertedGame at_convert(const BayesianGame& g);

/// Lift of one compact ActionType row over the full (t, a) space; constant
/// in every opponent type coordinate.
PayoffRow at_lift(const ConvertedGame& cg, int player);

std::vector<std::vector<int>> h_bne(const BayesianGame& g);
std::vector<std::vector<int>> s_bne(const BayesianGame& g,
                                    const std::vector<int>& type_profile);

/// Joint type/action equilibrium point of the ActionType game.
struct AtProfile {
  std::vector<int> types;
  std::vector<int> actions;

  friend bool operator==(const AtProfile&, const AtProfile&) = default;
};

/// (t*, a*) such that for every player, (t_i*, a_i*) maximizes
/// c_i^{AT}(a_i, t_i, a*_{-i}) over T_i x A_i with a finite value.
std::vector<AtProfile> at_bne(const BayesianGame& g);
std::vector<AtProfile> at_bne(const ConvertedGame& cg);

}  // namespace stpg

#endif  // STPG_CONVERSIONS_HPP
