#include "stpg/normal_game.hpp"

#include <string>

namespace stpg {

NormalGame::NormalGame(std::vector<int> cards, std::vector<PayoffRow> rows)
    : cardinalities(std::move(cards)), payoffs(std::move(rows)) {
  const ProfileSpace sp(cardinalities);
  if (payoffs.empty())
    throw DimensionError("NormalGame: at least one payoff row required");
  if (static_cast<int>(payoffs.size()) != players())
    throw DimensionError("NormalGame: expected " + std::to_string(players()) +
                         " payoff rows, got " + std::to_string(payoffs.size()));
  for (const auto& row : payoffs)
    if (static_cast<std::int64_t>(row.size()) != sp.total())
      throw DimensionError("NormalGame: payoff row length " +
                           std::to_string(row.size()) + " != kappa = " +
                           std::to_string(sp.total()));
}

ExtReal payoff(const NormalGame& g, int player, const std::vector<int>& profile) {
  if (player < 1 || player > g.players())
    throw IndexError("payoff: player " + std::to_string(player));
  const std::int64_t idx = g.space().index(profile);
  return g.payoffs[static_cast<std::size_t>(player) - 1]
                  [static_cast<std::size_t>(idx) - 1];
}

std::vector<int> best_responses(const NormalGame& g, int player,
                                const std::vector<int>& profile) {
  const int k = g.space().card(player);
  std::vector<int> deviated = profile;
  ExtReal best = ExtReal::neg_inf();
  std::vector<int> arg;
  for (int s = 1; s <= k; ++s) {
    deviated[static_cast<std::size_t>(player) - 1] = s;
    const ExtReal v = payoff(g, player, deviated);
    if (v.is_neg_inf()) continue;
    if (arg.empty() || v > best) {
      best = v;
      arg = {s};
    } else if (v == best) {
      arg.push_back(s);
    }
  }
  return arg;
}

std::vector<std::vector<int>> pure_nash(const NormalGame& g) {
  const ProfileSpace sp = g.space();
  std::vector<std::vector<int>> result;
  for (std::int64_t idx = 1; idx <= sp.total(); ++idx) {
    std::vector<int> profile = sp.unindex(idx);
    bool nash = true;
    for (int i = 1; i <= g.players() && nash; ++i) {
      const ExtReal own = payoff(g, i, profile);
      if (own.is_neg_inf()) {
        nash = false;
        break;
      }
      std::vector<int> deviated = profile;
      for (int s = 1; s <= sp.card(i); ++s) {
        deviated[static_cast<std::size_t>(i) - 1] = s;
        if (payoff(g, i, deviated) > own) {
          nash = false;
          break;
        }
      }
    }
    if (nash) result.push_back(std::move(profile));
  }
  return result;
}

RowVector equivalent_vector_form(const NormalGame& g) {
  const std::int64_t kappa = g.space().total();
  for (const auto& row : g.payoffs)
    for (ExtReal v : row)
      if (v.is_neg_inf())
        throw InfinitePayoffError(
            "equivalent_vector_form: payoffs must be finite");
  RowVector w(static_cast<Eigen::Index>((g.players() - 1) * kappa));
  for (int i = 2; i <= g.players(); ++i)
    for (std::int64_t s = 0; s < kappa; ++s)
      w(static_cast<Eigen::Index>((i - 2) * kappa + s)) =
          g.payoffs[static_cast<std::size_t>(i) - 1][static_cast<std::size_t>(s)]
              .value() -
          g.payoffs[0][static_cast<std::size_t>(s)].value();
  return w;
}

}  // namespace stpg
