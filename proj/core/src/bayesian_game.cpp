#include "stpg/bayesian_game.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace stpg {

namespace {

std::string profile_str(const std::vector<int>& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.size(); ++i)
    s += (i ? "," : "") + std::to_string(p[i]);
  return s + ")";
}

}  // namespace

std::int64_t BayesianGame::cell(std::int64_t t_idx, std::int64_t a_idx) const {
  return (t_idx - 1) * action_space().total() + a_idx;
}

bool BayesianGame::action_admissible(int player, int type_index,
                                     int action) const {
  const auto& set = admissible[static_cast<std::size_t>(player) - 1]
                              [static_cast<std::size_t>(type_index) - 1];
  return std::binary_search(set.begin(), set.end(), action);
}

bool BayesianGame::profile_admissible(const std::vector<int>& types,
                                      const std::vector<int>& actions) const {
  for (int i = 1; i <= players(); ++i)
    if (!action_admissible(i, types[static_cast<std::size_t>(i) - 1],
                           actions[static_cast<std::size_t>(i) - 1]))
      return false;
  return true;
}

BayesianGame assemble(
    std::vector<int> type_cards, std::vector<int> action_cards,
    std::vector<std::vector<std::vector<int>>> admissible,
    const std::vector<std::vector<std::optional<double>>>& tables,
    RealVector prior) {
  BayesianGame g;
  g.type_cards = std::move(type_cards);
  g.action_cards = std::move(action_cards);
  g.admissible = std::move(admissible);

  const int n = g.players();
  if (n < 1) throw ValidationError("players: at least one player required");
  if (static_cast<int>(g.action_cards.size()) != n)
    throw ValidationError("actions: expected one cardinality per player");
  const ProfileSpace tspace = g.type_space();
  const ProfileSpace aspace = g.action_space();

  if (static_cast<int>(g.admissible.size()) != n)
    throw ValidationError("admissible: expected one entry per player");
  for (int i = 1; i <= n; ++i) {
    auto& per_type = g.admissible[static_cast<std::size_t>(i) - 1];
    if (static_cast<int>(per_type.size()) != tspace.card(i))
      throw ValidationError("admissible[" + std::to_string(i) +
                            "]: expected one action set per type");
    for (int j = 1; j <= tspace.card(i); ++j) {
      auto& set = per_type[static_cast<std::size_t>(j) - 1];
      std::sort(set.begin(), set.end());
      set.erase(std::unique(set.begin(), set.end()), set.end());
      if (set.empty())
        throw ValidationError("admissible[" + std::to_string(i) + "][" +
                              std::to_string(j) + "]: empty action set");
      for (int a : set)
        if (a < 1 || a > aspace.card(i))
          throw ValidationError("admissible[" + std::to_string(i) + "][" +
                                std::to_string(j) + "]: action " +
                                std::to_string(a) + " outside 1.." +
                                std::to_string(aspace.card(i)));
    }
  }

  if (prior.size() != tspace.total())
    throw ValidationError("prior: expected " + std::to_string(tspace.total()) +
                          " entries, got " + std::to_string(prior.size()));
  double sum = 0.0;
  for (Eigen::Index k = 0; k < prior.size(); ++k) {
    if (prior(k) < 0.0)
      throw ValidationError("prior[" + std::to_string(k + 1) +
                            "]: negative probability");
    sum += prior(k);
  }
  if (std::abs(sum - 1.0) > 1e-9)
    throw ValidationError("prior: entries sum to " + std::to_string(sum) +
                          ", expected 1");
  g.prior = std::move(prior);

  if (static_cast<int>(tables.size()) != n)
    throw ValidationError("payoffs: expected one row per player");
  const std::int64_t cells = tspace.total() * aspace.total();
  g.payoffs.assign(static_cast<std::size_t>(n),
                   PayoffRow(static_cast<std::size_t>(cells)));
  for (int i = 1; i <= n; ++i) {
    const auto& tab = tables[static_cast<std::size_t>(i) - 1];
    if (static_cast<std::int64_t>(tab.size()) != cells)
      throw ValidationError("payoffs[" + std::to_string(i) + "]: expected " +
                            std::to_string(cells) + " entries, got " +
                            std::to_string(tab.size()));
    for (std::int64_t t = 1; t <= tspace.total(); ++t) {
      const std::vector<int> tp = tspace.unindex(t);
      for (std::int64_t a = 1; a <= aspace.total(); ++a) {
        const std::vector<int> ap = aspace.unindex(a);
        const std::size_t pos = static_cast<std::size_t>(g.cell(t, a)) - 1;
        const auto& entry = tab[pos];
        if (g.profile_admissible(tp, ap)) {
          if (!entry.has_value())
            throw ValidationError(
                "payoffs[" + std::to_string(i) + "][" + std::to_string(pos + 1) +
                "]: missing value at admissible cell (type profile " +
                profile_str(tp) + ", action profile " + profile_str(ap) + ")");
          if (!std::isfinite(*entry))
            throw ValidationError("payoffs[" + std::to_string(i) + "][" +
                                  std::to_string(pos + 1) +
                                  "]: non-finite value");
          g.payoffs[static_cast<std::size_t>(i) - 1][pos] = *entry;
        } else {
          if (entry.has_value())
            throw ValidationError(
                "payoffs[" + std::to_string(i) + "][" + std::to_string(pos + 1) +
                "]: value given at inadmissible cell (type profile " +
                profile_str(tp) + ", action profile " + profile_str(ap) + ")");
          g.payoffs[static_cast<std::size_t>(i) - 1][pos] = ExtReal::neg_inf();
        }
      }
    }
  }
  return g;
}

RealVector marginal_prior(const BayesianGame& g, int player) {
  const ProfileSpace tspace = g.type_space();
  RealVector m = RealVector::Zero(tspace.card(player));
  for (std::int64_t t = 1; t <= tspace.total(); ++t) {
    const std::vector<int> tp = tspace.unindex(t);
    m(tp[static_cast<std::size_t>(player) - 1] - 1) += g.prior(t - 1);
  }
  return m;
}

RealVector belief(const BayesianGame& g, int player, int type_index) {
  const ProfileSpace tspace = g.type_space();
  if (type_index < 1 || type_index > tspace.card(player))
    throw IndexError("belief: type index " + std::to_string(type_index));
  const double pj = marginal_prior(g, player)(type_index - 1);
  if (pj <= 0.0)
    throw ZeroProbabilityTypeError(
        "belief: type " + std::to_string(type_index) + " of player " +
        std::to_string(player) + " has zero marginal probability");
  const ProfileSpace rest = tspace.without(player);
  RealVector p = RealVector::Zero(rest.total());
  for (std::int64_t r = 1; r <= rest.total(); ++r) {
    const std::vector<int> full =
        tspace.insert(rest.unindex(r), player, type_index);
    p(r - 1) = g.prior(tspace.index(full) - 1) / pj;
  }
  return p;
}

BeliefMatrix belief_matrix(const BayesianGame& g, int player) {
  const int taui = g.type_space().card(player);
  BeliefMatrix bm;
  bm.player = player;
  RealVector first = belief(g, player, 1);
  bm.columns.resize(first.size(), taui);
  bm.columns.col(0) = first;
  for (int j = 2; j <= taui; ++j) bm.columns.col(j - 1) = belief(g, player, j);
  return bm;
}

ExtReal expected_payoff_tn(const BayesianGame& g, int player,
                           const std::vector<int>& action) {
  const ProfileSpace tspace = g.type_space();
  const std::int64_t a = g.action_space().index(action);
  ExtReal sum = 0.0;
  for (std::int64_t t = 1; t <= tspace.total(); ++t)
    sum += scaled(g.prior(t - 1),
                  g.payoffs[static_cast<std::size_t>(player) - 1]
                           [static_cast<std::size_t>(g.cell(t, a)) - 1]);
  return sum;
}

ExtReal expected_payoff_th(const BayesianGame& g, int player,
                           const std::vector<int>& action, int type_index) {
  const ProfileSpace tspace = g.type_space();
  const std::int64_t a = g.action_space().index(action);
  const RealVector p = belief(g, player, type_index);
  const ProfileSpace rest = tspace.without(player);
  ExtReal sum = 0.0;
  for (std::int64_t r = 1; r <= rest.total(); ++r) {
    const std::int64_t t =
        tspace.index(tspace.insert(rest.unindex(r), player, type_index));
    sum += scaled(p(r - 1), g.payoffs[static_cast<std::size_t>(player) - 1]
                                     [static_cast<std::size_t>(g.cell(t, a)) - 1]);
  }
  return sum;
}

namespace {

// Interim value of playing a_i as type j while the opponents follow sigma.
ExtReal interim_value(const BayesianGame& g, const TypeStrategy& sigma,
                      int player, int type_index, int own_action,
                      const RealVector& belief_col) {
  const ProfileSpace tspace = g.type_space();
  const ProfileSpace rest = tspace.without(player);
  ExtReal sum = 0.0;
  for (std::int64_t r = 1; r <= rest.total(); ++r) {
    const std::vector<int> tp =
        tspace.insert(rest.unindex(r), player, type_index);
    std::vector<int> ap(static_cast<std::size_t>(g.players()));
    for (int j = 1; j <= g.players(); ++j)
      ap[static_cast<std::size_t>(j) - 1] =
          (j == player)
              ? own_action
              : sigma.action_for_type[static_cast<std::size_t>(j) - 1]
                                     [static_cast<std::size_t>(
                                          tp[static_cast<std::size_t>(j) - 1]) -
                                      1];
    const std::int64_t t = tspace.index(tp);
    const std::int64_t a = g.action_space().index(ap);
    sum += scaled(belief_col(r - 1),
                  g.payoffs[static_cast<std::size_t>(player) - 1]
                           [static_cast<std::size_t>(g.cell(t, a)) - 1]);
  }
  return sum;
}

}  // namespace

std::vector<TypeStrategy> interim_bne(const BayesianGame& g) {
  const int n = g.players();
  const ProfileSpace tspace = g.type_space();

  std::vector<std::vector<RealVector>> beliefs(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= tspace.card(i); ++j)
      beliefs[static_cast<std::size_t>(i) - 1].push_back(belief(g, i, j));

  // Enumerate admissible type strategies as one mixed-radix counter over
  // all (player, type) slots.
  std::vector<std::pair<int, int>> slots;  // (player, type)
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= tspace.card(i); ++j) slots.emplace_back(i, j);
  std::vector<std::size_t> choice(slots.size(), 0);

  std::vector<TypeStrategy> result;
  while (true) {
    TypeStrategy sigma;
    sigma.action_for_type.assign(static_cast<std::size_t>(n), {});
    for (int i = 1; i <= n; ++i)
      sigma.action_for_type[static_cast<std::size_t>(i) - 1].assign(
          static_cast<std::size_t>(tspace.card(i)), 0);
    for (std::size_t s = 0; s < slots.size(); ++s) {
      const auto [i, j] = slots[s];
      sigma.action_for_type[static_cast<std::size_t>(i) - 1]
                           [static_cast<std::size_t>(j) - 1] =
          g.admissible[static_cast<std::size_t>(i) - 1]
                      [static_cast<std::size_t>(j) - 1][choice[s]];
    }

    bool equilibrium = true;
    for (int i = 1; i <= n && equilibrium; ++i) {
      for (int j = 1; j <= tspace.card(i) && equilibrium; ++j) {
        const RealVector& bc =
            beliefs[static_cast<std::size_t>(i) - 1][static_cast<std::size_t>(j) - 1];
        const int played = sigma.action_for_type[static_cast<std::size_t>(i) - 1]
                                                [static_cast<std::size_t>(j) - 1];
        const ExtReal own = interim_value(g, sigma, i, j, played, bc);
        for (int a : g.admissible[static_cast<std::size_t>(i) - 1]
                                 [static_cast<std::size_t>(j) - 1]) {
          if (interim_value(g, sigma, i, j, a, bc) > own) {
            equilibrium = false;
            break;
          }
        }
      }
    }
    if (equilibrium) result.push_back(std::move(sigma));

    std::size_t s = 0;
    for (; s < slots.size(); ++s) {
      const auto [i, j] = slots[s];
      const std::size_t limit = g.admissible[static_cast<std::size_t>(i) - 1]
                                            [static_cast<std::size_t>(j) - 1]
                                                .size();
      if (++choice[s] < limit) break;
      choice[s] = 0;
    }
    if (s == slots.size()) break;
  }
  return result;
}

}  // namespace stpg
