#include "stpg/conversions.hpp"

#include <string>

namespace stpg {

ExtReal ConvertedGame::at_payoff(int player, int own_type,
                                 const std::vector<int>& actions) const {
  const ProfileSpace aspace{action_cards};
  const std::int64_t a = aspace.index(actions);
  const std::int64_t pos = (own_type - 1) * aspace.total() + a;
  return at_rows[static_cast<std::size_t>(player) - 1]
                [static_cast<std::size_t>(pos) - 1];
}

ProfileSpace ConvertedGame::at_pair_space() const {
  std::vector<int> cards;
  cards.reserve(type_cards.size());
  for (std::size_t i = 0; i < type_cards.size(); ++i)
    cards.push_back(type_cards[i] * action_cards[i]);
  return ProfileSpace(cards);
}

NormalGame ConvertedGame::at_joint_game() const {
  if (kind != Kind::ActionType)
    throw Error("at_joint_game: not an ActionType conversion");
  const int n = static_cast<int>(type_cards.size());
  const ProfileSpace joint = at_pair_space();
  std::vector<PayoffRow> rows(static_cast<std::size_t>(n),
                              PayoffRow(static_cast<std::size_t>(joint.total())));
  for (std::int64_t s = 1; s <= joint.total(); ++s) {
    const std::vector<int> pairs = joint.unindex(s);
    std::vector<int> types(static_cast<std::size_t>(n)),
        actions(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) {
      const int ri = action_cards[static_cast<std::size_t>(i) - 1];
      const int pair = pairs[static_cast<std::size_t>(i) - 1];
      types[static_cast<std::size_t>(i) - 1] = (pair - 1) / ri + 1;
      actions[static_cast<std::size_t>(i) - 1] = (pair - 1) % ri + 1;
    }
    for (int i = 1; i <= n; ++i)
      rows[static_cast<std::size_t>(i) - 1][static_cast<std::size_t>(s) - 1] =
          at_payoff(i, types[static_cast<std::size_t>(i) - 1], actions);
  }
  std::vector<int> cards;
  for (std::size_t i = 0; i < type_cards.size(); ++i)
    cards.push_back(type_cards[i] * action_cards[i]);
  return NormalGame(std::move(cards), std::move(rows));
}

ConvertedGame harsanyi_convert(const BayesianGame& g) {
  const ProfileSpace tspace = g.type_space();
  const ProfileSpace aspace = g.action_space();
  ConvertedGame cg;
  cg.kind = ConvertedGame::Kind::Harsanyi;
  cg.type_cards = g.type_cards;
  cg.action_cards = g.action_cards;
  std::vector<PayoffRow> rows(static_cast<std::size_t>(g.players()),
                              PayoffRow(static_cast<std::size_t>(aspace.total())));
  for (int i = 1; i <= g.players(); ++i)
    for (std::int64_t a = 1; a <= aspace.total(); ++a) {
      ExtReal sum = 0.0;
      for (std::int64_t t = 1; t <= tspace.total(); ++t)
        sum += scaled(g.prior(t - 1),
                      g.payoffs[static_cast<std::size_t>(i) - 1]
                               [static_cast<std::size_t>(g.cell(t, a)) - 1]);
      rows[static_cast<std::size_t>(i) - 1][static_cast<std::size_t>(a) - 1] = sum;
    }
  cg.game = NormalGame(g.action_cards, std::move(rows));
  return cg;
}

namespace {

// Selten row of one player at own type j: the interim expectation over the
// opponents' types. Shared by selten_convert and at_convert (block identity).
PayoffRow selten_row(const BayesianGame& g, int player, int own_type) {
  const ProfileSpace tspace = g.type_space();
  const ProfileSpace aspace = g.action_space();
  const RealVector p = belief(g, player, own_type);
  const ProfileSpace rest = tspace.without(player);
  PayoffRow row(static_cast<std::size_t>(aspace.total()));
  for (std::int64_t a = 1; a <= aspace.total(); ++a) {
    ExtReal sum = 0.0;
    for (std::int64_t r = 1; r <= rest.total(); ++r) {
      const std::int64_t t =
          tspace.index(tspace.insert(rest.unindex(r), player, own_type));
      sum += scaled(p(r - 1), g.payoffs[static_cast<std::size_t>(player) - 1]
                                       [static_cast<std::size_t>(g.cell(t, a)) - 1]);
    }
    row[static_cast<std::size_t>(a) - 1] = sum;
  }
  return row;
}

}  // namespace

ConvertedGame selten_convert(const BayesianGame& g,
                             const std::vector<int>& type_profile) {
  if (static_cast<int>(type_profile.size()) != g.players())
    throw DimensionError("selten_convert: type profile length mismatch");
  g.type_space().index(type_profile);  // range check
  ConvertedGame cg;
  cg.kind = ConvertedGame::Kind::Selten;
  cg.type_profile = type_profile;
  cg.type_cards = g.type_cards;
  cg.action_cards = g.action_cards;
  std::vector<PayoffRow> rows;
  rows.reserve(static_cast<std::size_t>(g.players()));
  for (int i = 1; i <= g.players(); ++i)
    rows.push_back(
        selten_row(g, i, type_profile[static_cast<std::size_t>(i) - 1]));
  cg.game = NormalGame(g.action_cards, std::move(rows));
  return cg;
}

ConvertedGame at_convert(const BayesianGame& g) {
  const ProfileSpace tspace = g.type_space();
  const ProfileSpace aspace = g.action_space();
  ConvertedGame cg;
  cg.kind = ConvertedGame::Kind::ActionType;
  cg.type_cards = g.type_cards;
  cg.action_cards = g.action_cards;
  cg.at_rows.assign(static_cast<std::size_t>(g.players()), {});
  for (int i = 1; i <= g.players(); ++i) {
    PayoffRow& row = cg.at_rows[static_cast<std::size_t>(i) - 1];
    row.reserve(static_cast<std::size_t>(tspace.card(i) * aspace.total()));
    for (int j = 1; j <= tspace.card(i); ++j) {
      const PayoffRow block = selten_row(g, i, j);
      row.insert(row.end(), block.begin(), block.end());
    }
  }
  return cg;
}

PayoffRow at_lift(const ConvertedGame& cg, int player) {
  if (cg.kind != ConvertedGame::Kind::ActionType)
    throw Error("at_lift: not an ActionType conversion");
  const ProfileSpace tspace{cg.type_cards};
  const ProfileSpace aspace{cg.action_cards};
  PayoffRow out(static_cast<std::size_t>(tspace.total() * aspace.total()));
  for (std::int64_t t = 1; t <= tspace.total(); ++t) {
    const int ti = tspace.unindex(t)[static_cast<std::size_t>(player) - 1];
    for (std::int64_t a = 1; a <= aspace.total(); ++a) {
      const std::int64_t pos = (t - 1) * aspace.total() + a;
      const std::int64_t compact = (ti - 1) * aspace.total() + a;
      out[static_cast<std::size_t>(pos) - 1] =
          cg.at_rows[static_cast<std::size_t>(player) - 1]
                    [static_cast<std::size_t>(compact) - 1];
    }
  }
  return out;
}

std::vector<std::vector<int>> h_bne(const BayesianGame& g) {
  return pure_nash(harsanyi_convert(g).game);
}

std::vector<std::vector<int>> s_bne(const BayesianGame& g,
                                    const std::vector<int>& type_profile) {
  return pure_nash(selten_convert(g, type_profile).game);
}

std::vector<AtProfile> at_bne(const ConvertedGame& cg) {
  if (cg.kind != ConvertedGame::Kind::ActionType)
    throw Error("at_bne: not an ActionType conversion");
  const int n = static_cast<int>(cg.type_cards.size());
  const ProfileSpace tspace{cg.type_cards};
  const ProfileSpace aspace{cg.action_cards};
  std::vector<AtProfile> result;
  for (std::int64_t t = 1; t <= tspace.total(); ++t) {
    const std::vector<int> types = tspace.unindex(t);
    for (std::int64_t a = 1; a <= aspace.total(); ++a) {
      const std::vector<int> actions = aspace.unindex(a);
      bool eq = true;
      for (int i = 1; i <= n && eq; ++i) {
        const ExtReal own =
            cg.at_payoff(i, types[static_cast<std::size_t>(i) - 1], actions);
        if (own.is_neg_inf()) {
          eq = false;
          break;
        }
        std::vector<int> dev = actions;
        for (int tj = 1; tj <= tspace.card(i) && eq; ++tj)
          for (int aj = 1; aj <= aspace.card(i); ++aj) {
            dev[static_cast<std::size_t>(i) - 1] = aj;
            if (cg.at_payoff(i, tj, dev) > own) {
              eq = false;
              break;
            }
          }
      }
      if (eq) result.push_back(AtProfile{types, actions});
    }
  }
  return result;
}

std::vector<AtProfile> at_bne(const BayesianGame& g) {
  return at_bne(at_convert(g));
}

}  // namespace stpg
