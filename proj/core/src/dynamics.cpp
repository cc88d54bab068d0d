#include "stpg/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <string>

namespace stpg {

TransitionMatrix::TransitionMatrix(RealMatrix columns) : m_(std::move(columns)) {
  if (m_.rows() != m_.cols() || m_.rows() < 1)
    throw DimensionError("TransitionMatrix: square matrix required");
  for (Eigen::Index c = 0; c < m_.cols(); ++c) {
    double sum = 0.0;
    for (Eigen::Index r = 0; r < m_.rows(); ++r) {
      if (m_(r, c) < 0.0)
        throw Error("TransitionMatrix: negative entry at (" +
                    std::to_string(r + 1) + "," + std::to_string(c + 1) + ")");
      sum += m_(r, c);
    }
    if (std::abs(sum - 1.0) > 1e-12)
      throw Error("TransitionMatrix: column " + std::to_string(c + 1) +
                  " sums to " + std::to_string(sum));
  }
}

bool TransitionMatrix::is_logical() const {
  for (Eigen::Index c = 0; c < m_.cols(); ++c)
    for (Eigen::Index r = 0; r < m_.rows(); ++r)
      if (m_(r, c) != 0.0 && m_(r, c) != 1.0) return false;
  return true;
}

LogicalMatrix TransitionMatrix::logical() const {
  if (!is_logical()) throw Error("TransitionMatrix: not a logical matrix");
  LogicalMatrix lm;
  lm.rows = static_cast<int>(m_.rows());
  lm.column_indices.resize(static_cast<std::size_t>(m_.cols()));
  for (Eigen::Index c = 0; c < m_.cols(); ++c)
    for (Eigen::Index r = 0; r < m_.rows(); ++r)
      if (m_(r, c) == 1.0)
        lm.column_indices[static_cast<std::size_t>(c)] = static_cast<int>(r) + 1;
  return lm;
}

TransitionMatrix from_logical(const LogicalMatrix& m) {
  if (m.rows != m.cols())
    throw DimensionError("from_logical: square matrix required");
  return TransitionMatrix(m.dense());
}

const TransitionMatrix& TransitionSystem::matrix() const {
  if (!single_step())
    throw Error("TransitionSystem: schedule has multiple per-step maps");
  return steps[0];
}

TransitionMatrix TransitionSystem::round() const {
  RealMatrix prod = steps[0].matrix();
  for (std::size_t k = 1; k < steps.size(); ++k)
    prod = steps[k].matrix() * prod;
  return TransitionMatrix(prod);
}

ProfileSpace dynamics_state_space(const ConvertedGame& cg) {
  if (cg.kind == ConvertedGame::Kind::ActionType) return cg.at_pair_space();
  if (cg.kind == ConvertedGame::Kind::Selten)
    return ProfileSpace(cg.action_cards);
  throw Error("dynamics: Selten or ActionType conversion required");
}

namespace {

enum class SubKind { Pair, ActionOnly, TypeOnly };

struct SubUpdate {
  int player = 1;
  SubKind kind = SubKind::Pair;  // Pair covers the Selten action update too
};

// Decoded dynamics state: actions always, own types only for ActionType.
struct DecodedState {
  std::vector<int> types;    // empty for Selten
  std::vector<int> actions;
};

DecodedState decode_state(const ConvertedGame& cg, const ProfileSpace& space,
                          int state) {
  DecodedState d;
  const std::vector<int> coords = space.unindex(state);
  const int n = static_cast<int>(cg.action_cards.size());
  d.actions.resize(static_cast<std::size_t>(n));
  if (cg.kind == ConvertedGame::Kind::Selten) {
    d.actions = coords;
    return d;
  }
  d.types.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const int ri = cg.action_cards[static_cast<std::size_t>(i)];
    d.types[static_cast<std::size_t>(i)] =
        (coords[static_cast<std::size_t>(i)] - 1) / ri + 1;
    d.actions[static_cast<std::size_t>(i)] =
        (coords[static_cast<std::size_t>(i)] - 1) % ri + 1;
  }
  return d;
}

// Candidate coordinate values (in the player's state coordinate) and payoffs
// for one sub-update at one state.
struct Candidates {
  std::vector<int> values;
  std::vector<ExtReal> payoffs;
};

Candidates list_candidates(const ConvertedGame& cg, const SubUpdate& sub,
                           const DecodedState& d) {
  Candidates cand;
  const int i = sub.player;
  const std::size_t ui = static_cast<std::size_t>(i) - 1;
  std::vector<int> actions = d.actions;
  if (cg.kind == ConvertedGame::Kind::Selten) {
    const int ri = cg.action_cards[ui];
    for (int a = 1; a <= ri; ++a) {
      actions[ui] = a;
      cand.values.push_back(a);
      cand.payoffs.push_back(payoff(cg.game, i, actions));
    }
    return cand;
  }
  const int ri = cg.action_cards[ui];
  const int taui = cg.type_cards[ui];
  switch (sub.kind) {
    case SubKind::Pair:
      for (int t = 1; t <= taui; ++t)
        for (int a = 1; a <= ri; ++a) {
          actions[ui] = a;
          cand.values.push_back((t - 1) * ri + a);
          cand.payoffs.push_back(cg.at_payoff(i, t, actions));
        }
      break;
    case SubKind::ActionOnly:
      for (int a = 1; a <= ri; ++a) {
        actions[ui] = a;
        cand.values.push_back((d.types[ui] - 1) * ri + a);
        cand.payoffs.push_back(cg.at_payoff(i, d.types[ui], actions));
      }
      break;
    case SubKind::TypeOnly:
      for (int t = 1; t <= taui; ++t) {
        cand.values.push_back((t - 1) * ri + d.actions[ui]);
        cand.payoffs.push_back(cg.at_payoff(i, t, actions));
      }
      break;
  }
  return cand;
}

// Distribution of player i's next state coordinate under one sub-update.
RealVector update_distribution(const ConvertedGame& cg, const SurConfig& cfg,
                               const SubUpdate& sub, const DecodedState& d,
                               int coord_card, int state_for_message) {
  const Candidates cand = list_candidates(cg, sub, d);
  RealVector dist = RealVector::Zero(coord_card);
  std::vector<std::size_t> feasible;
  for (std::size_t k = 0; k < cand.payoffs.size(); ++k)
    if (cand.payoffs[k].finite()) feasible.push_back(k);
  if (feasible.empty())
    throw InfeasibleUpdateError(
        "dynamics: every candidate of player " + std::to_string(sub.player) +
        " has payoff -inf at state " + std::to_string(state_for_message));

  if (cfg.rule == UpdateRule::Mbra) {
    double best = cand.payoffs[feasible[0]].value();
    for (std::size_t k : feasible) best = std::max(best, cand.payoffs[k].value());
    std::vector<std::size_t> arg;
    for (std::size_t k : feasible)
      if (cand.payoffs[k].value() == best) arg.push_back(k);
    if (cfg.tie_break == TieBreak::LowestIndex) {
      dist(cand.values[arg[0]] - 1) = 1.0;
    } else {
      for (std::size_t k : arg)
        dist(cand.values[k] - 1) = 1.0 / static_cast<double>(arg.size());
    }
    return dist;
  }

  // Logit: shift by the max for numerical stability.
  double vmax = cand.payoffs[feasible[0]].value();
  for (std::size_t k : feasible) vmax = std::max(vmax, cand.payoffs[k].value());
  double z = 0.0;
  for (std::size_t k : feasible) {
    const double w = std::exp(cfg.lambda * (cand.payoffs[k].value() - vmax));
    dist(cand.values[k] - 1) += w;
    z += w;
  }
  dist /= z;
  return dist;
}

std::vector<SubUpdate> sub_updates(const ConvertedGame& cg,
                                   const SurConfig& cfg) {
  const int n = static_cast<int>(cg.action_cards.size());
  std::vector<int> order = cfg.order;
  if (order.empty())
    for (int i = 1; i <= n; ++i) order.push_back(i);
  if (static_cast<int>(order.size()) != n)
    throw DimensionError("dynamics: order must list every player once");
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (int i : order) {
    if (i < 1 || i > n || seen[static_cast<std::size_t>(i) - 1])
      throw DimensionError("dynamics: order must be a permutation of players");
    seen[static_cast<std::size_t>(i) - 1] = true;
  }

  const bool separate = cg.kind == ConvertedGame::Kind::ActionType &&
                        cfg.at_style == AtUpdateStyle::Separate;
  std::vector<SubUpdate> subs;
  for (int i : order) {
    if (separate) {
      subs.push_back({i, SubKind::ActionOnly});
      subs.push_back({i, SubKind::TypeOnly});
    } else {
      subs.push_back({i, SubKind::Pair});
    }
  }
  return subs;
}

// Full-state matrix where one sub-update fires and everyone else stays put.
RealMatrix sub_step_matrix(const ConvertedGame& cg, const SurConfig& cfg,
                           const ProfileSpace& space, const SubUpdate& sub) {
  const std::int64_t kappa = space.total();
  RealMatrix m = RealMatrix::Zero(kappa, kappa);
  for (std::int64_t x = 1; x <= kappa; ++x) {
    const DecodedState d = decode_state(cg, space, static_cast<int>(x));
    const RealVector dist = update_distribution(
        cg, cfg, sub, d, space.card(sub.player), static_cast<int>(x));
    std::vector<int> coords = space.unindex(x);
    for (int v = 1; v <= space.card(sub.player); ++v) {
      if (dist(v - 1) == 0.0) continue;
      coords[static_cast<std::size_t>(sub.player) - 1] = v;
      m(space.index(coords) - 1, x - 1) += dist(v - 1);
    }
  }
  return m;
}

// Synchronous step over a set of sub-updates (one per player): the
// Khatri-Rao product of the per-player column maps.
RealMatrix synchronous_matrix(const ConvertedGame& cg, const SurConfig& cfg,
                              const ProfileSpace& space,
                              const std::vector<SubUpdate>& subs) {
  const std::int64_t kappa = space.total();
  const int n = space.players();
  std::vector<RealMatrix> per_player;
  per_player.reserve(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    const SubUpdate* sub = nullptr;
    for (const auto& s : subs)
      if (s.player == i) sub = &s;
    RealMatrix u(space.card(i), kappa);
    for (std::int64_t x = 1; x <= kappa; ++x) {
      const DecodedState d = decode_state(cg, space, static_cast<int>(x));
      if (sub) {
        u.col(x - 1) = update_distribution(cg, cfg, *sub, d, space.card(i),
                                           static_cast<int>(x));
      } else {
        u.col(x - 1) = RealVector::Zero(space.card(i));
        u(space.unindex(x)[static_cast<std::size_t>(i) - 1] - 1, x - 1) = 1.0;
      }
    }
    per_player.push_back(std::move(u));
  }
  RealMatrix m = per_player[0];
  for (int i = 1; i < n; ++i)
    m = khatri_rao(m, per_player[static_cast<std::size_t>(i)]);
  return m;
}

TransitionSystem build_system(const ConvertedGame& cg, const SurConfig& cfg) {
  const ProfileSpace space = dynamics_state_space(cg);
  const std::vector<SubUpdate> subs = sub_updates(cg, cfg);
  const bool separate = subs.size() > static_cast<std::size_t>(space.players());

  TransitionSystem sys;
  switch (cfg.schedule) {
    case Schedule::Synchronous: {
      if (!separate) {
        sys.steps.emplace_back(synchronous_matrix(cg, cfg, space, subs));
      } else {
        // All players revise actions in one step, types in the next.
        std::vector<SubUpdate> actions, types;
        for (const auto& s : subs)
          (s.kind == SubKind::ActionOnly ? actions : types).push_back(s);
        sys.steps.emplace_back(synchronous_matrix(cg, cfg, space, actions));
        sys.steps.emplace_back(synchronous_matrix(cg, cfg, space, types));
      }
      break;
    }
    case Schedule::AsyncRoundRobin: {
      for (const auto& s : subs)
        sys.steps.emplace_back(sub_step_matrix(cg, cfg, space, s));
      break;
    }
    case Schedule::AsyncUniform: {
      RealMatrix sum = RealMatrix::Zero(space.total(), space.total());
      for (const auto& s : subs) sum += sub_step_matrix(cg, cfg, space, s);
      sum /= static_cast<double>(subs.size());
      sys.steps.emplace_back(sum);
      break;
    }
  }
  return sys;
}

}  // namespace

TransitionSystem mbra_map(const ConvertedGame& cg, const SurConfig& cfg) {
  SurConfig c = cfg;
  c.rule = UpdateRule::Mbra;
  return build_system(cg, c);
}

TransitionSystem logit_matrix(const ConvertedGame& cg, const SurConfig& cfg) {
  SurConfig c = cfg;
  c.rule = UpdateRule::Logit;
  if (c.lambda < 0.0) throw Error("logit_matrix: lambda must be >= 0");
  return build_system(cg, c);
}

RealMatrix player_update_matrix(const ConvertedGame& cg, int player,
                                const SurConfig& cfg) {
  const std::size_t ui = static_cast<std::size_t>(player) - 1;
  if (cg.kind == ConvertedGame::Kind::Selten) {
    const ProfileSpace aspace(cg.action_cards);
    RealMatrix m(aspace.card(player), aspace.total());
    for (std::int64_t a = 1; a <= aspace.total(); ++a) {
      DecodedState d;
      d.actions = aspace.unindex(a);
      m.col(a - 1) =
          update_distribution(cg, cfg, SubUpdate{player, SubKind::Pair}, d,
                              aspace.card(player), static_cast<int>(a));
    }
    return m;
  }
  if (cg.kind != ConvertedGame::Kind::ActionType)
    throw Error("player_update_matrix: Selten or ActionType required");
  if (cfg.at_style != AtUpdateStyle::Concurrent)
    throw Error("player_update_matrix: separate style has no single-map form");
  const ProfileSpace aspace(cg.action_cards);
  const int taui = cg.type_cards[ui];
  const int ri = cg.action_cards[ui];
  RealMatrix m(taui * ri, taui * aspace.total());
  for (int t = 1; t <= taui; ++t)
    for (std::int64_t a = 1; a <= aspace.total(); ++a) {
      DecodedState d;
      d.actions = aspace.unindex(a);
      d.types.assign(cg.type_cards.size(), 1);
      d.types[ui] = t;
      const Eigen::Index col = (t - 1) * aspace.total() + a - 1;
      m.col(col) =
          update_distribution(cg, cfg, SubUpdate{player, SubKind::Pair}, d,
                              taui * ri, static_cast<int>(col + 1));
    }
  return m;
}

int step(int state, const TransitionMatrix& m, std::mt19937_64& rng) {
  if (state < 1 || state > m.dim())
    throw DimensionError("step: state " + std::to_string(state) +
                         " outside 1.." + std::to_string(m.dim()));
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  const double u = unif(rng);
  double acc = 0.0;
  for (Eigen::Index r = 0; r < m.dim(); ++r) {
    acc += m.matrix()(r, state - 1);
    if (u <= acc) return static_cast<int>(r) + 1;
  }
  return static_cast<int>(m.dim());
}

int step(int state, const TransitionMatrix& m, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return step(state, m, rng);
}

std::vector<int> simulate(const TransitionSystem& sys, int initial_state,
                          int steps, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<int> traj;
  traj.reserve(static_cast<std::size_t>(steps) + 1);
  traj.push_back(initial_state);
  int x = initial_state;
  for (int k = 0; k < steps; ++k) {
    const TransitionMatrix& m = sys.steps[static_cast<std::size_t>(k) % sys.steps.size()];
    x = step(x, m, rng);
    traj.push_back(x);
  }
  return traj;
}

std::vector<int> fixed_points(const TransitionMatrix& m) {
  const LogicalMatrix lm = m.logical();
  std::vector<int> fixed;
  for (int s = 1; s <= lm.cols(); ++s)
    if (lm.image(s) == s) fixed.push_back(s);
  return fixed;
}

namespace {

bool strongly_connected(const RealMatrix& m) {
  const Eigen::Index n = m.rows();
  const auto reach = [&](bool forward) {
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    std::deque<Eigen::Index> queue{0};
    seen[0] = true;
    while (!queue.empty()) {
      const Eigen::Index x = queue.front();
      queue.pop_front();
      for (Eigen::Index y = 0; y < n; ++y) {
        const double p = forward ? m(y, x) : m(x, y);
        if (p > 0.0 && !seen[static_cast<std::size_t>(y)]) {
          seen[static_cast<std::size_t>(y)] = true;
          queue.push_back(y);
        }
      }
    }
    return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
  };
  return reach(true) && reach(false);
}

}  // namespace

StationaryResult stationary_distribution(const TransitionMatrix& m, double tol,
                                         std::int64_t max_iterations) {
  StationaryResult res;
  res.irreducible = strongly_connected(m.matrix());
  RealVector mu =
      RealVector::Constant(m.dim(), 1.0 / static_cast<double>(m.dim()));
  for (std::int64_t k = 0; k <= max_iterations; ++k) {
    RealVector next = m.matrix() * mu;
    next /= next.sum();  // guard drift
    res.iterations = k;
    if ((next - mu).lpNorm<1>() < tol) {
      res.converged = true;
      break;
    }
    mu = std::move(next);
  }
  res.distribution = std::move(mu);
  return res;
}

RealVector gibbs_distribution(const RowVector& q, double lambda) {
  for (Eigen::Index i = 0; i < q.size(); ++i)
    if (!std::isfinite(q(i)))
      throw InfinitePayoffError("gibbs_distribution: q must be finite");
  const double vmax = lambda == 0.0 ? 0.0 : (lambda * q).maxCoeff();
  RealVector mu(q.size());
  for (Eigen::Index i = 0; i < q.size(); ++i)
    mu(i) = std::exp(lambda * q(i) - vmax);
  mu /= mu.sum();
  return mu;
}

bool detailed_balance_check(const TransitionMatrix& m, const RealVector& mu,
                            double tol) {
  if (mu.size() != m.dim())
    throw DimensionError("detailed_balance_check: dimension mismatch");
  for (Eigen::Index a = 0; a < m.dim(); ++a)
    for (Eigen::Index b = a + 1; b < m.dim(); ++b)
      if (std::abs(mu(a) * m.matrix()(b, a) - mu(b) * m.matrix()(a, b)) > tol)
        return false;
  return true;
}

RealVector marginal(const RealVector& dist, int player,
                    const ProfileSpace& space) {
  if (dist.size() != space.total())
    throw DimensionError("marginal: distribution length mismatch");
  RealVector out = RealVector::Zero(space.card(player));
  for (std::int64_t x = 1; x <= space.total(); ++x)
    out(space.unindex(x)[static_cast<std::size_t>(player) - 1] - 1) +=
        dist(x - 1);
  return out;
}

}  // namespace stpg
