// Shared generators and independent oracles for the test suites. Oracles
// deliberately avoid the library's solver paths: the potential oracle solves
// the raw entrywise difference constraints, and the equilibrium oracles are
// plain deviation loops over doubles.
#ifndef STPG_TESTS_SUPPORT_HPP
#define STPG_TESTS_SUPPORT_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <optional>
#include <random>
#include <vector>

#include "stpg/bayesian_game.hpp"
#include "stpg/normal_game.hpp"
#include "stpg/stp.hpp"

namespace stpg::testing {

inline std::mt19937_64 make_rng(std::uint64_t seed) {
  return std::mt19937_64(seed);
}

inline RealMatrix random_matrix(std::mt19937_64& rng, Eigen::Index rows,
                                Eigen::Index cols, double lo = -2.0,
                                double hi = 2.0) {
  std::uniform_real_distribution<double> dist(lo, hi);
  RealMatrix m(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r)
    for (Eigen::Index c = 0; c < cols; ++c) m(r, c) = dist(rng);
  return m;
}

inline std::vector<int> random_cards(std::mt19937_64& rng, int max_players,
                                     int max_card) {
  std::uniform_int_distribution<int> np(1, max_players);
  std::uniform_int_distribution<int> nk(1, max_card);
  std::vector<int> cards(static_cast<std::size_t>(np(rng)));
  for (auto& k : cards) k = nk(rng);
  return cards;
}

inline NormalGame random_normal_game(std::mt19937_64& rng, int max_players,
                                     int max_card) {
  const std::vector<int> cards = random_cards(rng, max_players, max_card);
  const ProfileSpace sp{cards};
  std::uniform_real_distribution<double> dist(-3.0, 3.0);
  std::vector<PayoffRow> rows(cards.size(),
                              PayoffRow(static_cast<std::size_t>(sp.total())));
  for (auto& row : rows)
    for (auto& v : row) v = dist(rng);
  return NormalGame(cards, rows);
}

// Exact potential game built from a random potential P and per-player
// opponent-only offsets d_i(s_{-i}).
inline NormalGame random_potential_game(std::mt19937_64& rng, int max_players,
                                        int max_card,
                                        RowVector* potential_out = nullptr) {
  const std::vector<int> cards = random_cards(rng, max_players, max_card);
  const ProfileSpace sp{cards};
  std::uniform_real_distribution<double> dist(-3.0, 3.0);
  RowVector p(sp.total());
  for (Eigen::Index i = 0; i < p.size(); ++i) p(i) = dist(rng);

  std::vector<PayoffRow> rows(cards.size(),
                              PayoffRow(static_cast<std::size_t>(sp.total())));
  for (int i = 1; i <= sp.players(); ++i) {
    const ProfileSpace rest = sp.without(i);
    RealVector d(rest.total());
    for (Eigen::Index k = 0; k < d.size(); ++k) d(k) = dist(rng);
    for (std::int64_t idx = 1; idx <= sp.total(); ++idx) {
      const std::vector<int> profile = sp.unindex(idx);
      std::vector<int> others;
      for (int j = 1; j <= sp.players(); ++j)
        if (j != i) others.push_back(profile[static_cast<std::size_t>(j) - 1]);
      const std::int64_t r = sp.players() == 1 ? 1 : rest.index(others);
      rows[static_cast<std::size_t>(i) - 1][static_cast<std::size_t>(idx) - 1] =
          p(idx - 1) + d(r - 1);
    }
  }
  if (potential_out) *potential_out = p;
  return NormalGame(cards, rows);
}

// Independent pure-Nash oracle: direct deviation loops over raw doubles.
inline std::vector<std::vector<int>> nash_oracle(const NormalGame& g) {
  const ProfileSpace sp = g.space();
  std::vector<std::vector<int>> out;
  for (std::int64_t idx = 1; idx <= sp.total(); ++idx) {
    const std::vector<int> profile = sp.unindex(idx);
    bool ok = true;
    for (int i = 1; i <= g.players() && ok; ++i) {
      const double own = g.payoffs[static_cast<std::size_t>(i) - 1]
                                  [static_cast<std::size_t>(idx) - 1]
                             .value();
      if (std::isinf(own)) {
        ok = false;
        break;
      }
      for (int s = 1; s <= sp.card(i); ++s) {
        std::vector<int> dev = profile;
        dev[static_cast<std::size_t>(i) - 1] = s;
        const std::int64_t di = sp.index(dev);
        if (g.payoffs[static_cast<std::size_t>(i) - 1]
                     [static_cast<std::size_t>(di) - 1]
                .value() > own) {
          ok = false;
          break;
        }
      }
    }
    if (ok) out.push_back(profile);
  }
  return out;
}

// Independent potential-game oracle: least-squares solve of the raw
// difference constraints c_i(x, s_-i) - c_i(y, s_-i) = P(x, s_-i) - P(y, s_-i)
// for P entrywise, then an exhaustive re-check.
inline std::optional<RowVector> potential_oracle(const NormalGame& g,
                                                 double tol = 1e-8) {
  const ProfileSpace sp = g.space();
  std::vector<std::array<std::int64_t, 2>> pairs;
  std::vector<double> rhs;
  for (int i = 1; i <= g.players(); ++i) {
    const ProfileSpace rest = sp.without(i);
    for (std::int64_t r = 1; r <= rest.total(); ++r) {
      const std::vector<int> others = rest.unindex(r);
      for (int x = 1; x <= sp.card(i); ++x)
        for (int y = x + 1; y <= sp.card(i); ++y) {
          const std::int64_t ix = sp.index(sp.insert(others, i, x));
          const std::int64_t iy = sp.index(sp.insert(others, i, y));
          pairs.push_back({ix, iy});
          rhs.push_back(g.payoffs[static_cast<std::size_t>(i) - 1]
                                 [static_cast<std::size_t>(ix) - 1]
                            .value() -
                        g.payoffs[static_cast<std::size_t>(i) - 1]
                                 [static_cast<std::size_t>(iy) - 1]
                            .value());
        }
    }
  }
  RealMatrix a = RealMatrix::Zero(static_cast<Eigen::Index>(pairs.size()),
                                  sp.total());
  RealVector b(static_cast<Eigen::Index>(rhs.size()));
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    a(static_cast<Eigen::Index>(k), pairs[k][0] - 1) = 1.0;
    a(static_cast<Eigen::Index>(k), pairs[k][1] - 1) = -1.0;
    b(static_cast<Eigen::Index>(k)) = rhs[k];
  }
  RealVector p;
  if (a.rows() == 0) {
    p = RealVector::Zero(sp.total());
  } else {
    const Eigen::CompleteOrthogonalDecomposition<RealMatrix> cod(a);
    p = cod.solve(b);
    const double res = (a * p - b).lpNorm<Eigen::Infinity>();
    const double scale =
        std::max(1.0, b.size() == 0 ? 0.0 : b.lpNorm<Eigen::Infinity>());
    if (res > tol * scale) return std::nullopt;
  }
  return RowVector(p.transpose());
}

// Random fully specified Bayesian game; fully_admissible=false sprinkles
// random admissibility restrictions (every set stays nonempty).
inline BayesianGame random_bayesian_game(std::mt19937_64& rng, int max_players,
                                         int max_types, int max_actions,
                                         bool fully_admissible) {
  std::uniform_int_distribution<int> np(1, max_players);
  const int n = np(rng);
  std::uniform_int_distribution<int> nt(1, max_types);
  std::uniform_int_distribution<int> na(1, max_actions);
  std::vector<int> tcards(static_cast<std::size_t>(n)),
      acards(static_cast<std::size_t>(n));
  for (auto& t : tcards) t = nt(rng);
  for (auto& a : acards) a = na(rng);

  std::vector<std::vector<std::vector<int>>> adm(static_cast<std::size_t>(n));
  std::bernoulli_distribution keep(0.75);
  for (int i = 0; i < n; ++i) {
    adm[static_cast<std::size_t>(i)].resize(
        static_cast<std::size_t>(tcards[static_cast<std::size_t>(i)]));
    for (auto& set : adm[static_cast<std::size_t>(i)]) {
      for (int a = 1; a <= acards[static_cast<std::size_t>(i)]; ++a)
        if (fully_admissible || keep(rng)) set.push_back(a);
      if (set.empty()) set.push_back(1);
    }
  }

  const ProfileSpace tspace{tcards}, aspace{acards};
  std::uniform_real_distribution<double> prob(0.05, 1.0);
  RealVector prior(tspace.total());
  for (Eigen::Index k = 0; k < prior.size(); ++k) prior(k) = prob(rng);
  prior /= prior.sum();

  std::uniform_real_distribution<double> val(-3.0, 3.0);
  std::vector<std::vector<std::optional<double>>> tables(
      static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    tables[static_cast<std::size_t>(i)].assign(
        static_cast<std::size_t>(tspace.total() * aspace.total()),
        std::nullopt);
  for (std::int64_t t = 1; t <= tspace.total(); ++t) {
    const std::vector<int> tp = tspace.unindex(t);
    for (std::int64_t a = 1; a <= aspace.total(); ++a) {
      const std::vector<int> ap = aspace.unindex(a);
      bool ok = true;
      for (int i = 1; i <= n && ok; ++i) {
        const auto& set = adm[static_cast<std::size_t>(i) - 1]
                             [static_cast<std::size_t>(
                                  tp[static_cast<std::size_t>(i) - 1]) -
                              1];
        ok = std::find(set.begin(), set.end(),
                       ap[static_cast<std::size_t>(i) - 1]) != set.end();
      }
      if (!ok) continue;
      const std::size_t cell =
          static_cast<std::size_t>((t - 1) * aspace.total() + a) - 1;
      for (int i = 0; i < n; ++i)
        tables[static_cast<std::size_t>(i)][cell] = val(rng);
    }
  }
  return assemble(tcards, acards, adm, tables, prior);
}

// Selten-potential Bayesian game: c_i(a, t) = P(a) + d_i(a_{-i}, t), so the
// conversion at any type profile is an exact potential game with potential P.
inline BayesianGame random_selten_potential_game(std::mt19937_64& rng,
                                                 RowVector* p_out = nullptr) {
  std::uniform_int_distribution<int> nk(2, 3);
  const std::vector<int> acards{nk(rng), nk(rng)};
  const std::vector<int> tcards{2, 2};
  const ProfileSpace aspace{acards}, tspace{tcards};
  std::uniform_real_distribution<double> dist(-2.0, 2.0);
  RowVector p(aspace.total());
  for (Eigen::Index k = 0; k < p.size(); ++k) p(k) = dist(rng);

  std::vector<std::vector<std::optional<double>>> tables(
      2, std::vector<std::optional<double>>(
             static_cast<std::size_t>(tspace.total() * aspace.total())));
  for (int i = 1; i <= 2; ++i) {
    const int o = 3 - i;
    for (std::int64_t t = 1; t <= tspace.total(); ++t) {
      RealVector d(acards[static_cast<std::size_t>(o) - 1]);
      for (Eigen::Index k = 0; k < d.size(); ++k) d(k) = dist(rng);
      for (std::int64_t a = 1; a <= aspace.total(); ++a) {
        const std::vector<int> ap = aspace.unindex(a);
        tables[static_cast<std::size_t>(i) - 1]
              [static_cast<std::size_t>((t - 1) * aspace.total() + a) - 1] =
                  p(a - 1) + d(ap[static_cast<std::size_t>(o) - 1] - 1);
      }
    }
  }
  RealVector prior = RealVector::Constant(
      tspace.total(), 1.0 / static_cast<double>(tspace.total()));
  std::vector<std::vector<std::vector<int>>> adm(2);
  for (int i = 0; i < 2; ++i) {
    std::vector<int> all;
    for (int a = 1; a <= acards[static_cast<std::size_t>(i)]; ++a)
      all.push_back(a);
    adm[static_cast<std::size_t>(i)] = {all, all};
  }
  if (p_out) *p_out = p;
  return assemble(tcards, acards, adm, tables, prior);
}

// Interim equilibrium oracle: enumerate type strategies and run raw
// deviation loops on interim expectations.
inline std::vector<std::vector<std::vector<int>>> interim_oracle(
    const BayesianGame& g) {
  const int n = g.players();
  const ProfileSpace tspace = g.type_space();
  const ProfileSpace aspace = g.action_space();

  const auto interim = [&](const std::vector<std::vector<int>>& sigma, int i,
                           int j, int ai) {
    // sum over opponents' types of prior(t) * payoff / marginal
    const ProfileSpace rest = tspace.without(i);
    double pj = 0.0, total = 0.0;
    bool feasible = true;
    for (std::int64_t r = 1; r <= rest.total(); ++r) {
      const std::vector<int> tp = tspace.insert(rest.unindex(r), i, j);
      const double w = g.prior(tspace.index(tp) - 1);
      pj += w;
      if (w == 0.0) continue;
      std::vector<int> ap(static_cast<std::size_t>(n));
      for (int k = 1; k <= n; ++k)
        ap[static_cast<std::size_t>(k) - 1] =
            k == i ? ai
                   : sigma[static_cast<std::size_t>(k) - 1]
                          [static_cast<std::size_t>(
                               tp[static_cast<std::size_t>(k) - 1]) -
                           1];
      const ExtReal c =
          g.payoffs[static_cast<std::size_t>(i) - 1]
                   [static_cast<std::size_t>(
                        g.cell(tspace.index(tp), aspace.index(ap))) -
                    1];
      if (c.is_neg_inf()) {
        feasible = false;
        break;
      }
      total += w * c.value();
    }
    return feasible ? total / pj
                    : -std::numeric_limits<double>::infinity();
  };

  std::vector<std::vector<std::vector<int>>> result;
  std::vector<std::pair<int, int>> slots;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= tspace.card(i); ++j) slots.emplace_back(i, j);
  std::vector<std::size_t> choice(slots.size(), 0);
  while (true) {
    std::vector<std::vector<int>> sigma(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i)
      sigma[static_cast<std::size_t>(i) - 1].assign(
          static_cast<std::size_t>(tspace.card(i)), 0);
    for (std::size_t s = 0; s < slots.size(); ++s)
      sigma[static_cast<std::size_t>(slots[s].first) - 1]
           [static_cast<std::size_t>(slots[s].second) - 1] =
          g.admissible[static_cast<std::size_t>(slots[s].first) - 1]
                      [static_cast<std::size_t>(slots[s].second) - 1]
                      [choice[s]];

    bool eq = true;
    for (int i = 1; i <= n && eq; ++i)
      for (int j = 1; j <= tspace.card(i) && eq; ++j) {
        const double own = interim(
            sigma, i, j,
            sigma[static_cast<std::size_t>(i) - 1][static_cast<std::size_t>(j) - 1]);
        for (int a : g.admissible[static_cast<std::size_t>(i) - 1]
                                 [static_cast<std::size_t>(j) - 1])
          if (interim(sigma, i, j, a) > own + 1e-12) {
            eq = false;
            break;
          }
      }
    if (eq) result.push_back(sigma);

    std::size_t s = 0;
    for (; s < slots.size(); ++s) {
      const std::size_t limit =
          g.admissible[static_cast<std::size_t>(slots[s].first) - 1]
                      [static_cast<std::size_t>(slots[s].second) - 1]
                          .size();
      if (++choice[s] < limit) break;
      choice[s] = 0;
    }
    if (s == slots.size()) break;
  }
  return result;
}

inline double max_abs(const RealMatrix& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

// True iff f() throws E whose message contains `needle`.
template <class E, class F>
bool throws_with(F&& f, const char* needle) {
  try {
    f();
  } catch (const E& e) {
    return std::string(e.what()).find(needle) != std::string::npos;
  } catch (...) {
    return false;
  }
  return false;
}

}  // namespace stpg::testing

#endif  // STPG_TESTS_SUPPORT_HPP
