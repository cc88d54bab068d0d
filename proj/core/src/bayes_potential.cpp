#include "stpg/bayes_potential.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace stpg {

namespace {

constexpr double kNan = std::numeric_limits<double>::quiet_NaN();

double solve_tolerance(const RealVector& b) {
  return 1e-8 * std::max(1.0, b.size() == 0 ? 0.0 : b.lpNorm<Eigen::Infinity>());
}

// Per-coordinate projections of a finite region inside a product lattice.
// Returns false when the region is empty or not a full product box.
bool box_of_region(const ProfileSpace& lattice,
                   const std::vector<bool>& finite_cell,
                   std::vector<std::vector<int>>* kept) {
  const int m = lattice.players();
  kept->assign(static_cast<std::size_t>(m), {});
  std::vector<std::vector<bool>> seen(static_cast<std::size_t>(m));
  for (int c = 1; c <= m; ++c)
    seen[static_cast<std::size_t>(c) - 1].assign(
        static_cast<std::size_t>(lattice.card(c)), false);
  bool any = false;
  for (std::int64_t idx = 1; idx <= lattice.total(); ++idx) {
    if (!finite_cell[static_cast<std::size_t>(idx) - 1]) continue;
    any = true;
    const std::vector<int> p = lattice.unindex(idx);
    for (int c = 1; c <= m; ++c)
      seen[static_cast<std::size_t>(c) - 1]
          [static_cast<std::size_t>(p[static_cast<std::size_t>(c) - 1]) - 1] =
          true;
  }
  if (!any) return false;
  for (int c = 1; c <= m; ++c)
    for (int v = 1; v <= lattice.card(c); ++v)
      if (seen[static_cast<std::size_t>(c) - 1][static_cast<std::size_t>(v) - 1])
        kept->at(static_cast<std::size_t>(c) - 1).push_back(v);
  // The region is a box iff every cell of the candidate box is finite.
  std::int64_t box_cells = 1;
  for (const auto& k : *kept) box_cells *= static_cast<std::int64_t>(k.size());
  std::int64_t count = 0;
  for (std::int64_t idx = 1; idx <= lattice.total(); ++idx)
    if (finite_cell[static_cast<std::size_t>(idx) - 1]) ++count;
  return count == box_cells;
}

// Restriction of a padded normal game to the common finite box.
struct BoxedGame {
  NormalGame game;                        // finite payoffs, reduced cards
  std::vector<std::vector<int>> kept;     // kept strategy values per player
};

bool restrict_to_box(const NormalGame& g, BoxedGame* out) {
  const ProfileSpace sp = g.space();
  std::vector<bool> finite_cell(static_cast<std::size_t>(sp.total()), true);
  for (const auto& row : g.payoffs)
    for (std::size_t c = 0; c < row.size(); ++c)
      if (row[c].is_neg_inf()) finite_cell[c] = false;
  if (!box_of_region(sp, finite_cell, &out->kept)) return false;

  std::vector<int> cards;
  cards.reserve(out->kept.size());
  for (const auto& k : out->kept) cards.push_back(static_cast<int>(k.size()));
  const ProfileSpace sub(cards);
  std::vector<PayoffRow> rows(g.payoffs.size(),
                              PayoffRow(static_cast<std::size_t>(sub.total())));
  for (std::int64_t s = 1; s <= sub.total(); ++s) {
    std::vector<int> reduced = sub.unindex(s);
    std::vector<int> full(reduced.size());
    for (std::size_t c = 0; c < reduced.size(); ++c)
      full[c] = out->kept[c][static_cast<std::size_t>(reduced[c]) - 1];
    const std::int64_t idx = sp.index(full);
    for (std::size_t i = 0; i < g.payoffs.size(); ++i)
      rows[i][static_cast<std::size_t>(s) - 1] =
          g.payoffs[i][static_cast<std::size_t>(idx) - 1];
  }
  out->game = NormalGame(cards, std::move(rows));
  return true;
}

// Spreads a potential over the reduced box back onto the full lattice.
RowVector expand_to_lattice(const RowVector& reduced_pot,
                            const std::vector<std::vector<int>>& kept,
                            const ProfileSpace& full) {
  RowVector out = RowVector::Constant(full.total(), kNan);
  std::vector<int> cards;
  cards.reserve(kept.size());
  for (const auto& k : kept) cards.push_back(static_cast<int>(k.size()));
  const ProfileSpace sub(cards);
  for (std::int64_t s = 1; s <= sub.total(); ++s) {
    std::vector<int> reduced = sub.unindex(s);
    std::vector<int> fullp(reduced.size());
    for (std::size_t c = 0; c < reduced.size(); ++c)
      fullp[c] = kept[c][static_cast<std::size_t>(reduced[c]) - 1];
    out(full.index(fullp) - 1) = reduced_pot(s - 1);
  }
  return out;
}

BayesPotentialReport converted_box_potential(const NormalGame& converted,
                                             BayesPotentialNotion notion) {
  BayesPotentialReport rep;
  rep.notion = notion;
  BoxedGame boxed;
  if (!restrict_to_box(converted, &boxed)) {
    rep.applicable = false;
    return rep;
  }
  const PotentialResult res = solve_potential(boxed.game);
  rep.is_potential = res.is_potential;
  rep.residual = res.residual;
  if (res.is_potential)
    rep.potential =
        expand_to_lattice(res.potential, boxed.kept, converted.space());
  return rep;
}

std::int64_t pair_cell(int type_index, std::int64_t a_idx,
                       std::int64_t a_total) {
  return (type_index - 1) * a_total + a_idx;
}

}  // namespace

BayesPotentialReport tn_potential(const BayesianGame& g) {
  BayesPotentialReport rep;
  rep.notion = BayesPotentialNotion::TN;
  const ProfileSpace tspace = g.type_space();
  const ProfileSpace aspace = g.action_space();
  RowVector pot = RowVector::Constant(tspace.total() * aspace.total(), kNan);

  for (std::int64_t t = 1; t <= tspace.total(); ++t) {
    const std::vector<int> tp = tspace.unindex(t);
    std::vector<std::vector<int>> sets(static_cast<std::size_t>(g.players()));
    std::vector<int> cards(static_cast<std::size_t>(g.players()));
    for (int i = 1; i <= g.players(); ++i) {
      sets[static_cast<std::size_t>(i) - 1] =
          g.admissible[static_cast<std::size_t>(i) - 1]
                      [static_cast<std::size_t>(
                           tp[static_cast<std::size_t>(i) - 1]) -
                       1];
      cards[static_cast<std::size_t>(i) - 1] =
          static_cast<int>(sets[static_cast<std::size_t>(i) - 1].size());
    }
    const ProfileSpace sub(cards);
    std::vector<PayoffRow> rows(static_cast<std::size_t>(g.players()),
                                PayoffRow(static_cast<std::size_t>(sub.total())));
    for (std::int64_t s = 1; s <= sub.total(); ++s) {
      std::vector<int> reduced = sub.unindex(s);
      std::vector<int> ap(reduced.size());
      for (std::size_t c = 0; c < reduced.size(); ++c)
        ap[c] = sets[c][static_cast<std::size_t>(reduced[c]) - 1];
      const std::int64_t cell = g.cell(t, aspace.index(ap));
      for (int i = 1; i <= g.players(); ++i)
        rows[static_cast<std::size_t>(i) - 1][static_cast<std::size_t>(s) - 1] =
            g.payoffs[static_cast<std::size_t>(i) - 1]
                     [static_cast<std::size_t>(cell) - 1];
    }
    const PotentialResult res = solve_potential(NormalGame(cards, rows));
    rep.residual = std::max(rep.residual, res.residual);
    if (!res.is_potential) {
      rep.is_potential = false;
      return rep;
    }
    for (std::int64_t s = 1; s <= sub.total(); ++s) {
      std::vector<int> reduced = sub.unindex(s);
      std::vector<int> ap(reduced.size());
      for (std::size_t c = 0; c < reduced.size(); ++c)
        ap[c] = sets[c][static_cast<std::size_t>(reduced[c]) - 1];
      pot(g.cell(t, aspace.index(ap)) - 1) = res.potential(s - 1);
    }
  }
  rep.is_potential = true;
  rep.potential = std::move(pot);
  return rep;
}

BayesPotentialReport th_potential(const BayesianGame& g) {
  const ProfileSpace tspace = g.type_space();
  const ProfileSpace aspace = g.action_space();
  for (const auto& row : g.payoffs)
    for (ExtReal v : row)
      if (v.is_neg_inf())
        throw InfinitePayoffError(
            "th_potential: requires a fully admissible game");

  // Agent form: player i's strategy is the pair (t_i, a_i), t_i-major.
  const int n = g.players();
  std::vector<int> cards(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i)
    cards[static_cast<std::size_t>(i) - 1] =
        tspace.card(i) * aspace.card(i);
  const ProfileSpace joint(cards);
  std::vector<PayoffRow> rows(static_cast<std::size_t>(n),
                              PayoffRow(static_cast<std::size_t>(joint.total())));
  std::vector<std::int64_t> joint_of_cell(
      static_cast<std::size_t>(tspace.total() * aspace.total()));
  for (std::int64_t s = 1; s <= joint.total(); ++s) {
    const std::vector<int> pairs = joint.unindex(s);
    std::vector<int> tp(static_cast<std::size_t>(n)),
        ap(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) {
      const int ri = aspace.card(i);
      const int pair = pairs[static_cast<std::size_t>(i) - 1];
      tp[static_cast<std::size_t>(i) - 1] = (pair - 1) / ri + 1;
      ap[static_cast<std::size_t>(i) - 1] = (pair - 1) % ri + 1;
    }
    const std::int64_t cell = g.cell(tspace.index(tp), aspace.index(ap));
    joint_of_cell[static_cast<std::size_t>(cell) - 1] = s;
    for (int i = 1; i <= n; ++i)
      rows[static_cast<std::size_t>(i) - 1][static_cast<std::size_t>(s) - 1] =
          g.payoffs[static_cast<std::size_t>(i) - 1]
                   [static_cast<std::size_t>(cell) - 1];
  }
  const PotentialResult res = solve_potential(NormalGame(cards, rows));

  BayesPotentialReport rep;
  rep.notion = BayesPotentialNotion::TH;
  rep.is_potential = res.is_potential;
  rep.residual = res.residual;
  if (res.is_potential) {
    rep.potential.resize(tspace.total() * aspace.total());
    for (Eigen::Index cell = 0; cell < rep.potential.size(); ++cell)
      rep.potential(cell) =
          res.potential(joint_of_cell[static_cast<std::size_t>(cell)] - 1);
  }
  return rep;
}

BayesPotentialReport harsanyi_potential(const BayesianGame& g) {
  return converted_box_potential(harsanyi_convert(g).game,
                                 BayesPotentialNotion::Harsanyi);
}

BayesPotentialReport selten_potential(const BayesianGame& g,
                                      const std::vector<int>& type_profile) {
  return converted_box_potential(selten_convert(g, type_profile).game,
                                 BayesPotentialNotion::Selten);
}

namespace {

// The AT system over given type/action cardinalities from finite lifted rows.
AtPotentialSystem build_at_system(const std::vector<int>& tcards,
                                  const std::vector<int>& acards,
                                  const std::vector<RowVector>& lifted) {
  const int n = static_cast<int>(tcards.size());
  AtPotentialSystem sys;
  sys.deletion_ops.reserve(static_cast<std::size_t>(n));
  Eigen::Index cols = 0;
  for (int i = 1; i <= n; ++i) {
    std::int64_t theta = 1, vartheta = 1, rho = 1;
    for (int j = 1; j < i; ++j) theta *= tcards[static_cast<std::size_t>(j) - 1];
    for (int j = i + 1; j <= n; ++j)
      vartheta *= tcards[static_cast<std::size_t>(j) - 1];
    for (int l = 1; l < i; ++l)
      vartheta *= acards[static_cast<std::size_t>(l) - 1];
    for (int l = i + 1; l <= n; ++l)
      rho *= acards[static_cast<std::size_t>(l) - 1];
    RealMatrix op = RealMatrix::Identity(theta, theta);
    op = kron(op, RealMatrix::Ones(1, tcards[static_cast<std::size_t>(i) - 1]));
    op = kron(op, RealMatrix::Identity(vartheta, vartheta));
    op = kron(op, RealMatrix::Ones(1, acards[static_cast<std::size_t>(i) - 1]));
    op = kron(op, RealMatrix::Identity(rho, rho));
    sys.xi_offsets.push_back(cols);
    cols += op.rows();
    sys.deletion_ops.push_back(std::move(op));
  }

  const Eigen::Index lattice = sys.deletion_ops[0].cols();
  sys.psi = RealMatrix::Zero(static_cast<Eigen::Index>(n - 1) * lattice, cols);
  sys.b = RealVector::Zero(static_cast<Eigen::Index>(n - 1) * lattice);
  for (int i = 2; i <= n; ++i) {
    const Eigen::Index r0 = static_cast<Eigen::Index>(i - 2) * lattice;
    sys.psi.block(r0, sys.xi_offsets[0], lattice,
                  sys.deletion_ops[0].rows()) =
        -sys.deletion_ops[0].transpose();
    sys.psi.block(r0, sys.xi_offsets[static_cast<std::size_t>(i) - 1], lattice,
                  sys.deletion_ops[static_cast<std::size_t>(i) - 1].rows()) =
        sys.deletion_ops[static_cast<std::size_t>(i) - 1].transpose();
    sys.b.segment(r0, lattice) =
        (lifted[static_cast<std::size_t>(i) - 1] - lifted[0]).transpose();
  }
  return sys;
}

RowVector lift_finite(const std::vector<int>& tcards,
                      const std::vector<int>& acards, int player,
                      const RowVector& compact) {
  const ProfileSpace tspace(tcards);
  const ProfileSpace aspace(acards);
  RowVector out(tspace.total() * aspace.total());
  for (std::int64_t t = 1; t <= tspace.total(); ++t) {
    const int ti = tspace.unindex(t)[static_cast<std::size_t>(player) - 1];
    for (std::int64_t a = 1; a <= aspace.total(); ++a)
      out((t - 1) * aspace.total() + a - 1) =
          compact(pair_cell(ti, a, aspace.total()) - 1);
  }
  return out;
}

}  // namespace

AtPotentialSystem build_at_potential_system(const ConvertedGame& cg) {
  if (cg.kind != ConvertedGame::Kind::ActionType)
    throw Error("build_at_potential_system: not an ActionType conversion");
  const int n = static_cast<int>(cg.type_cards.size());
  std::vector<RowVector> lifted;
  lifted.reserve(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    const PayoffRow& row = cg.at_rows[static_cast<std::size_t>(i) - 1];
    RowVector compact(static_cast<Eigen::Index>(row.size()));
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (row[c].is_neg_inf())
        throw InfinitePayoffError(
            "build_at_potential_system: rows must be finite");
      compact(static_cast<Eigen::Index>(c)) = row[c].value();
    }
    lifted.push_back(lift_finite(cg.type_cards, cg.action_cards, i, compact));
  }
  return build_at_system(cg.type_cards, cg.action_cards, lifted);
}

BayesPotentialReport at_potential(const BayesianGame& g) {
  const ConvertedGame cg = at_convert(g);
  const int n = g.players();
  const ProfileSpace tspace = g.type_space();
  const ProfileSpace aspace = g.action_space();

  BayesPotentialReport rep;
  rep.notion = BayesPotentialNotion::ActionType;

  // Finite region over the (t_1..t_n, a_1..a_n) lattice.
  std::vector<int> lattice_cards = g.type_cards;
  lattice_cards.insert(lattice_cards.end(), g.action_cards.begin(),
                       g.action_cards.end());
  const ProfileSpace lattice(lattice_cards);
  std::vector<bool> finite_cell(static_cast<std::size_t>(lattice.total()), true);
  for (std::int64_t idx = 1; idx <= lattice.total(); ++idx) {
    const std::vector<int> coords = lattice.unindex(idx);
    const std::vector<int> tp(coords.begin(), coords.begin() + n);
    const std::vector<int> ap(coords.begin() + n, coords.end());
    for (int i = 1; i <= n && finite_cell[static_cast<std::size_t>(idx) - 1];
         ++i)
      if (cg.at_payoff(i, tp[static_cast<std::size_t>(i) - 1], ap).is_neg_inf())
        finite_cell[static_cast<std::size_t>(idx) - 1] = false;
  }
  std::vector<std::vector<int>> kept;
  if (!box_of_region(lattice, finite_cell, &kept)) {
    rep.applicable = false;
    return rep;
  }

  std::vector<int> tcards(static_cast<std::size_t>(n)),
      acards(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    tcards[static_cast<std::size_t>(i)] =
        static_cast<int>(kept[static_cast<std::size_t>(i)].size());
    acards[static_cast<std::size_t>(i)] =
        static_cast<int>(kept[static_cast<std::size_t>(i + n)].size());
  }
  const ProfileSpace sub_t(tcards), sub_a(acards);

  // Restricted compact rows and their lifts.
  std::vector<RowVector> lifted;
  lifted.reserve(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    RowVector compact(sub_t.card(i) * sub_a.total());
    for (int jt = 1; jt <= sub_t.card(i); ++jt) {
      const int ti = kept[static_cast<std::size_t>(i) - 1]
                         [static_cast<std::size_t>(jt) - 1];
      for (std::int64_t a = 1; a <= sub_a.total(); ++a) {
        std::vector<int> reduced = sub_a.unindex(a);
        std::vector<int> ap(reduced.size());
        for (std::size_t c = 0; c < reduced.size(); ++c)
          ap[c] = kept[static_cast<std::size_t>(n) + c]
                      [static_cast<std::size_t>(reduced[c]) - 1];
        compact(pair_cell(jt, a, sub_a.total()) - 1) =
            cg.at_payoff(i, ti, ap).value();
      }
    }
    lifted.push_back(lift_finite(tcards, acards, i, compact));
  }

  if (n == 1) {
    rep.is_potential = true;
    rep.residual = 0.0;
    rep.potential = RowVector::Constant(tspace.total() * aspace.total(), kNan);
    // Single player: Q^{AT} is the payoff itself on the kept box.
    for (int jt = 1; jt <= sub_t.card(1); ++jt)
      for (std::int64_t a = 1; a <= sub_a.total(); ++a) {
        const std::int64_t t_full = kept[0][static_cast<std::size_t>(jt) - 1];
        const std::int64_t a_full =
            kept[1][static_cast<std::size_t>(sub_a.unindex(a)[0]) - 1];
        rep.potential(g.cell(t_full, a_full) - 1) =
            lifted[0]((jt - 1) * sub_a.total() + a - 1);
      }
    return rep;
  }

  AtPotentialSystem sys = build_at_system(tcards, acards, lifted);
  const Eigen::CompleteOrthogonalDecomposition<RealMatrix> cod(sys.psi);
  const RealVector xi = cod.solve(sys.b);
  rep.residual = (sys.psi * xi - sys.b).lpNorm<Eigen::Infinity>();
  rep.is_potential = rep.residual <= solve_tolerance(sys.b);
  if (!rep.is_potential) return rep;

  const Eigen::Index d1 = sys.deletion_ops[0].rows();
  const RowVector q_sub =
      lifted[0] - xi.segment(0, d1).transpose() * sys.deletion_ops[0];

  // Back onto the full (t, a) cells, NaN outside the kept box.
  rep.potential = RowVector::Constant(tspace.total() * aspace.total(), kNan);
  const ProfileSpace sub_lattice([&] {
    std::vector<int> cards = tcards;
    cards.insert(cards.end(), acards.begin(), acards.end());
    return cards;
  }());
  for (std::int64_t s = 1; s <= sub_lattice.total(); ++s) {
    const std::vector<int> coords = sub_lattice.unindex(s);
    std::vector<int> tp(static_cast<std::size_t>(n)),
        ap(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
      const std::size_t ui = static_cast<std::size_t>(i);
      tp[ui] = kept[ui][static_cast<std::size_t>(coords[ui]) - 1];
      ap[ui] = kept[ui + static_cast<std::size_t>(n)]
                   [static_cast<std::size_t>(coords[ui + static_cast<std::size_t>(n)]) - 1];
    }
    rep.potential(g.cell(tspace.index(tp), aspace.index(ap)) - 1) = q_sub(s - 1);
  }
  return rep;
}

namespace {

bool close(double a, double b, double tol) { return std::abs(a - b) <= tol; }

bool verify_tn(const BayesianGame& g, const RowVector& q, double tol) {
  const ProfileSpace tspace = g.type_space();
  const ProfileSpace aspace = g.action_space();
  for (std::int64_t t = 1; t <= tspace.total(); ++t) {
    const std::vector<int> tp = tspace.unindex(t);
    for (int i = 1; i <= g.players(); ++i) {
      const auto& own = g.admissible[static_cast<std::size_t>(i) - 1]
                                    [static_cast<std::size_t>(
                                         tp[static_cast<std::size_t>(i) - 1]) -
                                     1];
      const ProfileSpace rest = aspace.without(i);
      for (std::int64_t r = 1; r <= rest.total(); ++r) {
        const std::vector<int> others = rest.unindex(r);
        // Opponents must be admissible under tp as well.
        std::vector<int> probe = aspace.insert(others, i, own[0]);
        if (!g.profile_admissible(tp, probe)) continue;
        for (std::size_t x = 0; x < own.size(); ++x)
          for (std::size_t y = x + 1; y < own.size(); ++y) {
            const std::int64_t ax =
                aspace.index(aspace.insert(others, i, own[x]));
            const std::int64_t ay =
                aspace.index(aspace.insert(others, i, own[y]));
            const double cx = g.payoffs[static_cast<std::size_t>(i) - 1]
                                       [static_cast<std::size_t>(
                                            g.cell(t, ax)) -
                                        1]
                                  .value();
            const double cy = g.payoffs[static_cast<std::size_t>(i) - 1]
                                       [static_cast<std::size_t>(
                                            g.cell(t, ay)) -
                                        1]
                                  .value();
            const double qx = q(g.cell(t, ax) - 1);
            const double qy = q(g.cell(t, ay) - 1);
            if (std::isnan(qx) || std::isnan(qy)) return false;
            if (!close(cx - cy, qx - qy, tol)) return false;
          }
      }
    }
  }
  return true;
}

bool verify_th(const BayesianGame& g, const RowVector& q, double tol) {
  const ProfileSpace tspace = g.type_space();
  const ProfileSpace aspace = g.action_space();
  for (const auto& row : g.payoffs)
    for (ExtReal v : row)
      if (v.is_neg_inf())
        throw InfinitePayoffError(
            "verify_bayes_potential(TH): requires a fully admissible game");
  const int n = g.players();
  for (int i = 1; i <= n; ++i) {
    const ProfileSpace trest = tspace.without(i);
    const ProfileSpace arest = aspace.without(i);
    for (std::int64_t tr = 1; tr <= trest.total(); ++tr)
      for (std::int64_t ar = 1; ar <= arest.total(); ++ar) {
        const std::vector<int> tothers = trest.unindex(tr);
        const std::vector<int> aothers = arest.unindex(ar);
        const int pairs = tspace.card(i) * aspace.card(i);
        for (int p = 0; p < pairs; ++p)
          for (int p2 = p + 1; p2 < pairs; ++p2) {
            const auto cell_of = [&](int pair) {
              const int ti = pair / aspace.card(i) + 1;
              const int ai = pair % aspace.card(i) + 1;
              const std::int64_t t = tspace.index(tspace.insert(tothers, i, ti));
              const std::int64_t a = aspace.index(aspace.insert(aothers, i, ai));
              return g.cell(t, a);
            };
            const std::int64_t c1 = cell_of(p);
            const std::int64_t c2 = cell_of(p2);
            const double lhs =
                g.payoffs[static_cast<std::size_t>(i) - 1]
                         [static_cast<std::size_t>(c1) - 1]
                    .value() -
                g.payoffs[static_cast<std::size_t>(i) - 1]
                         [static_cast<std::size_t>(c2) - 1]
                    .value();
            const double qv1 = q(c1 - 1);
            const double qv2 = q(c2 - 1);
            if (std::isnan(qv1) || std::isnan(qv2)) return false;
            if (!close(lhs, qv1 - qv2, tol)) return false;
          }
      }
  }
  return true;
}

bool verify_converted(const NormalGame& converted, const RowVector& q,
                      double tol) {
  const ProfileSpace sp = converted.space();
  if (q.size() != sp.total()) throw DimensionError("verify: q length mismatch");
  for (int i = 1; i <= converted.players(); ++i) {
    const ProfileSpace rest = sp.without(i);
    for (std::int64_t r = 1; r <= rest.total(); ++r) {
      const std::vector<int> others = rest.unindex(r);
      for (int x = 1; x <= sp.card(i); ++x)
        for (int y = x + 1; y <= sp.card(i); ++y) {
          const std::int64_t ix = sp.index(sp.insert(others, i, x));
          const std::int64_t iy = sp.index(sp.insert(others, i, y));
          const ExtReal cx = converted.payoffs[static_cast<std::size_t>(i) - 1]
                                              [static_cast<std::size_t>(ix) - 1];
          const ExtReal cy = converted.payoffs[static_cast<std::size_t>(i) - 1]
                                              [static_cast<std::size_t>(iy) - 1];
          if (cx.is_neg_inf() || cy.is_neg_inf()) continue;  // outside support
          const double qx = q(ix - 1);
          const double qy = q(iy - 1);
          if (std::isnan(qx) || std::isnan(qy)) continue;
          if (!close(cx.value() - cy.value(), qx - qy, tol)) return false;
        }
    }
  }
  return true;
}

bool verify_at(const BayesianGame& g, const RowVector& q, double tol) {
  const ConvertedGame cg = at_convert(g);
  const ProfileSpace tspace = g.type_space();
  const ProfileSpace aspace = g.action_space();
  const int n = g.players();
  if (q.size() != tspace.total() * aspace.total())
    throw DimensionError("verify(AT): q length mismatch");
  for (int i = 1; i <= n; ++i) {
    const ProfileSpace trest = tspace.without(i);
    const ProfileSpace arest = aspace.without(i);
    for (std::int64_t ar = 1; ar <= arest.total(); ++ar) {
      const std::vector<int> aothers = arest.unindex(ar);
      const int pairs = tspace.card(i) * aspace.card(i);
      for (int p = 0; p < pairs; ++p)
        for (int p2 = p + 1; p2 < pairs; ++p2) {
          const int t1 = p / aspace.card(i) + 1, a1 = p % aspace.card(i) + 1;
          const int t2 = p2 / aspace.card(i) + 1, a2 = p2 % aspace.card(i) + 1;
          const std::vector<int> ap1 = aspace.insert(aothers, i, a1);
          const std::vector<int> ap2 = aspace.insert(aothers, i, a2);
          const ExtReal c1 = cg.at_payoff(i, t1, ap1);
          const ExtReal c2 = cg.at_payoff(i, t2, ap2);
          if (c1.is_neg_inf() || c2.is_neg_inf()) continue;
          // The potential side carries the opponents' types as well.
          for (std::int64_t tr = 1; tr <= trest.total(); ++tr) {
            const std::vector<int> tothers = trest.unindex(tr);
            const std::int64_t ti1 = tspace.index(tspace.insert(tothers, i, t1));
            const std::int64_t ti2 = tspace.index(tspace.insert(tothers, i, t2));
            const double q1 = q(g.cell(ti1, aspace.index(ap1)) - 1);
            const double q2 = q(g.cell(ti2, aspace.index(ap2)) - 1);
            if (std::isnan(q1) || std::isnan(q2)) continue;
            if (!close(c1.value() - c2.value(), q1 - q2, tol)) return false;
          }
        }
    }
  }
  return true;
}

}  // namespace

bool verify_bayes_potential(const BayesianGame& g, BayesPotentialNotion notion,
                            const RowVector& q_vec,
                            const std::vector<int>& type_profile, double tol) {
  switch (notion) {
    case BayesPotentialNotion::TN:
      return verify_tn(g, q_vec, tol);
    case BayesPotentialNotion::TH:
      return verify_th(g, q_vec, tol);
    case BayesPotentialNotion::Harsanyi:
      return verify_converted(harsanyi_convert(g).game, q_vec, tol);
    case BayesPotentialNotion::Selten:
      return verify_converted(selten_convert(g, type_profile).game, q_vec, tol);
    case BayesPotentialNotion::ActionType:
      return verify_at(g, q_vec, tol);
  }
  throw Error("verify_bayes_potential: unknown notion");
}

}  // namespace stpg
