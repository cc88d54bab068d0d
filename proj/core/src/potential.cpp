#include "stpg/potential.hpp"

#include <algorithm>
#include <string>

namespace stpg {

namespace {

RowVector finite_row(const PayoffRow& row, const char* who) {
  RowVector out(static_cast<Eigen::Index>(row.size()));
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (row[i].is_neg_inf())
      throw InfinitePayoffError(std::string(who) + ": payoffs must be finite");
    out(static_cast<Eigen::Index>(i)) = row[i].value();
  }
  return out;
}

}  // namespace

RealMatrix face_matrix(int player, const std::vector<int>& cardinalities) {
  const ProfileSpace sp(cardinalities);
  if (player < 1 || player > sp.players())
    throw IndexError("face_matrix: player " + std::to_string(player));
  const ProfileSpace reduced = sp.without(player);
  const std::int64_t rows =
      sp.players() == 1 ? 1 : reduced.total();  // kappa / k_i
  RealMatrix e = RealMatrix::Zero(rows, sp.total());
  for (std::int64_t col = 1; col <= sp.total(); ++col) {
    std::vector<int> profile = sp.unindex(col);
    std::int64_t row = 1;
    if (sp.players() > 1) {
      std::vector<int> rest;
      rest.reserve(profile.size() - 1);
      for (int i = 1; i <= sp.players(); ++i)
        if (i != player) rest.push_back(profile[static_cast<std::size_t>(i) - 1]);
      row = reduced.index(rest);
    }
    e(row - 1, col - 1) = 1.0;
  }
  return e;
}

PotentialSystem build_potential_system(const NormalGame& g) {
  const int n = g.players();
  const ProfileSpace sp = g.space();
  const std::int64_t kappa = sp.total();

  PotentialSystem sys;
  sys.face_matrices.reserve(static_cast<std::size_t>(n));
  Eigen::Index cols = 0;
  for (int i = 1; i <= n; ++i) {
    sys.face_matrices.push_back(face_matrix(i, g.cardinalities));
    sys.xi_offsets.push_back(cols);
    cols += sys.face_matrices.back().rows();
  }

  const Eigen::Index rows = static_cast<Eigen::Index>((n - 1) * kappa);
  sys.psi = RealMatrix::Zero(rows, cols);
  sys.b = RealVector::Zero(rows);
  if (n == 1) return sys;

  const RowVector wg = equivalent_vector_form(g);
  sys.b = wg.transpose();
  for (int i = 2; i <= n; ++i) {
    const Eigen::Index r0 = static_cast<Eigen::Index>((i - 2) * kappa);
    sys.psi.block(r0, sys.xi_offsets[0], kappa, sys.face_matrices[0].rows()) =
        -sys.face_matrices[0].transpose();
    sys.psi.block(r0, sys.xi_offsets[static_cast<std::size_t>(i) - 1], kappa,
                  sys.face_matrices[static_cast<std::size_t>(i) - 1].rows()) =
        sys.face_matrices[static_cast<std::size_t>(i) - 1].transpose();
  }
  return sys;
}

PotentialResult solve_potential(const NormalGame& g) {
  const PotentialSystem sys = build_potential_system(g);
  PotentialResult res;
  if (sys.psi.rows() == 0) {
    // Single player: no consistency constraints; V^P = V_1.
    res.xi = RealVector::Zero(sys.psi.cols());
    res.is_potential = true;
    res.residual = 0.0;
    res.potential = finite_row(g.payoffs[0], "solve_potential");
    return res;
  }
  const Eigen::CompleteOrthogonalDecomposition<RealMatrix> cod(sys.psi);
  res.xi = cod.solve(sys.b);
  res.residual = (sys.psi * res.xi - sys.b).lpNorm<Eigen::Infinity>();
  const double scale = std::max(1.0, sys.b.lpNorm<Eigen::Infinity>());
  res.is_potential = res.residual <= 1e-8 * scale;
  if (res.is_potential) {
    const RowVector v1 = finite_row(g.payoffs[0], "solve_potential");
    const Eigen::Index d1 = sys.face_matrices[0].rows();
    res.potential =
        v1 - res.xi.segment(0, d1).transpose() * sys.face_matrices[0];
  }
  return res;
}

bool verify_potential(const NormalGame& g, const RowVector& p_vec, double tol) {
  std::vector<double> ones(static_cast<std::size_t>(g.players()), 1.0);
  return verify_weighted_potential(g, p_vec, ones, tol);
}

bool verify_weighted_potential(const NormalGame& g, const RowVector& p_vec,
                               const std::vector<double>& weights, double tol) {
  const ProfileSpace sp = g.space();
  if (p_vec.size() != sp.total())
    throw DimensionError("verify_potential: potential length mismatch");
  if (static_cast<int>(weights.size()) != g.players())
    throw DimensionError("verify_potential: one weight per player required");
  for (double w : weights)
    if (!(w > 0.0))
      throw NonpositiveWeightError("verify_weighted_potential: weights must be > 0");

  for (int i = 1; i <= g.players(); ++i) {
    const double w = weights[static_cast<std::size_t>(i) - 1];
    const ProfileSpace rest = sp.without(i);
    for (std::int64_t r = 1; r <= rest.total(); ++r) {
      const std::vector<int> others = rest.unindex(r);
      for (int x = 1; x <= sp.card(i); ++x) {
        const std::int64_t ix = sp.index(sp.insert(others, i, x));
        for (int y = x + 1; y <= sp.card(i); ++y) {
          const std::int64_t iy = sp.index(sp.insert(others, i, y));
          const ExtReal cx = g.payoffs[static_cast<std::size_t>(i) - 1]
                                      [static_cast<std::size_t>(ix) - 1];
          const ExtReal cy = g.payoffs[static_cast<std::size_t>(i) - 1]
                                      [static_cast<std::size_t>(iy) - 1];
          if (cx.is_neg_inf() || cy.is_neg_inf())
            throw InfinitePayoffError("verify_potential: payoffs must be finite");
          const double lhs = cx.value() - cy.value();
          const double rhs = w * (p_vec(ix - 1) - p_vec(iy - 1));
          if (std::abs(lhs - rhs) > tol) return false;
        }
      }
    }
  }
  return true;
}

}  // namespace stpg
