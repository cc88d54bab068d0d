#ifndef STPG_BAYES_POTENTIAL_HPP
#define STPG_BAYES_POTENTIAL_HPP

#include <vector>

#include "stpg/bayesian_game.hpp"
#include "stpg/conversions.hpp"
#include "stpg/potential.hpp"

namespace stpg {

enum class BayesPotentialNotion { TN, TH, Harsanyi, Selten, ActionType };

/// Result of a Bayesian potential test.
///
/// `potential` lives on the lattice of the notion: (t, a) cells for
/// TN / TH / ActionType, action profiles for Harsanyi / Selten. Cells outside
/// the admissible region hold NaN. `applicable` is false when the finite
/// region of the converted game is not a full product box (the potential
/// identities quantify over product deviations, so the test is undefined
/// there) or is empty.
struct BayesPotentialReport {
  BayesPotentialNotion notion = BayesPotentialNotion::TN;
  bool applicable = true;
  bool is_potential = false;
  RowVector potential;
  double residual = 0.0;
};

/// Potential-equation data of the ActionType linear system
/// Psi^{AT} xi = b^{AT}. deletion_ops[i-1] is the operator
/// I_theta ⊗ 1^T_{tau_i} ⊗ I_vartheta ⊗ 1^T_{r_i} ⊗ I_rho that removes
/// player i's type and action coordinates from the (t, a) lattice.
struct AtPotentialSystem {
  RealMatrix psi;
  RealVector b;
  std::vector<RealMatrix> deletion_ops;
  std::vector<Eigen::Index> xi_offsets;
};

/// True for every type profile iff the per-type restricted subgame is an
/// exact potential game; the returned potential stacks the per-type solves.
BayesPotentialReport tn_potential(const BayesianGame& g);

/// Joint (type, action) deviations against a single F on T x A. Requires a
/// fully admissible game; throws InfinitePayoffError otherwise.
BayesPotentialReport th_potential(const BayesianGame& g);

/// Potential test of the Harsanyi conversion on its finite support.
BayesPotentialReport harsanyi_potential(const BayesianGame& g);

/// Potential test of the Selten conversion at the fixed type profile.
BayesPotentialReport selten_potential(const BayesianGame& g,
                                      const std::vector<int>& type_profile);

/// Potential test of the ActionType conversion via the linear system
/// Psi^{AT} xi = b^{AT} over the (t, a) lattice.
BayesPotentialReport at_potential(const BayesianGame& g);

/// Builds the ActionType system for a conversion with fully finite rows.
AtPotentialSystem build_at_potential_system(const ConvertedGame& cg);

/// Exhaustive check of the defining identity of the given notion (unit
/// weights). `q_vec` is laid out as in BayesPotentialReport::potential;
/// NaN cells are outside the quantification domain. `type_profile` is
/// required for the Selten notion and ignored otherwise.
bool verify_bayes_potential(const BayesianGame& g, BayesPotentialNotion notion,
                            const RowVector& q_vec,
                            const std::vector<int>& type_profile = {},
                            double tol = 1e-9);

}  // namespace stpg

#endif  // STPG_BAYES_POTENTIAL_HPP
