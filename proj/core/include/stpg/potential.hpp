#ifndef STPG_POTENTIAL_HPP
#define STPG_POTENTIAL_HPP

#include <vector>

#include "stpg/normal_game.hpp"

namespace stpg {

/// The potential equation Psi xi = b of a normal game. Block row i-1
/// (i = 2..n) of Psi is [-E_1^T | 0 ... E_i^T ... 0]; b stacks (V_i - V_1)^T.
struct PotentialSystem {
  RealMatrix psi;                        // (n-1)kappa x sum_i kappa/k_i
  RealVector b;                          // (n-1)kappa
  std::vector<RealMatrix> face_matrices; // E_1, ..., E_n
  std::vector<Eigen::Index> xi_offsets;  // start of each xi_i block
};

struct PotentialResult {
  bool is_potential = false;
  RealVector xi;        // minimum-norm least-squares solution
  RowVector potential;  // V^P = V_1 - xi_1^T E_1 (meaningful when is_potential)
  double residual = 0.0;
};

/// Face matrix E_i = I_{alpha_i} ⊗ 1^T_{k_i} ⊗ I_{beta_i}, sized
/// (kappa/k_i) x kappa, so that V_i^d E_i spreads a function of s_{-i}
/// over the full profile space.
RealMatrix face_matrix(int player, const std::vector<int>& cardinalities);

/// Throws InfinitePayoffError on padded payoffs.
PotentialSystem build_potential_system(const NormalGame& g);

/// Least-squares decision: the game is an exact potential game iff the
/// potential equation is consistent. Residual test uses
/// ||Psi xi - b||_inf <= 1e-8 * max(1, ||b||_inf) on the minimum-norm solution.
PotentialResult solve_potential(const NormalGame& g);

/// Exhaustive check of the defining identity of an exact potential.
bool verify_potential(const NormalGame& g, const RowVector& p_vec,
                      double tol = 1e-9);

/// Weighted variant: c_i differences must equal w_i times the potential
/// differences. Throws NonpositiveWeightError unless all w_i > 0.
bool verify_weighted_potential(const NormalGame& g, const RowVector& p_vec,
                               const std::vector<double>& weights,
                               double tol = 1e-9);

}  // namespace stpg

#endif  // STPG_POTENTIAL_HPP
