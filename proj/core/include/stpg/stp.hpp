#ifndef STPG_STP_HPP
#define STPG_STP_HPP

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

#include "stpg/errors.hpp"

namespace stpg {

using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;
using RowVector = Eigen::RowVectorXd;

/// The unit column delta_n^i (i-th column of I_n), kept symbolic.
/// Indices are 1-based throughout, matching the delta notation.
struct LogicalVector {
  int dim = 1;
  int index = 1;  // 1 <= index <= dim

  RealVector dense() const;
};

/// A matrix whose every column is a unit vector, stored by the 1-based row
/// index of each column's nonzero entry. Deterministic strategy-update maps
/// and permutation matrices (swap, order-reducing) live here.
struct LogicalMatrix {
  int rows = 1;
  std::vector<int> column_indices;

  int cols() const { return static_cast<int>(column_indices.size()); }

  /// Row index hit by column `state` (i.e. the image of a deterministic map).
  int image(int state) const;

  RealMatrix dense() const;
};

/// delta_n^i. Throws IndexError unless 1 <= i <= n.
LogicalVector delta(int n, int i);

/// Mixed-radix index space over cardinalities (k_1, ..., k_n), with player 1
/// as the most significant digit. This is the single profile-ordering
/// convention of the whole library: the flattened position of a profile
/// agrees with the STP stacking of the players' logical vectors.
class ProfileSpace {
 public:
  ProfileSpace() = default;
  explicit ProfileSpace(std::vector<int> cardinalities);

  int players() const { return static_cast<int>(cards_.size()); }
  int card(int player) const;  // 1-based player
  const std::vector<int>& cards() const { return cards_; }
  std::int64_t total() const { return total_; }

  /// 1-based flat index of a profile of 1-based coordinates.
  std::int64_t index(const std::vector<int>& profile) const;
  /// Inverse of index().
  std::vector<int> unindex(std::int64_t idx) const;

  /// Index space with player i's coordinate removed (order preserved).
  ProfileSpace without(int player) const;
  /// Reinsert coordinate `value` for player i into a reduced profile.
  std::vector<int> insert(const std::vector<int>& reduced, int player,
                          int value) const;

 private:
  std::vector<int> cards_;
  std::int64_t total_ = 1;
};

std::int64_t profile_index(const std::vector<int>& indices,
                           const ProfileSpace& space);
std::vector<int> profile_unindex(std::int64_t idx, const ProfileSpace& space);

/// Kronecker product.
RealMatrix kron(const RealMatrix& a, const RealMatrix& b);

/// Left semi-tensor product (A ⊗ I_{t/cols(A)})(B ⊗ I_{t/rows(B)}) with
/// t = lcm(cols(A), rows(B)). Falls back to the ordinary product (exactly)
/// when the inner dimensions already match.
RealMatrix stp(const RealMatrix& a, const RealMatrix& b);

/// Columnwise Kronecker product of two matrices with equal column counts.
/// Throws DimensionError on a column mismatch.
RealMatrix khatri_rao(const RealMatrix& a, const RealMatrix& b);

/// The (m,n) swap matrix W_[m,n]: the mn x mn permutation with
/// W_[m,n] (x ⊗ y) = y ⊗ x for columns x in R^m, y in R^n.
LogicalMatrix swap_matrix(int m, int n);

/// The n^2 x n order-reducing matrix PR_n with column i = delta_{n^2}^{(i-1)n+i},
/// so that PR_n x = x ⊗ x for every logical x in R^n.
LogicalMatrix order_reducing_matrix(int n);

}  // namespace stpg

#endif  // STPG_STP_HPP
