#include "stpg/stp.hpp"

#include <numeric>
#include <string>

namespace stpg {

RealVector LogicalVector::dense() const {
  RealVector v = RealVector::Zero(dim);
  v(index - 1) = 1.0;
  return v;
}

int LogicalMatrix::image(int state) const {
  if (state < 1 || state > cols())
    throw IndexError("LogicalMatrix::image: state " + std::to_string(state) +
                     " outside 1.." + std::to_string(cols()));
  return column_indices[static_cast<std::size_t>(state) - 1];
}

RealMatrix LogicalMatrix::dense() const {
  RealMatrix m = RealMatrix::Zero(rows, cols());
  for (int c = 0; c < cols(); ++c)
    m(column_indices[static_cast<std::size_t>(c)] - 1, c) = 1.0;
  return m;
}

LogicalVector delta(int n, int i) {
  if (n < 1 || i < 1 || i > n)
    throw IndexError("delta: index " + std::to_string(i) + " outside 1.." +
                     std::to_string(n));
  return LogicalVector{n, i};
}

ProfileSpace::ProfileSpace(std::vector<int> cardinalities)
    : cards_(std::move(cardinalities)) {
  if (cards_.empty()) throw DimensionError("ProfileSpace: no cardinalities");
  total_ = 1;
  for (int k : cards_) {
    if (k < 1) throw DimensionError("ProfileSpace: cardinality < 1");
    total_ *= k;
  }
}

int ProfileSpace::card(int player) const {
  if (player < 1 || player > players())
    throw IndexError("ProfileSpace::card: player " + std::to_string(player));
  return cards_[static_cast<std::size_t>(player) - 1];
}

std::int64_t ProfileSpace::index(const std::vector<int>& profile) const {
  if (static_cast<int>(profile.size()) != players())
    throw DimensionError("profile_index: expected " +
                         std::to_string(players()) + " coordinates, got " +
                         std::to_string(profile.size()));
  std::int64_t idx = 0;
  for (std::size_t i = 0; i < cards_.size(); ++i) {
    const int k = cards_[i];
    const int p = profile[i];
    if (p < 1 || p > k)
      throw IndexError("profile_index: coordinate " + std::to_string(i + 1) +
                       " = " + std::to_string(p) + " outside 1.." +
                       std::to_string(k));
    idx = idx * k + (p - 1);
  }
  return idx + 1;
}

std::vector<int> ProfileSpace::unindex(std::int64_t idx) const {
  if (idx < 1 || idx > total_)
    throw IndexError("profile_unindex: index " + std::to_string(idx) +
                     " outside 1.." + std::to_string(total_));
  std::vector<int> profile(cards_.size());
  std::int64_t rest = idx - 1;
  for (std::size_t i = cards_.size(); i-- > 0;) {
    profile[i] = static_cast<int>(rest % cards_[i]) + 1;
    rest /= cards_[i];
  }
  return profile;
}

ProfileSpace ProfileSpace::without(int player) const {
  if (player < 1 || player > players())
    throw IndexError("ProfileSpace::without: player " + std::to_string(player));
  if (players() == 1) return ProfileSpace({1});
  std::vector<int> rest;
  rest.reserve(cards_.size() - 1);
  for (int i = 0; i < players(); ++i)
    if (i + 1 != player) rest.push_back(cards_[static_cast<std::size_t>(i)]);
  return ProfileSpace(std::move(rest));
}

std::vector<int> ProfileSpace::insert(const std::vector<int>& reduced,
                                      int player, int value) const {
  std::vector<int> full;
  full.reserve(cards_.size());
  std::size_t j = 0;
  for (int i = 1; i <= players(); ++i) {
    if (i == player)
      full.push_back(value);
    else
      full.push_back(players() == 1 ? 1 : reduced[j++]);
  }
  return full;
}

std::int64_t profile_index(const std::vector<int>& indices,
                           const ProfileSpace& space) {
  return space.index(indices);
}

std::vector<int> profile_unindex(std::int64_t idx, const ProfileSpace& space) {
  return space.unindex(idx);
}

RealMatrix kron(const RealMatrix& a, const RealMatrix& b) {
  RealMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index r = 0; r < a.rows(); ++r)
    for (Eigen::Index c = 0; c < a.cols(); ++c)
      out.block(r * b.rows(), c * b.cols(), b.rows(), b.cols()) = a(r, c) * b;
  return out;
}

RealMatrix stp(const RealMatrix& a, const RealMatrix& b) {
  const Eigen::Index n = a.cols();
  const Eigen::Index p = b.rows();
  if (n == p) return a * b;
  const Eigen::Index t = std::lcm(n, p);
  const RealMatrix ae =
      (t == n) ? a : kron(a, RealMatrix::Identity(t / n, t / n));
  const RealMatrix be =
      (t == p) ? b : kron(b, RealMatrix::Identity(t / p, t / p));
  return ae * be;
}

RealMatrix khatri_rao(const RealMatrix& a, const RealMatrix& b) {
  if (a.cols() != b.cols())
    throw DimensionError("khatri_rao: column counts differ (" +
                         std::to_string(a.cols()) + " vs " +
                         std::to_string(b.cols()) + ")");
  RealMatrix out(a.rows() * b.rows(), a.cols());
  for (Eigen::Index c = 0; c < a.cols(); ++c)
    for (Eigen::Index r = 0; r < a.rows(); ++r)
      out.block(r * b.rows(), c, b.rows(), 1) = a(r, c) * b.col(c);
  return out;
}

LogicalMatrix swap_matrix(int m, int n) {
  if (m < 1 || n < 1) throw DimensionError("swap_matrix: dims must be >= 1");
  LogicalMatrix w;
  w.rows = m * n;
  w.column_indices.resize(static_cast<std::size_t>(m) * n);
  for (int k = 1; k <= m * n; ++k) {
    const int jk = (k - 1) % n + 1;       // residue taken in 1..n
    const int ik = (k - jk) / n + 1;
    w.column_indices[static_cast<std::size_t>(k) - 1] = (jk - 1) * m + ik;
  }
  return w;
}

LogicalMatrix order_reducing_matrix(int n) {
  if (n < 1) throw DimensionError("order_reducing_matrix: n must be >= 1");
  LogicalMatrix pr;
  pr.rows = n * n;
  pr.column_indices.resize(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i)
    pr.column_indices[static_cast<std::size_t>(i) - 1] = (i - 1) * n + i;
  return pr;
}

}  // namespace stpg
