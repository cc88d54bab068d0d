#ifndef STPG_DYNAMICS_HPP
#define STPG_DYNAMICS_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "stpg/conversions.hpp"

namespace stpg {

enum class UpdateRule { Mbra, Logit };
enum class Schedule { Synchronous, AsyncRoundRobin, AsyncUniform };
enum class TieBreak { LowestIndex, UniformRandom };
/// How ActionType players revise: the pair (t_i, a_i) at once, or action and
/// type in separate sub-steps.
enum class AtUpdateStyle { Concurrent, Separate };

struct SurConfig {
  UpdateRule rule = UpdateRule::Mbra;
  double lambda = 1.0;  // logit inverse temperature, probability ∝ exp(lambda * payoff)
  Schedule schedule = Schedule::Synchronous;
  std::vector<int> order;  // round-robin player order; empty = 1..n
  TieBreak tie_break = TieBreak::LowestIndex;
  AtUpdateStyle at_style = AtUpdateStyle::Concurrent;
};

/// Column-stochastic transition matrix: column j is the distribution of the
/// next state given current state j.
class TransitionMatrix {
 public:
  explicit TransitionMatrix(RealMatrix columns);

  const RealMatrix& matrix() const { return m_; }
  std::int64_t dim() const { return m_.rows(); }

  /// True when every column is a unit vector (a deterministic map).
  bool is_logical() const;
  LogicalMatrix logical() const;

 private:
  RealMatrix m_;
};

TransitionMatrix from_logical(const LogicalMatrix& m);

/// One strategy-updating process. Synchronous and async-uniform schedules
/// produce a single matrix; round-robin produces the per-step matrices in
/// updating order (the state advances by one matrix per step, cyclically).
struct TransitionSystem {
  std::vector<TransitionMatrix> steps;

  bool single_step() const { return steps.size() == 1; }
  const TransitionMatrix& matrix() const;
  /// Product over one full pass of the steps, as a single matrix.
  TransitionMatrix round() const;
};

/// State space of the dynamics: action profiles for a Selten conversion,
/// joint (t_i, a_i) pairs for an ActionType conversion.
ProfileSpace dynamics_state_space(const ConvertedGame& cg);

/// Myopic-best-response dynamics. Throws InfeasibleUpdateError if some state
/// leaves a player with no finite-payoff candidate.
TransitionSystem mbra_map(const ConvertedGame& cg, const SurConfig& cfg);

/// Logit-response dynamics: candidate weights proportional to
/// exp(lambda * payoff); -inf candidates get weight zero.
TransitionSystem logit_matrix(const ConvertedGame& cg, const SurConfig& cfg);

/// Reduced per-player update map in the display convention:
/// Selten -> r_i x r over a(k); ActionType concurrent -> (tau_i r_i) x (tau_i r)
/// over t_i(k) a(k).
RealMatrix player_update_matrix(const ConvertedGame& cg, int player,
                                const SurConfig& cfg);

/// Samples the successor of `state` from its column.
int step(int state, const TransitionMatrix& m, std::mt19937_64& rng);
int step(int state, const TransitionMatrix& m, std::uint64_t seed);

/// Trajectory x0, x1, ..., x_steps; reproducible for a fixed seed.
std::vector<int> simulate(const TransitionSystem& sys, int initial_state,
                          int steps, std::uint64_t seed);

/// States fixed by a deterministic chain. Requires is_logical().
std::vector<int> fixed_points(const TransitionMatrix& m);

struct StationaryResult {
  RealVector distribution;
  std::int64_t iterations = 0;
  bool converged = false;
  /// False flags a reducible chain, where the stationary law is not unique.
  bool irreducible = true;
};

/// Power iteration from the uniform vector until ||mu_{k+1} - mu_k||_1 < tol.
StationaryResult stationary_distribution(const TransitionMatrix& m,
                                         double tol = 1e-10,
                                         std::int64_t max_iterations = 1000000);

/// Distribution proportional to exp(lambda * q).
RealVector gibbs_distribution(const RowVector& q, double lambda);

/// mu_a P(a -> a') == mu_{a'} P(a' -> a) for all state pairs, within tol.
bool detailed_balance_check(const TransitionMatrix& m, const RealVector& mu,
                            double tol);

/// Player-i marginal of a distribution over a profile space.
RealVector marginal(const RealVector& dist, int player,
                    const ProfileSpace& space);

}  // namespace stpg

#endif  // STPG_DYNAMICS_HPP
