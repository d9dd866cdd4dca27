#pragma once

#include <vector>

#include "ctmcmix/types.hpp"

namespace ctmcmix {

enum class StateFlag {
  Ok,
  Unobserved,        // no transitions through the state
  LowCount,          // fewer transitions than min_count (advisory)
  HoldingUnderflow,  // no observed self-transition, rate unbounded
  NoJumps,           // no state-changing transition out of the state
};

struct EstimatorConfig {
  double eps_h = 0.1;  // target relative holding error
  double eps_t = 0.1;  // target jump-probability TV error
  double eps = 0.1;    // overall per-row TV target
  int min_count = 20;

  void validate() const;
};

struct HoldingEstimate {
  Eigen::VectorXd q;    // self-transition fraction per state
  Eigen::VectorXd kyy;  // log(q)/tau, nonpositive
  std::vector<StateFlag> flags;
};

struct JumpEstimate {
  Eigen::MatrixXd p;  // zero diagonal; estimated rows sum to one off-diagonal
  std::vector<StateFlag> flags;
};

struct RateEstimate {
  RateMatrix K;
  std::vector<StateFlag> flags;  // non-Ok rows are zeroed in K
};

/// Holding probabilities q_y = C(y,y)/c_y and rates from soft counts.
HoldingEstimate estimate_holding(const WeightedCounts& C, double tau,
                                 const EstimatorConfig& cfg = {});

/// Jump probabilities p_yz = C(y,z) / sum_{z' != y} C(y,z').
JumpEstimate estimate_jump_probs(const WeightedCounts& C, const EstimatorConfig& cfg = {});

/// Composite estimator K_yz = p_yz * |K_yy| from weighted discretized trails.
RateEstimate estimate_rate_matrix(const std::vector<DiscreteTrail>& trails,
                                  const std::vector<double>& weights, double tau,
                                  const EstimatorConfig& cfg = {});

RateEstimate estimate_rate_matrix(const WeightedCounts& C, double tau,
                                  const EstimatorConfig& cfg = {});

enum class TauRule {
  ConditionNumber,  // eps / (100 kappa K_max)
  HoldingTarget,    // sqrt(eps_h) / (3 K_max)
};

double recommend_tau(double kappa, double k_max, double eps,
                     TauRule rule = TauRule::ConditionNumber);

struct BadTransitionBound {
  double exact;  // 1 - (1 + K_max tau) e^{-K_max tau}
  double bound;  // min(1, (K_max tau)^2)
};

BadTransitionBound bad_transition_bound(double k_max, double tau);

/// Soft transition counts pooled over weighted trails (single chain).
WeightedCounts pooled_counts(const std::vector<DiscreteTrail>& trails,
                             const std::vector<double>& weights, int n);

}  // namespace ctmcmix
