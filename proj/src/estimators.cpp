#include "ctmcmix/estimators.hpp"

#include <algorithm>
#include <cmath>

namespace ctmcmix {

void EstimatorConfig::validate() const {
  require(eps_h > 0.0 && eps_h < 1.0, "eps_h must lie in (0,1)");
  require(eps_t > 0.0 && eps_t < 1.0, "eps_t must lie in (0,1)");
  require(eps > 0.0 && eps < 1.0, "eps must lie in (0,1)");
  require(min_count >= 1, "min_count must be at least 1");
}

WeightedCounts pooled_counts(const std::vector<DiscreteTrail>& trails,
                             const std::vector<double>& weights, int n) {
  require(trails.size() == weights.size(), "one weight per trail required");
  Eigen::MatrixXd C = Eigen::MatrixXd::Zero(n, n);
  for (std::size_t t = 0; t < trails.size(); ++t) {
    require(weights[t] >= 0.0, "weights must be nonnegative");
    const auto& s = trails[t].states;
    for (std::size_t i = 0; i + 1 < s.size(); ++i) C(s[i], s[i + 1]) += weights[t];
  }
  return WeightedCounts(std::move(C));
}

HoldingEstimate estimate_holding(const WeightedCounts& C, double tau,
                                 const EstimatorConfig& cfg) {
  cfg.validate();
  require(tau > 0.0, "tau must be positive");
  const int n = C.n();
  HoldingEstimate est;
  est.q = Eigen::VectorXd::Zero(n);
  est.kyy = Eigen::VectorXd::Zero(n);
  est.flags.assign(n, StateFlag::Ok);
  for (int y = 0; y < n; ++y) {
    const double cy = C.C.row(y).sum();
    if (cy <= 0.0) {
      est.flags[y] = StateFlag::Unobserved;
      continue;
    }
    est.q[y] = C.C(y, y) / cy;
    if (est.q[y] <= 0.0) {
      est.flags[y] = StateFlag::HoldingUnderflow;
      continue;
    }
    est.kyy[y] = std::log(est.q[y]) / tau;
    if (cy < static_cast<double>(cfg.min_count)) est.flags[y] = StateFlag::LowCount;
  }
  return est;
}

JumpEstimate estimate_jump_probs(const WeightedCounts& C, const EstimatorConfig& cfg) {
  cfg.validate();
  const int n = C.n();
  JumpEstimate est;
  est.p = Eigen::MatrixXd::Zero(n, n);
  est.flags.assign(n, StateFlag::Ok);
  for (int y = 0; y < n; ++y) {
    const double moves = C.C.row(y).sum() - C.C(y, y);
    if (moves <= 0.0) {
      est.flags[y] = StateFlag::NoJumps;
      continue;
    }
    for (int z = 0; z < n; ++z)
      if (z != y) est.p(y, z) = C.C(y, z) / moves;
  }
  return est;
}

RateEstimate estimate_rate_matrix(const WeightedCounts& C, double tau,
                                  const EstimatorConfig& cfg) {
  const int n = C.n();
  const HoldingEstimate hold = estimate_holding(C, tau, cfg);
  const JumpEstimate jump = estimate_jump_probs(C, cfg);

  RateEstimate est;
  est.flags.assign(n, StateFlag::Ok);
  Eigen::MatrixXd K = Eigen::MatrixXd::Zero(n, n);
  int estimated = 0;
  for (int y = 0; y < n; ++y) {
    if (hold.flags[y] == StateFlag::Unobserved || hold.flags[y] == StateFlag::HoldingUnderflow ||
        hold.flags[y] == StateFlag::LowCount) {
      est.flags[y] = hold.flags[y];
      continue;
    }
    const double rate = -hold.kyy[y];
    if (rate <= 0.0) {
      // never left the state: a zero row is the maximum-likelihood answer
      ++estimated;
      continue;
    }
    if (jump.flags[y] == StateFlag::NoJumps) {
      // positive estimated rate but no observed destination; cannot split it
      est.flags[y] = StateFlag::NoJumps;
      continue;
    }
    for (int z = 0; z < n; ++z)
      if (z != y) K(y, z) = jump.p(y, z) * rate;
    K(y, y) = -K.row(y).sum();
    ++estimated;
  }
  require(estimated > 0, "no state could be estimated");
  est.K = RateMatrix(std::move(K));
  return est;
}

RateEstimate estimate_rate_matrix(const std::vector<DiscreteTrail>& trails,
                                  const std::vector<double>& weights, double tau,
                                  const EstimatorConfig& cfg) {
  require(!trails.empty(), "no trails given");
  require(tau > 0.0, "tau must be positive");
  int n = 0;
  for (const auto& t : trails)
    for (int s : t.states) n = std::max(n, s + 1);
  require(std::any_of(weights.begin(), weights.end(), [](double w) { return w > 0.0; }),
          "all trail weights are zero");
  return estimate_rate_matrix(pooled_counts(trails, weights, n), tau, cfg);
}

double recommend_tau(double kappa, double k_max, double eps, TauRule rule) {
  require(kappa >= 1.0, "condition number must be at least 1");
  require(k_max > 0.0, "K_max must be positive");
  require(eps > 0.0 && eps < 1.0, "eps must lie in (0,1)");
  switch (rule) {
    case TauRule::ConditionNumber:
      return eps / (100.0 * kappa * k_max);
    case TauRule::HoldingTarget:
      return std::sqrt(eps) / (3.0 * k_max);
  }
  throw Error("unknown tau rule");
}

BadTransitionBound bad_transition_bound(double k_max, double tau) {
  require(k_max > 0.0, "K_max must be positive");
  require(tau > 0.0, "tau must be positive");
  const double x = k_max * tau;
  return {1.0 - (1.0 + x) * std::exp(-x), std::min(1.0, x * x)};
}

}  // namespace ctmcmix
