#pragma once

#include <cstdint>
#include <vector>

#include "ctmcmix/rng.hpp"
#include "ctmcmix/types.hpp"

namespace ctmcmix {

struct GeneratorConfig {
  int n = 2;
  int L = 1;
  double rate_upper = 1.0;  // off-diagonal rates are Uniform[0, rate_upper]
  std::uint64_t seed = 0;
  std::vector<int> absorbing;

  void validate() const;
};

/// Random mixture: iid uniform off-diagonal rates, absorbing rows zeroed,
/// starting probabilities uniform on the simplex over all L*n cells.
CTMixture random_mixture(const GeneratorConfig& cfg);

/// Two-chain mixture (K, f*K) with uniform starting probabilities.
CTMixture proportional_mixture(const RateMatrix& K, double f);

/// Samples one jump path: pick (chain, state) from the start matrix, then
/// alternate exponential holding times and categorical jumps until the
/// horizon is exceeded or an absorbing state is entered.
ContinuousTrail sample_continuous_trail(const CTMixture& M, double horizon, RngStream& rng);

/// r trails with per-trail streams derived from (seed, index); parallel and
/// serial runs produce identical output.
std::vector<ContinuousTrail> sample_trails(const CTMixture& M, int r, double horizon,
                                           std::uint64_t seed);

/// Regular observations (x_{i tau})_{0 <= i < m}. A jump at exactly i*tau is
/// visible at index i. Absorbed trails repeat the absorbing state beyond the
/// horizon; otherwise m*tau must not exceed the horizon.
DiscreteTrail discretize(const ContinuousTrail& x, double tau, int m);

std::vector<DiscreteTrail> discretize_all(const std::vector<ContinuousTrail>& xs, double tau,
                                          int m);

/// Number of observation intervals whose discretization skips at least one
/// intermediate state.
int count_bad_transitions(const ContinuousTrail& x, double tau, int m);

/// Copy of the trail restricted to [0, t_max].
ContinuousTrail truncate_trail(const ContinuousTrail& x, double t_max);

/// Hard ground-truth assignment from true_chain labels.
SoftAssignment groundtruth_assignment(const std::vector<ContinuousTrail>& trails, int L);

}  // namespace ctmcmix
