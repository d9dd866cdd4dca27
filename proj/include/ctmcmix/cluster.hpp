#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ctmcmix/types.hpp"

namespace ctmcmix {

struct ClusterConfig {
  int L = 1;
  int max_iter = 100;
  double tol = 1e-8;  // relative log-likelihood improvement threshold
  int restarts = 3;
  std::uint64_t seed = 0;

  void validate() const;
};

struct PosteriorResult {
  SoftAssignment assignment;
  double loglik = 0.0;             // observed-data log-likelihood
  std::vector<int> degenerate;     // rows that were impossible under every chain
};

/// Posterior responsibilities a(x,l) from joint weights s[l][x0] * prod T[l],
/// computed in log space. Rows impossible under every chain become uniform
/// and are flagged.
PosteriorResult posterior_soft_assignment(const std::vector<DiscreteTrail>& trails,
                                          const DTMixture& M);

struct EmResult {
  DTMixture mixture;
  SoftAssignment assignment;
  double loglik = 0.0;
  int iterations = 0;
  std::vector<double> loglik_trace;
  std::vector<int> empty_chains;    // collapsed and not recovered by re-seeding
  std::vector<int> degenerate_trails;
};

/// Expectation maximization over discretized trails (the dEM customization).
/// Best of cfg.restarts random starts unless an initial mixture is given.
EmResult em_discrete(const std::vector<DiscreteTrail>& trails, const ClusterConfig& cfg,
                     const std::optional<DTMixture>& init = std::nullopt);

enum class SpectralFeature { TransitionFrequencies, StateFrequencies };

struct SpectralConfig {
  int L = 1;
  SpectralFeature feature = SpectralFeature::TransitionFrequencies;
  int kmeans_restarts = 10;
  std::uint64_t seed = 0;
  double delta = 0.0;  // advisory separation parameters, reporting only
  double alpha = 0.0;

  void validate() const;
};

struct SpectralResult {
  SoftAssignment assignment;  // one-hot rows
  bool single_cluster = false;
};

/// Long-trail regime: per-trail transition-frequency features projected onto
/// the top-L singular subspace, then seeded k-means. Hard assignments.
SpectralResult spectral_cluster(const std::vector<DiscreteTrail>& trails,
                                const SpectralConfig& cfg);

struct PerTrailChain {
  DiscreteChain chain;
  std::vector<bool> visited;  // states with at least one outgoing transition
};

/// Single-trail estimator M_yz = c_yz / c_y; unvisited states get uniform rows.
PerTrailChain per_trail_chain(const DiscreteTrail& x);

struct VeryLongResult {
  DTMixture mixture;
  SoftAssignment assignment;  // hard, by merged group
};

/// Very-long regime: estimate one chain per trail, merge the estimates into L
/// groups by complete-linkage on average per-state TV, pool counts per group.
VeryLongResult very_long_assignment(const std::vector<DiscreteTrail>& trails, int L);

/// Empirical distribution over consecutive state triples.
struct ThreeGramStats {
  int n = 0;
  std::vector<double> p;  // flat n^3, index (x*n + y)*n + z

  double at(int x, int y, int z) const { return p[(static_cast<std::size_t>(x) * n + y) * n + z]; }
};

ThreeGramStats three_gram_stats(const std::vector<DiscreteTrail>& trails);

struct ModelDifferenceReport {
  std::vector<bool> premise;     // ||K_y - K'_y||_2 >= Delta/tau + 8 tau (1 + K_max^2)
  std::vector<bool> conclusion;  // ||exp(K tau)_y - exp(K' tau)_y||_2 >= Delta
  int violations = 0;            // premise true but conclusion false
};

/// Checks the discretized-model-difference implication state by state.
/// Requires the regime K_max * tau <= 1/2.
ModelDifferenceReport model_difference_check(const RateMatrix& A, const RateMatrix& B,
                                             double tau, double delta);

}  // namespace ctmcmix
