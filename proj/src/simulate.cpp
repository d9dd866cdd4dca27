#include "ctmcmix/simulate.hpp"

#include <algorithm>
#include <cmath>

#include "ctmcmix/parallel.hpp"

namespace ctmcmix {

void GeneratorConfig::validate() const {
  require(n >= 2, "generator needs at least 2 states");
  require(L >= 1, "generator needs at least 1 chain");
  require(rate_upper > 0.0, "rate_upper must be positive");
  require(static_cast<int>(absorbing.size()) < n, "all states cannot be absorbing");
  for (int a : absorbing) {
    require(a >= 0 && a < n, "absorbing state out of range");
    require(std::count(absorbing.begin(), absorbing.end(), a) == 1,
            "duplicate absorbing state");
  }
}

CTMixture random_mixture(const GeneratorConfig& cfg) {
  cfg.validate();
  RngStream rng(derive_seed(cfg.seed, 0x6d69780aULL));
  std::vector<RateMatrix> chains;
  chains.reserve(cfg.L);
  for (int ell = 0; ell < cfg.L; ++ell) {
    Eigen::MatrixXd K = Eigen::MatrixXd::Zero(cfg.n, cfg.n);
    for (int y = 0; y < cfg.n; ++y) {
      if (std::count(cfg.absorbing.begin(), cfg.absorbing.end(), y)) continue;
      double row = 0.0;
      for (int z = 0; z < cfg.n; ++z) {
        if (z == y) continue;
        K(y, z) = rng.uniform(0.0, cfg.rate_upper);
        row += K(y, z);
      }
      K(y, y) = -row;
    }
    chains.emplace_back(std::move(K));
  }
  Eigen::VectorXd flat = rng.simplex(cfg.L * cfg.n);
  Eigen::MatrixXd start = Eigen::Map<Eigen::MatrixXd>(flat.data(), cfg.n, cfg.L).transpose();
  return CTMixture(std::move(chains), std::move(start));
}

CTMixture proportional_mixture(const RateMatrix& K, double f) {
  require(f > 0.0, "scale factor must be positive");
  std::vector<RateMatrix> chains{K, RateMatrix(f * K.K)};
  Eigen::MatrixXd start = Eigen::MatrixXd::Constant(2, K.n(), 1.0 / (2.0 * K.n()));
  return CTMixture(std::move(chains), std::move(start));
}

ContinuousTrail sample_continuous_trail(const CTMixture& M, double horizon, RngStream& rng) {
  require(horizon > 0.0, "horizon must be positive");
  require(M.start.sum() > 0.0, "start matrix is all zero");

  const int n = M.n();
  Eigen::VectorXd flat(M.L() * n);
  for (int ell = 0; ell < M.L(); ++ell) flat.segment(ell * n, n) = M.start.row(ell);
  const int cell = rng.categorical(flat);
  const int ell = cell / n;
  int y = cell % n;
  const Eigen::MatrixXd& K = M.chains[ell].K;

  ContinuousTrail trail;
  trail.true_chain = ell;
  trail.horizon = horizon;
  trail.events.push_back({y, 0.0});
  double t = 0.0;
  for (;;) {
    const double rate = -K(y, y);
    if (rate <= 0.0) {
      trail.absorbed = true;  // zero-rate states hold forever
      break;
    }
    t += rng.exponential(rate);
    if (t > horizon) break;
    Eigen::VectorXd w = K.row(y);
    w[y] = 0.0;
    y = rng.categorical(w);
    trail.events.push_back({y, t});
  }
  return trail;
}

std::vector<ContinuousTrail> sample_trails(const CTMixture& M, int r, double horizon,
                                           std::uint64_t seed) {
  std::vector<ContinuousTrail> trails(r);
  parallel_for(r, [&](int i) {
    RngStream rng(derive_seed(seed, 0x747261696cULL, static_cast<std::uint64_t>(i)));
    trails[i] = sample_continuous_trail(M, horizon, rng);
  });
  return trails;
}

DiscreteTrail discretize(const ContinuousTrail& x, double tau, int m) {
  require(tau > 0.0, "tau must be positive");
  require(m >= 1, "m must be at least 1");
  const double span = static_cast<double>(m) * tau;
  require(x.absorbed || span <= x.horizon * (1.0 + 1e-12) + 1e-12,
          "trail too short for the requested observations and not absorbed");

  DiscreteTrail d;
  d.tau = tau;
  d.states.resize(m);
  std::size_t idx = 0;
  for (int i = 0; i < m; ++i) {
    const double t = static_cast<double>(i) * tau;
    while (idx + 1 < x.events.size() && x.events[idx + 1].t <= t) ++idx;
    d.states[i] = x.events[idx].state;
  }
  return d;
}

std::vector<DiscreteTrail> discretize_all(const std::vector<ContinuousTrail>& xs, double tau,
                                          int m) {
  std::vector<DiscreteTrail> out(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) out[i] = discretize(xs[i], tau, m);
  return out;
}

int count_bad_transitions(const ContinuousTrail& x, double tau, int m) {
  require(tau > 0.0, "tau must be positive");
  const double span = static_cast<double>(m) * tau;
  require(x.absorbed || span <= x.horizon * (1.0 + 1e-12) + 1e-12,
          "trail too short for the requested observations and not absorbed");

  const DiscreteTrail d = discretize(x, tau, m);
  int bad = 0;
  std::size_t idx = 0;
  for (int i = 0; i + 1 < m; ++i) {
    const double lo = static_cast<double>(i) * tau;
    const double hi = static_cast<double>(i + 1) * tau;
    while (idx < x.events.size() && x.events[idx].t <= lo) ++idx;
    // events strictly inside (lo, hi)
    bool skipped = false;
    for (std::size_t j = idx; j < x.events.size() && x.events[j].t < hi; ++j) {
      const int z = x.events[j].state;
      if (z != d.states[i] && z != d.states[i + 1]) {
        skipped = true;
        break;
      }
    }
    if (skipped) ++bad;
  }
  return bad;
}

ContinuousTrail truncate_trail(const ContinuousTrail& x, double t_max) {
  require(t_max > 0.0, "t_max must be positive");
  ContinuousTrail out;
  out.true_chain = x.true_chain;
  out.horizon = std::min(x.horizon, t_max);
  for (const auto& e : x.events) {
    if (e.t > t_max) break;
    out.events.push_back(e);
  }
  out.absorbed = x.absorbed && out.events.size() == x.events.size();
  return out;
}

SoftAssignment groundtruth_assignment(const std::vector<ContinuousTrail>& trails, int L) {
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(static_cast<int>(trails.size()), L);
  for (std::size_t i = 0; i < trails.size(); ++i) {
    require(trails[i].true_chain >= 0 && trails[i].true_chain < L,
            "trail lacks a usable true_chain label");
    a(static_cast<int>(i), trails[i].true_chain) = 1.0;
  }
  return SoftAssignment(std::move(a));
}

}  // namespace ctmcmix
