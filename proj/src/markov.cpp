#include "ctmcmix/markov.hpp"

#include <cmath>
#include <limits>

#include "ctmcmix/expm.hpp"

namespace ctmcmix {

namespace {

void reach(const Eigen::MatrixXd& M, bool transpose, std::vector<char>& seen) {
  const int n = static_cast<int>(M.rows());
  std::vector<int> stack{0};
  seen.assign(n, 0);
  seen[0] = 1;
  while (!stack.empty()) {
    const int y = stack.back();
    stack.pop_back();
    for (int z = 0; z < n; ++z) {
      if (z == y || seen[z]) continue;
      const double w = transpose ? M(z, y) : M(y, z);
      if (w > 0.0) {
        seen[z] = 1;
        stack.push_back(z);
      }
    }
  }
}

Eigen::VectorXd solve_stationary(const Eigen::MatrixXd& A) {
  // Stack A^T (kernel condition) on top of the normalization row.
  const int n = static_cast<int>(A.rows());
  Eigen::MatrixXd sys(n + 1, n);
  sys.topRows(n) = A.transpose();
  sys.bottomRows(1).setOnes();
  Eigen::VectorXd rhs = Eigen::VectorXd::Zero(n + 1);
  rhs[n] = 1.0;
  Eigen::VectorXd pi = sys.colPivHouseholderQr().solve(rhs);
  for (int i = 0; i < n; ++i)
    if (pi[i] < 0.0 && pi[i] > -1e-12) pi[i] = 0.0;
  pi /= pi.sum();
  return pi;
}

double tv(const Eigen::VectorXd& p, const Eigen::VectorXd& q) {
  return 0.5 * (p - q).cwiseAbs().sum();
}

double worst_tv_rows(const Eigen::MatrixXd& D, const Eigen::VectorXd& pi) {
  double worst = 0.0;
  for (int y = 0; y < D.rows(); ++y) worst = std::max(worst, tv(D.row(y), pi));
  return worst;
}

}  // namespace

bool is_irreducible(const Eigen::MatrixXd& M) {
  if (M.rows() == 0) return false;
  std::vector<char> fwd, bwd;
  reach(M, false, fwd);
  reach(M, true, bwd);
  for (char s : fwd)
    if (!s) return false;
  for (char s : bwd)
    if (!s) return false;
  return true;
}

Eigen::VectorXd stationary_distribution(const DiscreteChain& chain) {
  require(is_irreducible(chain.T), "no unique stationary distribution: chain is reducible");
  Eigen::MatrixXd A = chain.T - Eigen::MatrixXd::Identity(chain.n(), chain.n());
  Eigen::VectorXd pi = solve_stationary(A);
  require((pi.transpose() * chain.T - pi.transpose()).cwiseAbs().sum() <= 1e-9,
          "stationary distribution residual too large");
  return pi;
}

Eigen::VectorXd stationary_distribution(const RateMatrix& K) {
  require(is_irreducible(K.K), "no unique stationary distribution: chain is reducible");
  Eigen::VectorXd pi = solve_stationary(K.K);
  require((pi.transpose() * K.K).cwiseAbs().sum() <= 1e-9,
          "stationary distribution residual too large");
  return pi;
}

int mixing_time(const DiscreteChain& chain) {
  const Eigen::VectorXd pi = stationary_distribution(chain);
  const int n = chain.n();
  Eigen::MatrixXd D = Eigen::MatrixXd::Identity(n, n);
  if (worst_tv_rows(D, pi) <= 1.0 / 3.0) return 0;

  // Doubling on cached squarings T^(2^k), then bisection via their products.
  std::vector<Eigen::MatrixXd> pow2{chain.T};
  long t = 1;
  while (worst_tv_rows(pow2.back(), pi) > 1.0 / 3.0) {
    require(t < (1L << 40), "mixing time search exceeded 2^40 steps");
    pow2.push_back(pow2.back() * pow2.back());
    t *= 2;
  }
  // Invariant: lo fails, hi = lo + 2^(k) ... succeeds. Standard bisection on
  // the monotone predicate TV(t) <= 1/3.
  long lo = t / 2, hi = t;
  while (hi - lo > 1) {
    const long mid = (lo + hi) / 2;
    Eigen::MatrixXd D2 = Eigen::MatrixXd::Identity(n, n);
    long rem = mid;
    for (std::size_t k = 0; rem > 0; ++k, rem >>= 1)
      if (rem & 1) D2 = D2 * pow2[k];
    if (worst_tv_rows(D2, pi) <= 1.0 / 3.0)
      hi = mid;
    else
      lo = mid;
  }
  return static_cast<int>(hi);
}

double mixing_time(const RateMatrix& K, double resolution) {
  require(resolution > 0.0, "mixing_time: resolution must be positive");
  const Eigen::VectorXd pi = stationary_distribution(K);
  auto mixed = [&](long steps) {
    const Eigen::MatrixXd D = expm(K.K * (static_cast<double>(steps) * resolution));
    return worst_tv_rows(D, pi) <= 1.0 / 3.0;
  };
  if (mixed(0)) return 0.0;
  long hi = 1;
  while (!mixed(hi)) {
    require(hi < (1L << 40), "mixing time search exceeded 2^40 resolution steps");
    hi *= 2;
  }
  long lo = hi / 2;
  while (hi - lo > 1) {
    const long mid = (lo + hi) / 2;
    if (mixed(mid))
      hi = mid;
    else
      lo = mid;
  }
  return static_cast<double>(hi) * resolution;
}

double trail_log_weight(const DiscreteTrail& x, const DTMixture& mixture, int ell) {
  require(ell >= 0 && ell < mixture.L(), "chain index out of range");
  const int n = mixture.n();
  constexpr double kNegInf = -std::numeric_limits<double>::infinity();
  require(!x.states.empty(), "empty trail");
  for (int s : x.states) require(s >= 0 && s < n, "trail state out of range");

  const double s0 = mixture.start(ell, x.states.front());
  if (s0 <= 0.0) return kNegInf;
  double lw = std::log(s0);
  const Eigen::MatrixXd& T = mixture.T[ell];
  for (std::size_t i = 0; i + 1 < x.states.size(); ++i) {
    const double p = T(x.states[i], x.states[i + 1]);
    if (p <= 0.0) return kNegInf;
    lw += std::log(p);
  }
  return lw;
}

double condition_number(const CTMixture& M) {
  const double kmin = M.min_rate();
  require(kmin > 0.0, "degenerate holding rate");
  return M.max_rate() / kmin;
}

}  // namespace ctmcmix
