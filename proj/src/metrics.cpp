#include "ctmcmix/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace ctmcmix {

namespace {

// Integral over [0, inf) of |a e^{-alpha t} - b e^{-beta t}| for a,b >= 0 and
// alpha,beta > 0. The two exponentials cross at most once; split there.
double abs_exp_diff_integral(double a, double alpha, double b, double beta) {
  if (a <= 0.0 && b <= 0.0) return 0.0;
  if (a <= 0.0) return b / beta;
  if (b <= 0.0) return a / alpha;
  if (alpha == beta) return std::abs(a - b) / alpha;
  const double tstar = std::log(a / b) / (alpha - beta);
  const double full = std::abs(a / alpha - b / beta);
  if (tstar <= 0.0) return full;  // one sign for all t > 0
  const double ea = std::exp(-alpha * tstar), eb = std::exp(-beta * tstar);
  const double head = std::abs(a / alpha * (1.0 - ea) - b / beta * (1.0 - eb));
  const double tail = std::abs(a / alpha * ea - b / beta * eb);
  return head + tail;
}

Eigen::MatrixXd pairwise_chain_costs(const CTMixture& A, const CTMixture& B) {
  const int L = A.L();
  Eigen::MatrixXd cost(L, L);
  for (int i = 0; i < L; ++i)
    for (int j = 0; j < L; ++j) cost(i, j) = recovery_error(A.chains[i], B.chains[j]);
  return cost;
}

double exhaustive_assignment(const Eigen::MatrixXd& cost, std::vector<int>* match) {
  const int L = static_cast<int>(cost.rows());
  std::vector<int> perm(L);
  std::iota(perm.begin(), perm.end(), 0);
  double best = std::numeric_limits<double>::infinity();
  std::vector<int> best_perm = perm;
  do {
    double c = 0.0;
    for (int i = 0; i < L; ++i) c += cost(i, perm[i]);
    if (c < best) {
      best = c;
      best_perm = perm;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  if (match) *match = best_perm;
  return best;
}

// Hungarian algorithm with potentials, O(n^3).
double hungarian(const Eigen::MatrixXd& cost, std::vector<int>* match) {
  const int n = static_cast<int>(cost.rows());
  const double inf = std::numeric_limits<double>::infinity();
  std::vector<double> u(n + 1, 0.0), v(n + 1, 0.0);
  std::vector<int> p(n + 1, 0), way(n + 1, 0);
  for (int i = 1; i <= n; ++i) {
    p[0] = i;
    int j0 = 0;
    std::vector<double> minv(n + 1, inf);
    std::vector<char> used(n + 1, 0);
    do {
      used[j0] = 1;
      const int i0 = p[j0];
      double delta = inf;
      int j1 = 0;
      for (int j = 1; j <= n; ++j) {
        if (used[j]) continue;
        const double cur = cost(i0 - 1, j - 1) - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (int j = 0; j <= n; ++j) {
        if (used[j]) {
          u[p[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (p[j0] != 0);
    do {
      const int j1 = way[j0];
      p[j0] = p[j1];
      j0 = j1;
    } while (j0);
  }
  double total = 0.0;
  std::vector<int> result(n, -1);
  for (int j = 1; j <= n; ++j) {
    if (p[j] > 0) {
      result[p[j] - 1] = j - 1;
      total += cost(p[j] - 1, j - 1);
    }
  }
  if (match) *match = result;
  return total;
}

}  // namespace

double tv_ctmc_rows(const Eigen::VectorXd& ky, const Eigen::VectorXd& kpy, int y) {
  require(ky.size() == kpy.size(), "rows differ in length");
  require(y >= 0 && y < ky.size(), "state index out of range");
  const double alpha = -ky[y], beta = -kpy[y];
  double off = 0.0, offp = 0.0;
  for (int z = 0; z < ky.size(); ++z) {
    if (z == y) continue;
    off += ky[z];
    offp += kpy[z];
  }
  require(!(alpha <= 0.0 && off > 0.0), "inconsistent row: zero holding rate with nonzero rates");
  require(!(beta <= 0.0 && offp > 0.0), "inconsistent row: zero holding rate with nonzero rates");
  double total = 0.0;
  for (int z = 0; z < ky.size(); ++z) {
    if (z == y) continue;
    total += abs_exp_diff_integral(ky[z], alpha, kpy[z], beta);
  }
  return 0.5 * total;
}

double recovery_error(const RateMatrix& A, const RateMatrix& B) {
  require(A.n() == B.n(), "chains differ in state count");
  double total = 0.0;
  for (int y = 0; y < A.n(); ++y) total += tv_ctmc_rows(A.K.row(y), B.K.row(y), y);
  return total / A.n();
}

double recovery_error(const CTMixture& A, const CTMixture& B) {
  require(A.L() == B.L() && A.n() == B.n(), "mixtures differ in dimensions");
  return min_cost_assignment(pairwise_chain_costs(A, B)) / A.L();
}

double clustering_error(const SoftAssignment& a, const SoftAssignment& gt) {
  require(a.r() == gt.r() && a.L() == gt.L(), "assignments differ in dimensions");
  const int L = a.L();
  // cost(l, l') = sum_x |a(x,l) - gt(x,l')|
  Eigen::MatrixXd cost(L, L);
  for (int i = 0; i < L; ++i)
    for (int j = 0; j < L; ++j)
      cost(i, j) = (a.a.col(i) - gt.a.col(j)).cwiseAbs().sum();
  return min_cost_assignment(cost) / (2.0 * a.r());
}

double min_cost_assignment(const Eigen::MatrixXd& cost, std::vector<int>* match) {
  require(cost.rows() == cost.cols(), "cost matrix must be square");
  require(cost.rows() >= 1, "empty cost matrix");
  if (cost.rows() <= 8) return exhaustive_assignment(cost, match);
  return hungarian(cost, match);
}

}  // namespace ctmcmix
