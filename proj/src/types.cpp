#include "ctmcmix/types.hpp"

#include <cmath>

namespace ctmcmix {

namespace {

constexpr double kRowSumTol = 1e-12;

}  // namespace

RateMatrix::RateMatrix(Eigen::MatrixXd k) : K(std::move(k)) {
  require(K.rows() == K.cols(), "rate matrix must be square");
  require(K.allFinite(), "rate matrix has non-finite entries");
  const int n = static_cast<int>(K.rows());
  for (int y = 0; y < n; ++y) {
    double off = 0.0;
    for (int z = 0; z < n; ++z) {
      if (z == y) continue;
      require(K(y, z) >= 0.0, "negative off-diagonal rate at (" +
                                  std::to_string(y) + "," + std::to_string(z) + ")");
      off += K(y, z);
    }
    require(std::abs(K(y, y) + off) <= kRowSumTol * std::max(1.0, off),
            "rate matrix row " + std::to_string(y) + " does not sum to zero");
  }
}

CTMixture::CTMixture(std::vector<RateMatrix> ch, Eigen::MatrixXd s)
    : chains(std::move(ch)), start(std::move(s)) {
  require(!chains.empty(), "mixture needs at least one chain");
  const int nn = chains.front().n();
  for (const auto& c : chains) require(c.n() == nn, "chains differ in state count");
  require(start.rows() == static_cast<int>(chains.size()) && start.cols() == nn,
          "start matrix must be L x n");
  require((start.array() >= 0.0).all(), "starting probabilities must be nonnegative");
  require(std::abs(start.sum() - 1.0) <= 1e-12 * std::max(1.0, start.sum()),
          "starting probabilities must sum to one");
}

double CTMixture::max_rate() const {
  double r = 0.0;
  for (const auto& c : chains) r = std::max(r, c.K.diagonal().cwiseAbs().maxCoeff());
  return r;
}

double CTMixture::min_rate() const {
  double r = std::numeric_limits<double>::infinity();
  for (const auto& c : chains) r = std::min(r, c.K.diagonal().cwiseAbs().minCoeff());
  return r;
}

DiscreteChain::DiscreteChain(Eigen::MatrixXd t, double tau_) : T(std::move(t)), tau(tau_) {
  require(T.rows() == T.cols(), "transition matrix must be square");
  require(T.allFinite(), "transition matrix has non-finite entries");
  for (int y = 0; y < T.rows(); ++y) {
    for (int z = 0; z < T.cols(); ++z)
      require(T(y, z) >= 0.0 && T(y, z) <= 1.0 + 1e-12,
              "transition probability outside [0,1]");
    require(std::abs(T.row(y).sum() - 1.0) <= 1e-10,
            "transition matrix row " + std::to_string(y) + " does not sum to one");
  }
}

DTMixture::DTMixture(std::vector<Eigen::MatrixXd> t, Eigen::MatrixXd s, double tau_)
    : T(std::move(t)), start(std::move(s)), tau(tau_) {
  require(!T.empty(), "discrete mixture needs at least one chain");
  const auto n0 = T.front().rows();
  for (const auto& m : T) {
    DiscreteChain check(m, tau);  // row-stochastic validation
    require(m.rows() == n0, "chains differ in state count");
  }
  require(start.rows() == static_cast<int>(T.size()) && start.cols() == n0,
          "start matrix must be L x n");
  require((start.array() >= -1e-15).all(), "starting probabilities must be nonnegative");
}

void ContinuousTrail::validate() const {
  require(!events.empty(), "trail has no events");
  require(events.front().t == 0.0, "first event must be at t=0");
  for (std::size_t i = 1; i < events.size(); ++i) {
    require(events[i].t > events[i - 1].t, "entry times must increase strictly");
    require(events[i].state != events[i - 1].state, "consecutive states must differ");
  }
  require(horizon >= events.back().t, "horizon precedes the last event");
}

int ContinuousTrail::state_at(double t) const {
  require(!events.empty(), "trail has no events");
  // latest entry with entry_time <= t
  int lo = 0, hi = static_cast<int>(events.size()) - 1;
  while (lo < hi) {
    const int mid = (lo + hi + 1) / 2;
    if (events[mid].t <= t)
      lo = mid;
    else
      hi = mid - 1;
  }
  return events[lo].state;
}

SoftAssignment::SoftAssignment(Eigen::MatrixXd m) : a(std::move(m)) {
  require((a.array() >= 0.0).all(), "assignment weights must be nonnegative");
  for (int x = 0; x < a.rows(); ++x)
    require(std::abs(a.row(x).sum() - 1.0) <= 1e-10,
            "assignment row " + std::to_string(x) + " does not sum to one");
}

WeightedCounts::WeightedCounts(Eigen::MatrixXd c) : C(std::move(c)) {
  require(C.rows() == C.cols(), "count matrix must be square");
  require((C.array() >= 0.0).all(), "counts must be nonnegative");
}

}  // namespace ctmcmix
