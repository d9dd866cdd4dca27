#pragma once

#include <Eigen/Dense>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace ctmcmix {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Generator of a continuous-time Markov chain. Off-diagonal entries are
/// nonnegative transition rates, each diagonal entry is the negated row sum.
struct RateMatrix {
  Eigen::MatrixXd K;

  RateMatrix() = default;
  explicit RateMatrix(Eigen::MatrixXd k);

  int n() const { return static_cast<int>(K.rows()); }
  double holding_rate(int y) const { return -K(y, y); }
  bool is_absorbing(int y) const { return -K(y, y) <= 0.0; }
};

/// Mixture of L rate matrices over a common state space, plus the joint
/// starting probabilities s[l][y] (summing to one over both indices).
struct CTMixture {
  std::vector<RateMatrix> chains;
  Eigen::MatrixXd start;  // L x n

  CTMixture() = default;
  CTMixture(std::vector<RateMatrix> ch, Eigen::MatrixXd s);

  int L() const { return static_cast<int>(chains.size()); }
  int n() const { return chains.empty() ? 0 : chains.front().n(); }
  double max_rate() const;
  double min_rate() const;
};

/// Row-stochastic transition matrix obtained by observing a CTMC at regular
/// intervals of length tau (tau is carried as metadata only).
struct DiscreteChain {
  Eigen::MatrixXd T;
  double tau = 0.0;

  DiscreteChain() = default;
  DiscreteChain(Eigen::MatrixXd t, double tau_);

  int n() const { return static_cast<int>(T.rows()); }
};

/// Discretized mixture: one transition matrix per chain plus the start matrix.
struct DTMixture {
  std::vector<Eigen::MatrixXd> T;  // L matrices, n x n
  Eigen::MatrixXd start;           // L x n
  double tau = 0.0;

  DTMixture() = default;
  DTMixture(std::vector<Eigen::MatrixXd> t, Eigen::MatrixXd s, double tau_);

  int L() const { return static_cast<int>(T.size()); }
  int n() const { return T.empty() ? 0 : static_cast<int>(T.front().rows()); }
  DiscreteChain chain(int ell) const { return DiscreteChain(T.at(ell), tau); }
};

struct Event {
  int state = 0;
  double t = 0.0;  // entry time, seconds
};

/// Jump-time record of one sampled path. `events` starts at t=0 and entry
/// times increase strictly; consecutive states differ. `true_chain` is the
/// generating chain for synthetic data (-1 when unknown) and must never be
/// read by learning code.
struct ContinuousTrail {
  std::vector<Event> events;
  int true_chain = -1;
  double horizon = 0.0;
  bool absorbed = false;

  void validate() const;
  /// State occupying time t (latest entry at or before t).
  int state_at(double t) const;
};

struct DiscreteTrail {
  std::vector<int> states;
  double tau = 0.0;

  int m() const { return static_cast<int>(states.size()); }
};

/// r x L matrix of per-trail chain responsibilities; every row sums to one.
struct SoftAssignment {
  Eigen::MatrixXd a;

  SoftAssignment() = default;
  explicit SoftAssignment(Eigen::MatrixXd m);

  int r() const { return static_cast<int>(a.rows()); }
  int L() const { return static_cast<int>(a.cols()); }
};

/// Soft transition counts for one chain: C(y,z) accumulates assignment weight
/// over observed y->z steps.
struct WeightedCounts {
  Eigen::MatrixXd C;

  WeightedCounts() = default;
  explicit WeightedCounts(Eigen::MatrixXd c);

  int n() const { return static_cast<int>(C.rows()); }
  double total() const { return C.sum(); }
};

inline void require(bool cond, const std::string& msg) {
  if (!cond) throw Error(msg);
}

}  // namespace ctmcmix
