#pragma once

#include <Eigen/Dense>

#include "ctmcmix/types.hpp"

namespace ctmcmix {

/// True when the positive-entry digraph (off-diagonal) is strongly connected.
bool is_irreducible(const Eigen::MatrixXd& M);

/// Stationary distribution pi with pi T = pi. Throws for reducible chains.
Eigen::VectorXd stationary_distribution(const DiscreteChain& chain);

/// Stationary distribution pi with pi K = 0. Throws for reducible chains.
Eigen::VectorXd stationary_distribution(const RateMatrix& K);

/// Smallest integer t >= 0 with max_y TV(e_y T^t, pi) <= 1/3.
int mixing_time(const DiscreteChain& chain);

/// Smallest multiple of `resolution` with worst-case TV to stationarity
/// <= 1/3, located by doubling then bisection.
double mixing_time(const RateMatrix& K, double resolution);

/// log( s[ell][x0] * prod_i T[ell](x_i, x_{i+1}) ); -inf when any factor is 0.
double trail_log_weight(const DiscreteTrail& x, const DTMixture& mixture, int ell);

/// Ratio of the largest to the smallest holding rate across the mixture.
double condition_number(const CTMixture& M);

}  // namespace ctmcmix
