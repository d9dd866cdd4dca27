#pragma once

#include <Eigen/Dense>

#include "ctmcmix/types.hpp"

namespace ctmcmix {

/// Matrix exponential of a general square matrix, scaling-and-squaring with a
/// degree-13 Pade core.
Eigen::MatrixXd expm(const Eigen::MatrixXd& A);

/// Discretization T(tau) = exp(K tau). Entries in [-1e-12, 0) are clamped to
/// zero; anything more negative signals a numerical failure and throws.
DiscreteChain matrix_exponential(const RateMatrix& K, double tau);

/// Directional (Frechet) derivative of the matrix exponential at A in
/// direction E, via the upper-right block of exp([[A, E], [0, A]]).
Eigen::MatrixXd expm_frechet(const Eigen::MatrixXd& A, const Eigen::MatrixXd& E);

/// Gradient of W |-> <W, exp(A)> with respect to A, i.e. the adjoint Frechet
/// derivative L(A^T)[W].
Eigen::MatrixXd expm_adjoint_gradient(const Eigen::MatrixXd& A, const Eigen::MatrixXd& W);

}  // namespace ctmcmix
