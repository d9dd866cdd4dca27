#pragma once

#include <Eigen/Dense>
#include <vector>

#include "ctmcmix/types.hpp"

namespace ctmcmix {

/// Total variation distance between the next-(state,time) distributions of
/// two rate-matrix rows for the same state y, in closed form. Rows are full
/// length-n rows (diagonal included at index y).
double tv_ctmc_rows(const Eigen::VectorXd& ky, const Eigen::VectorXd& kpy, int y);

/// Average per-state TV distance between two single chains.
double recovery_error(const RateMatrix& A, const RateMatrix& B);

/// Minimum-assignment recovery error between two mixtures.
double recovery_error(const CTMixture& A, const CTMixture& B);

/// Minimum-permutation L1 distance between soft assignments, normalized by 2r.
double clustering_error(const SoftAssignment& a, const SoftAssignment& gt);

/// Minimum-cost perfect matching on a square cost matrix. Exhaustive for
/// sizes up to 8, Hungarian algorithm beyond. Returns the cost; `match[i]`
/// receives the column assigned to row i when non-null.
double min_cost_assignment(const Eigen::MatrixXd& cost, std::vector<int>* match = nullptr);

}  // namespace ctmcmix
