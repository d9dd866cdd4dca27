#include "ctmcmix/expm.hpp"

#include <cmath>

namespace ctmcmix {

namespace {

// Degree-13 Pade coefficients and the matching scaling threshold.
constexpr double kTheta13 = 5.371920351148152;
constexpr double kPade13[] = {
    64764752532480000.0, 32382376266240000.0, 7771770303897600.0,
    1187353796428800.0,  129060195264000.0,   10559470521600.0,
    670442572800.0,      33522128640.0,       1323241920.0,
    40840800.0,          960960.0,            16380.0,
    182.0,               1.0};

Eigen::MatrixXd pade13(const Eigen::MatrixXd& A) {
  const auto n = A.rows();
  const Eigen::MatrixXd I = Eigen::MatrixXd::Identity(n, n);
  const Eigen::MatrixXd A2 = A * A;
  const Eigen::MatrixXd A4 = A2 * A2;
  const Eigen::MatrixXd A6 = A2 * A4;
  const Eigen::MatrixXd U =
      A * (A6 * (kPade13[13] * A6 + kPade13[11] * A4 + kPade13[9] * A2) +
           kPade13[7] * A6 + kPade13[5] * A4 + kPade13[3] * A2 + kPade13[1] * I);
  const Eigen::MatrixXd V =
      A6 * (kPade13[12] * A6 + kPade13[10] * A4 + kPade13[8] * A2) +
      kPade13[6] * A6 + kPade13[4] * A4 + kPade13[2] * A2 + kPade13[0] * I;
  return (V - U).partialPivLu().solve(V + U);
}

}  // namespace

Eigen::MatrixXd expm(const Eigen::MatrixXd& A) {
  require(A.rows() == A.cols(), "expm: matrix must be square");
  require(A.allFinite(), "expm: non-finite entries");
  const double norm = A.cwiseAbs().colwise().sum().maxCoeff();  // 1-norm
  int squarings = 0;
  if (norm > kTheta13)
    squarings = static_cast<int>(std::ceil(std::log2(norm / kTheta13)));
  Eigen::MatrixXd X = pade13(A / std::pow(2.0, squarings));
  for (int i = 0; i < squarings; ++i) X = X * X;
  return X;
}

DiscreteChain matrix_exponential(const RateMatrix& K, double tau) {
  require(tau >= 0.0, "matrix_exponential: tau must be nonnegative");
  Eigen::MatrixXd T = expm(K.K * tau);
  require(T.allFinite(), "matrix_exponential: numerical failure (non-finite result)");
  for (int y = 0; y < T.rows(); ++y) {
    for (int z = 0; z < T.cols(); ++z) {
      if (T(y, z) < 0.0) {
        require(T(y, z) >= -1e-12,
                "matrix_exponential: entry below clamp threshold at (" +
                    std::to_string(y) + "," + std::to_string(z) + ")");
        T(y, z) = 0.0;
      }
    }
  }
  return DiscreteChain(T, tau);
}

Eigen::MatrixXd expm_frechet(const Eigen::MatrixXd& A, const Eigen::MatrixXd& E) {
  const auto n = A.rows();
  Eigen::MatrixXd blk = Eigen::MatrixXd::Zero(2 * n, 2 * n);
  blk.topLeftCorner(n, n) = A;
  blk.topRightCorner(n, n) = E;
  blk.bottomRightCorner(n, n) = A;
  return expm(blk).topRightCorner(n, n);
}

Eigen::MatrixXd expm_adjoint_gradient(const Eigen::MatrixXd& A, const Eigen::MatrixXd& W) {
  return expm_frechet(A.transpose(), W);
}

}  // namespace ctmcmix
