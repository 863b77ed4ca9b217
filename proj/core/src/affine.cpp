#include "transversal/affine.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <Eigen/QR>
#include <Eigen/SVD>

namespace transversal {

AffinePlane::AffinePlane(Eigen::VectorXd base_, Eigen::MatrixXd basis_)
    : base(std::move(base_)), basis(std::move(basis_)) {
  if (basis.rows() != base.size() && basis.cols() > 0) {
    throw std::invalid_argument("AffinePlane: basis rows must match the ambient dimension");
  }
  if (basis.cols() == 0) basis.resize(base.size(), 0);
  if (orthonormality_defect(basis) > 1e-10) {
    throw std::invalid_argument("AffinePlane: basis is not orthonormal");
  }
}

Eigen::VectorXd AffinePlane::project(const Eigen::Ref<const Eigen::VectorXd>& q) const {
  const Eigen::VectorXd rel = q - base;
  return base + basis * (basis.transpose() * rel);
}

double AffinePlane::distance(const Eigen::Ref<const Eigen::VectorXd>& q) const {
  const Eigen::VectorXd rel = q - base;
  return (rel - basis * (basis.transpose() * rel)).norm();
}

Eigen::MatrixXd orthonormal_complement(const Eigen::Ref<const Eigen::MatrixXd>& frame) {
  const Eigen::Index n = frame.rows();
  const Eigen::Index k = frame.cols();
  if (k == 0) return Eigen::MatrixXd::Identity(n, n);
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(frame);
  const Eigen::MatrixXd q = qr.householderQ() * Eigen::MatrixXd::Identity(n, n);
  return q.rightCols(n - k);
}

Eigen::VectorXd principal_angles(const Eigen::Ref<const Eigen::MatrixXd>& u,
                                 const Eigen::Ref<const Eigen::MatrixXd>& v) {
  if (u.rows() != v.rows()) throw std::invalid_argument("principal_angles: dimension mismatch");
  const Eigen::Index k = std::min(u.cols(), v.cols());
  if (k == 0) return Eigen::VectorXd(0);
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(u.transpose() * v);
  Eigen::VectorXd angles(k);
  for (Eigen::Index i = 0; i < k; ++i) {
    angles[i] = std::acos(std::clamp(svd.singularValues()[i], -1.0, 1.0));
  }
  return angles;
}

double max_principal_angle(const Eigen::Ref<const Eigen::MatrixXd>& u,
                           const Eigen::Ref<const Eigen::MatrixXd>& v) {
  const Eigen::VectorXd angles = principal_angles(u, v);
  return angles.size() == 0 ? 0.0 : angles.maxCoeff();
}

double orthonormality_defect(const Eigen::Ref<const Eigen::MatrixXd>& basis) {
  if (basis.cols() == 0) return 0.0;
  const Eigen::MatrixXd gram = basis.transpose() * basis;
  return (gram - Eigen::MatrixXd::Identity(gram.rows(), gram.cols())).cwiseAbs().maxCoeff();
}

}  // namespace transversal
