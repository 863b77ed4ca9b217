#pragma once

#include <Eigen/Core>

namespace transversal {

/// base + span(basis), basis an orthonormal n x k matrix (k may be 0).
struct AffinePlane {
  Eigen::VectorXd base;
  Eigen::MatrixXd basis;

  AffinePlane() = default;
  AffinePlane(Eigen::VectorXd base_, Eigen::MatrixXd basis_);

  int ambient_dim() const { return static_cast<int>(base.size()); }
  int dim() const { return static_cast<int>(basis.cols()); }

  double distance(const Eigen::Ref<const Eigen::VectorXd>& q) const;
  Eigen::VectorXd project(const Eigen::Ref<const Eigen::VectorXd>& q) const;
};

/// Orthonormal basis (n x (n-k)) of the orthogonal complement of the column
/// span of an orthonormal n x k frame.
Eigen::MatrixXd orthonormal_complement(const Eigen::Ref<const Eigen::MatrixXd>& frame);

/// Principal angles (radians, ascending) between the column spans of two
/// orthonormal frames; min(k1, k2) angles.
Eigen::VectorXd principal_angles(const Eigen::Ref<const Eigen::MatrixXd>& u,
                                 const Eigen::Ref<const Eigen::MatrixXd>& v);

/// Largest principal angle, 0 when either frame is empty.
double max_principal_angle(const Eigen::Ref<const Eigen::MatrixXd>& u,
                           const Eigen::Ref<const Eigen::MatrixXd>& v);

/// max |B^T B - I|.
double orthonormality_defect(const Eigen::Ref<const Eigen::MatrixXd>& basis);

}  // namespace transversal
