#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "transversal/expr.hpp"

namespace transversal {

/// Axis-aligned box [lo, hi] in R^k with lo < hi componentwise.
struct Box {
  Eigen::VectorXd lo;
  Eigen::VectorXd hi;

  Box() = default;
  Box(Eigen::VectorXd lo_, Eigen::VectorXd hi_);

  int dims() const { return static_cast<int>(lo.size()); }
  bool contains(const Eigen::Ref<const Eigen::VectorXd>& x) const;
  Eigen::VectorXd clamp(const Eigen::Ref<const Eigen::VectorXd>& x) const;
  double volume() const;
};

/// Position and Jacobian of a chart at one parameter point.
struct ChartSample {
  Eigen::VectorXd point;     // n
  Eigen::MatrixXd jacobian;  // n x d, column j = dPhi/dx_j
};

/// Chart Phi: box in R^d -> R^n given by n component expressions.
///
/// Construction enforces 1 <= d <= n-1 (a zero-dimensional Sigma is not
/// admissible: every center would be exceptional). Full rank of the Jacobian
/// is a sampled property, see check_immersion().
class Parametrization {
 public:
  Parametrization(int d, int n, std::vector<Expression> components, Box domain);

  /// Parses component text; each expression may use x1..x<d>.
  static Parametrization from_text(int d, const std::vector<std::string>& components, Box domain);

  int d() const { return d_; }
  int n() const { return n_; }
  const Box& domain() const { return domain_; }
  const std::vector<Expression>& components() const { return components_; }

  Eigen::VectorXd evaluate(const Eigen::Ref<const Eigen::VectorXd>& x) const;
  Eigen::MatrixXd jacobian(const Eigen::Ref<const Eigen::VectorXd>& x) const;
  ChartSample sample(const Eigen::Ref<const Eigen::VectorXd>& x) const;

  /// Same as sample() without the domain check. Used by finite differences
  /// that probe a step past the boundary.
  ChartSample sample_unchecked(const Eigen::Ref<const Eigen::VectorXd>& x) const;
  void sample_into(const Eigen::Ref<const Eigen::VectorXd>& x, Eigen::Ref<Eigen::VectorXd> point,
                   Eigen::Ref<Eigen::MatrixXd> jacobian) const;

  /// sqrt(det(J^T J)), the induced d-volume density.
  double volume_element(const Eigen::Ref<const Eigen::VectorXd>& x) const;

  Parametrization translated(const Eigen::Ref<const Eigen::VectorXd>& shift) const;

 private:
  void check_domain(const Eigen::Ref<const Eigen::VectorXd>& x) const;

  int d_;
  int n_;
  std::vector<Expression> components_;
  Box domain_;
};

double volume_element(const Eigen::Ref<const Eigen::MatrixXd>& jacobian);

/// Ordered list of charts sharing (d, n).
class ChartAtlas {
 public:
  ChartAtlas() = default;
  explicit ChartAtlas(std::vector<Parametrization> charts);

  void add(Parametrization chart);

  int d() const;
  int n() const;
  bool empty() const { return charts_.empty(); }
  std::size_t size() const { return charts_.size(); }
  const Parametrization& operator[](std::size_t i) const { return charts_[i]; }
  const std::vector<Parametrization>& charts() const { return charts_; }
  auto begin() const { return charts_.begin(); }
  auto end() const { return charts_.end(); }

 private:
  std::vector<Parametrization> charts_;
};

struct ImmersionReport {
  bool ok = true;
  double min_ratio = 1.0;  // min over samples of sigma_min / sigma_max
  int samples = 0;
  Eigen::VectorXd worst_point;
};

/// Rank check at uniformly random interior points: ok iff every sample has
/// sigma_min >= threshold * sigma_max.
ImmersionReport check_immersion(const Parametrization& chart, int samples, std::uint64_t seed,
                                double threshold = 1e-8);

/// Rank by singular values with the relative threshold used throughout.
int numerical_rank(const Eigen::Ref<const Eigen::MatrixXd>& m, double rel_threshold = 1e-8);

}  // namespace transversal
