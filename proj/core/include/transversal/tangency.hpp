#pragma once

// The sphere centred at a through p = Phi(x) fails to be transverse to Sigma at
// p exactly when p - a is normal to T_p Sigma, i.e. when
//
//   g(a, x) = J(x)^T (Phi(x) - a) = 0,
//
// the gradient of 1/2 |Phi(x) - a|^2. This module evaluates g, tests it against
// a scale-aware threshold, cross-checks with a rank computation, and locates
// zeros of g by damped Newton.

#include <stdexcept>
#include <vector>

#include <Eigen/Core>

#include "transversal/manifold.hpp"

namespace transversal {

inline constexpr double kDefaultTau = 1e-7;
inline constexpr double kDefaultNewtonTau = 1e-10;
inline constexpr int kDefaultNewtonIterations = 50;
inline constexpr double kDedupRadius = 1e-6;

/// Thrown when the sphere radius |Phi(x) - a| is at rounding level.
class DegenerateSphereError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

struct TangencyResidual {
  Eigen::VectorXd g;  // d
  double scale = 0.0;  // |Phi(x) - a| * max_j |d_j Phi(x)| + DBL_MIN

  double norm() const { return g.norm(); }
};

/// True iff |p - a| is at rounding level relative to |p|.
bool is_degenerate_sphere(const Eigen::Ref<const Eigen::VectorXd>& p,
                          const Eigen::Ref<const Eigen::VectorXd>& a);

/// Residual from an already evaluated chart sample.
TangencyResidual residual_from_sample(const ChartSample& s, const Eigen::Ref<const Eigen::VectorXd>& a);

TangencyResidual residual(const Parametrization& chart, const Eigen::Ref<const Eigen::VectorXd>& a,
                          const Eigen::Ref<const Eigen::VectorXd>& x);

/// True iff |g| > tau * scale. Throws DegenerateSphereError when Phi(x) ~ a.
bool is_sphere_transverse(const Parametrization& chart, const Eigen::Ref<const Eigen::VectorXd>& a,
                          const Eigen::Ref<const Eigen::VectorXd>& x, double tau = kDefaultTau);

/// Independent transversality test: rank [J | B] == n where B is an
/// orthonormal basis of (Phi(x) - a)^perp, the tangent space of the sphere.
bool rank_oracle(const Parametrization& chart, const Eigen::Ref<const Eigen::VectorXd>& a,
                 const Eigen::Ref<const Eigen::VectorXd>& x);

struct CriticalPoint {
  Eigen::VectorXd x;
  Eigen::VectorXd p;
  double residual_norm = 0.0;
  double scale = 0.0;
  int iterations = 0;
  bool converged = false;
};

struct NewtonOptions {
  int max_iter = kDefaultNewtonIterations;
  double tau = kDefaultNewtonTau;
};

/// Damped Newton on g(., a) from `seed`. The d x d Jacobian of g comes from
/// central differences of the AD residual with step 1e-6 (1 + |x|). Steps that
/// leave the domain are projected back onto it; a step is halved until |g|
/// decreases. Singular systems and stalls end with converged = false.
CriticalPoint newton_refine(const Parametrization& chart, const Eigen::Ref<const Eigen::VectorXd>& a,
                            const Eigen::Ref<const Eigen::VectorXd>& seed,
                            const NewtonOptions& options = {});

struct CriticalPointSet {
  std::vector<CriticalPoint> points;  // converged, deduplicated, sorted by x
  int seeds = 0;
  int converged_seeds = 0;
  // Dedup kept at least 0.9 x seeds distinct points: g vanishes on an open set.
  bool continuum = false;
};

/// Seeds Newton from a grid_per_axis^d grid spanning the domain (endpoints
/// included), keeps converged runs and merges runs within kDedupRadius in
/// parameter space or with coincident images.
CriticalPointSet find_critical_points(const Parametrization& chart,
                                      const Eigen::Ref<const Eigen::VectorXd>& a, int grid_per_axis,
                                      const NewtonOptions& options = {});

/// Per-chart search over an atlas; points with coincident images (shared
/// chart boundaries) are merged. Points keep their chart index.
struct AtlasCriticalPoint {
  std::size_t chart = 0;
  CriticalPoint point;
};

struct AtlasCriticalPointSet {
  std::vector<AtlasCriticalPoint> points;
  int seeds = 0;
  int converged_seeds = 0;
  bool continuum = false;  // some chart's set is a continuum
};

AtlasCriticalPointSet find_critical_points(const ChartAtlas& atlas,
                                           const Eigen::Ref<const Eigen::VectorXd>& a,
                                           int grid_per_axis, const NewtonOptions& options = {});

}  // namespace transversal
