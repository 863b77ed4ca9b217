#pragma once

// Finite-instance machinery for the stratification of exceptional centers by
// Grassmannian dimension:
//
//   E(a, P) = { x : columns of J(x) lie in P and g(a, x) = 0 },
//   N(a, P) = a + P^perp,
//
// for P an i-dimensional linear subspace of R^n.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "transversal/affine.hpp"
#include "transversal/manifold.hpp"
#include "transversal/measure.hpp"

namespace transversal {

struct GrassmannPlane {
  Eigen::MatrixXd frame;  // n x i, orthonormal columns

  GrassmannPlane() = default;
  explicit GrassmannPlane(Eigen::MatrixXd frame_);

  /// Orthonormalizes the columns of `spanning` (which must have full column rank).
  static GrassmannPlane span(const Eigen::Ref<const Eigen::MatrixXd>& spanning);

  int ambient_dim() const { return static_cast<int>(frame.rows()); }
  int dim() const { return static_cast<int>(frame.cols()); }
  Eigen::MatrixXd projector() const { return frame * frame.transpose(); }
};

/// Frame from the QR factorization of an n x i standard Gaussian matrix, with
/// column signs fixed by diag(R) > 0 so the law is rotation invariant.
/// Deterministic per seed; redraws on rank deficiency (at most 10 times).
GrassmannPlane random_grassmann(int n, int i, std::uint64_t seed);

/// a + P^perp, an (n - i)-dimensional affine plane.
AffinePlane normal_affine_plane(const Eigen::Ref<const Eigen::VectorXd>& a, const GrassmannPlane& p);

/// Node mask of { x : |(I - F F^T) J(x)|_F <= tau |J(x)|_F }.
NodeMask span_mask(const MeasureGrid& grid, const GrassmannPlane& p, double tau);

/// Indicator-quadrature measure of E(a, P) on one chart grid.
MeasureEstimate exceptional_param_set(const MeasureGrid& grid,
                                      const Eigen::Ref<const Eigen::VectorXd>& a,
                                      const GrassmannPlane& p, double tau);
MeasureEstimate exceptional_param_set(const std::vector<MeasureGrid>& grids,
                                      const Eigen::Ref<const Eigen::VectorXd>& a,
                                      const GrassmannPlane& p, double tau);
MeasureEstimate exceptional_param_set(const Parametrization& chart,
                                      const Eigen::Ref<const Eigen::VectorXd>& a,
                                      const GrassmannPlane& p, int nodes_per_axis,
                                      double tau = kDefaultTau);

struct StratumSample {
  Eigen::VectorXd a;
  GrassmannPlane plane;
  MeasureEstimate e_measure;
};

StratumSample make_stratum_sample(const std::vector<MeasureGrid>& grids,
                                  const Eigen::Ref<const Eigen::VectorXd>& a,
                                  const GrassmannPlane& p, double tau);

/// Measure of E(a, P) intersected with E(a', P'), node by node.
MeasureEstimate pairwise_E_overlap(const std::vector<MeasureGrid>& grids, const StratumSample& first,
                                   const StratumSample& second, double tau);

enum class NormalPlaneIntersection { kEqual, kEmpty };

/// N(a, P) and N(a_hat, P) coincide iff a - a_hat is perpendicular to P and
/// are disjoint otherwise. Decided by |F^T (a - a_hat)| <= 1e-10 |a - a_hat|.
NormalPlaneIntersection intersect_normal_planes(const Eigen::Ref<const Eigen::VectorXd>& a,
                                                const Eigen::Ref<const Eigen::VectorXd>& a_hat,
                                                const GrassmannPlane& p);

struct Claim1Violation {
  int i = 0;
  int trial = 0;
  Eigen::VectorXd a;
  GrassmannPlane plane;
  MeasureEstimate e_measure;
};

struct Claim1Report {
  int d = 0;
  int n = 0;
  int trials = 0;
  std::uint64_t seed = 0;
  Box center_box;
  std::vector<std::int64_t> hits_per_dimension;  // index i-1
  std::vector<Claim1Violation> violations;

  bool pass() const { return violations.empty(); }
};

struct Claim1Options {
  int trials = 100;
  std::uint64_t seed = 0;
  int nodes_per_axis = kDefaultMeasureNodes;
  double tau = kDefaultTau;
  std::optional<Box> center_box;  // default: bounding box of Sigma padded by its diameter
};

/// For each i in 1..d draws `trials` pairs (a, P), a uniform in the center box
/// and P from random_grassmann, and records every pair whose E(a, P) contains
/// a quadrature node.
Claim1Report claim1_diagnostic(const ChartAtlas& atlas, const Claim1Options& options = {});

/// Axis-aligned bounding box of the grid samples, padded by `pad` times the
/// diagonal on every side.
Box sample_bounding_box(const std::vector<MeasureGrid>& grids, double pad);

struct DichotomyReport {
  int instances = 0;
  int correct = 0;
  int reframed = 0;
  int reframe_consistent = 0;
  int symmetric = 0;

  bool pass() const {
    return correct == instances && reframe_consistent == reframed && symmetric == instances;
  }
};

/// Randomized battery: half the instances put a_hat - a in P^perp (expect
/// kEqual), half give it a nonzero P component (expect kEmpty). `reframes`
/// further instances re-run the decision with P's frame rotated inside P.
DichotomyReport normal_plane_dichotomy_battery(int n, int instances, int reframes,
                                               std::uint64_t seed);

}  // namespace transversal
