#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include <Eigen/Core>

#include "transversal/affine.hpp"
#include "transversal/manifold.hpp"
#include "transversal/measure.hpp"

namespace transversal {

/// Regular grid of candidate centers; endpoints of the box are nodes.
struct CenterGrid {
  Box box;
  std::vector<int> nodes_per_axis;

  CenterGrid(Box box_, std::vector<int> nodes_per_axis_);
  CenterGrid(Box box_, int nodes_per_axis_);

  Eigen::VectorXd spacing() const;
  double max_spacing() const { return spacing().maxCoeff(); }
  std::size_t size() const;
  /// Center with flat index `k` (last axis fastest).
  Eigen::VectorXd center(std::size_t k) const;
};

struct PlaneFit {
  AffinePlane plane;
  double residual = 0.0;            // max point-to-plane distance
  Eigen::VectorXd singular_values;  // of the centered point matrix
  int rank = 0;
};

class DegenerateClusterError : public std::runtime_error {
 public:
  DegenerateClusterError(const std::string& message, int achieved_rank)
      : std::runtime_error(message), achieved_rank_(achieved_rank) {}
  int achieved_rank() const { return achieved_rank_; }

 private:
  int achieved_rank_;
};

struct ScanReport {
  int d = 0;
  int n = 0;
  CenterGrid grid;
  MeasureParams params;
  std::vector<Eigen::VectorXd> centers;
  std::vector<MeasureEstimate> measures;
  std::vector<bool> ok;                  // false where the measure failed
  std::vector<std::size_t> exceptional;  // indices into centers
  std::vector<std::size_t> failed;       // indices into centers
  double linking_radius = 0.0;
  std::vector<std::vector<std::size_t>> clusters;  // indices into centers
  std::vector<PlaneFit> fits;                      // one per cluster

  std::vector<Eigen::VectorXd> exceptional_centers() const;
};

using Partition = std::vector<std::vector<std::size_t>>;

/// Evaluates is_exceptional at every grid center. Clusters and fits are left
/// empty. Throws NumericalFailure when more than 1% of centers fail.
ScanReport scan_centers(const ChartAtlas& atlas, const CenterGrid& grid,
                        const MeasureParams& params = {});

/// Single-linkage components: points are linked iff |p - q| <= radius.
/// Clusters are ordered by their smallest member; members ascend.
Partition cluster_candidates(const std::vector<Eigen::VectorXd>& points, double linking_radius);

/// Best-fit k-plane: base = centroid, basis = top-k right singular vectors.
PlaneFit fit_affine_plane(const std::vector<Eigen::VectorXd>& cluster, int k);

/// Clusters the exceptional centers (default radius 1.5 x max grid spacing)
/// and fits one plane of dimension n - d - 1 per cluster.
void fit_exceptional_planes(ScanReport& report, double linking_radius = 0.0);

struct ContainmentReport {
  bool pass = true;
  double tolerance = 0.0;
  std::vector<double> distances;    // per candidate, to the nearest plane
  std::vector<std::size_t> nearest; // plane index per candidate
  std::vector<std::size_t> outliers;
  double max_distance = 0.0;
};

ContainmentReport verify_containment(const std::vector<AffinePlane>& planes,
                                     const std::vector<Eigen::VectorXd>& candidates, double tol);

}  // namespace transversal
