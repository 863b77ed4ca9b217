#include "transversal/scan.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include <Eigen/SVD>

namespace transversal {

CenterGrid::CenterGrid(Box box_, std::vector<int> nodes_per_axis_)
    : box(std::move(box_)), nodes_per_axis(std::move(nodes_per_axis_)) {
  if (static_cast<int>(nodes_per_axis.size()) == 1 && box.dims() > 1) {
    nodes_per_axis.assign(box.dims(), nodes_per_axis.front());
  }
  if (static_cast<int>(nodes_per_axis.size()) != box.dims()) {
    throw std::invalid_argument("CenterGrid: one node count per axis expected");
  }
  for (int c : nodes_per_axis) {
    if (c < 4) throw std::invalid_argument("CenterGrid: need at least 4 centers per axis");
  }
}

CenterGrid::CenterGrid(Box box_, int nodes_per_axis_)
    : CenterGrid(std::move(box_), std::vector<int>{nodes_per_axis_}) {}

Eigen::VectorXd CenterGrid::spacing() const {
  Eigen::VectorXd s(box.dims());
  for (int j = 0; j < box.dims(); ++j) s[j] = (box.hi[j] - box.lo[j]) / (nodes_per_axis[j] - 1);
  return s;
}

std::size_t CenterGrid::size() const {
  std::size_t total = 1;
  for (int c : nodes_per_axis) total *= static_cast<std::size_t>(c);
  return total;
}

Eigen::VectorXd CenterGrid::center(std::size_t k) const {
  const int n = box.dims();
  Eigen::VectorXd a(n);
  for (int j = n - 1; j >= 0; --j) {
    const std::size_t count = static_cast<std::size_t>(nodes_per_axis[j]);
    const std::size_t i = k % count;
    k /= count;
    // Written so the middle node of a symmetric box is exactly 0.
    a[j] = box.lo[j] + (box.hi[j] - box.lo[j]) * (static_cast<double>(i) / static_cast<double>(count - 1));
  }
  return a;
}

std::vector<Eigen::VectorXd> ScanReport::exceptional_centers() const {
  std::vector<Eigen::VectorXd> out;
  out.reserve(exceptional.size());
  for (std::size_t i : exceptional) out.push_back(centers[i]);
  return out;
}

ScanReport scan_centers(const ChartAtlas& atlas, const CenterGrid& grid, const MeasureParams& params) {
  if (grid.box.dims() != atlas.n()) throw std::invalid_argument("scan_centers: box dimension must equal n");
  ScanReport report{atlas.d(), atlas.n(), grid, params, {}, {}, {}, {}, {}, 0.0, {}, {}};
  const std::vector<MeasureGrid> grids = build_measure_grids(atlas, params.nodes_per_axis);
  const std::size_t count = grid.size();
  report.centers.reserve(count);
  report.measures.reserve(count);
  report.ok.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    Eigen::VectorXd a = grid.center(k);
    MeasureEstimate total;
    total.tolerance_used = params.tau;
    for (const auto& g : grids) total += summarize(g, nontransverse_mask(g, a, params.tau), params.tau);
    bool ok = true;
    try {
      check_skipped(total);
    } catch (const NumericalFailure&) {
      ok = false;
      report.failed.push_back(k);
    }
    if (ok && is_exceptional(total, params.delta)) report.exceptional.push_back(k);
    report.centers.push_back(std::move(a));
    report.measures.push_back(total);
    report.ok.push_back(ok);
  }
  if (report.failed.size() > kMaxSkippedFraction * static_cast<double>(count)) {
    throw NumericalFailure("scan_centers: " + std::to_string(report.failed.size()) + " of " +
                           std::to_string(count) + " centers failed");
  }
  return report;
}

Partition cluster_candidates(const std::vector<Eigen::VectorXd>& points, double linking_radius) {
  if (!(linking_radius > 0.0)) throw std::invalid_argument("cluster_candidates: radius must be positive");
  const std::size_t m = points.size();
  std::vector<std::size_t> parent(m);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      if ((points[i] - points[j]).norm() <= linking_radius) {
        const std::size_t ri = find(i);
        const std::size_t rj = find(j);
        if (ri != rj) parent[std::max(ri, rj)] = std::min(ri, rj);
      }
    }
  }
  Partition clusters;
  std::vector<std::size_t> slot(m, std::numeric_limits<std::size_t>::max());
  for (std::size_t i = 0; i < m; ++i) {
    const std::size_t root = find(i);
    if (slot[root] == std::numeric_limits<std::size_t>::max()) {
      slot[root] = clusters.size();
      clusters.emplace_back();
    }
    clusters[slot[root]].push_back(i);
  }
  return clusters;
}

PlaneFit fit_affine_plane(const std::vector<Eigen::VectorXd>& cluster, int k) {
  if (k < 0) throw std::invalid_argument("fit_affine_plane: k must be >= 0");
  if (cluster.size() < static_cast<std::size_t>(k) + 1) {
    throw DegenerateClusterError("fit_affine_plane: need at least k+1 points, got " +
                                     std::to_string(cluster.size()),
                                 static_cast<int>(cluster.size()) - 1);
  }
  const Eigen::Index n = cluster.front().size();
  if (k > n) throw std::invalid_argument("fit_affine_plane: k exceeds the ambient dimension");
  const Eigen::Index m = static_cast<Eigen::Index>(cluster.size());
  Eigen::MatrixXd pts(m, n);
  for (Eigen::Index i = 0; i < m; ++i) pts.row(i) = cluster[i].transpose();
  const Eigen::VectorXd centroid = pts.colwise().mean().transpose();
  const Eigen::MatrixXd centered = pts.rowwise() - centroid.transpose();

  PlaneFit fit;
  Eigen::MatrixXd basis(n, k);
  if (centered.norm() > 0.0) {
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(centered, Eigen::ComputeFullV);
    fit.singular_values = svd.singularValues();
    const double top = fit.singular_values.size() > 0 ? fit.singular_values[0] : 0.0;
    for (Eigen::Index i = 0; i < fit.singular_values.size(); ++i) {
      if (fit.singular_values[i] > 1e-12 * top) ++fit.rank;
    }
    basis = svd.matrixV().leftCols(k);
  } else {
    fit.singular_values = Eigen::VectorXd::Zero(std::min(m, n));
  }
  if (fit.rank < k) {
    throw DegenerateClusterError("fit_affine_plane: cluster spans rank " + std::to_string(fit.rank) +
                                     " < " + std::to_string(k),
                                 fit.rank);
  }
  // Deterministic orientation: largest-magnitude entry of each direction is positive.
  for (int c = 0; c < k; ++c) {
    Eigen::Index arg = 0;
    basis.col(c).cwiseAbs().maxCoeff(&arg);
    if (basis(arg, c) < 0.0) basis.col(c) = -basis.col(c);
  }
  fit.plane = AffinePlane(centroid, basis);
  for (const auto& p : cluster) fit.residual = std::max(fit.residual, fit.plane.distance(p));
  return fit;
}

void fit_exceptional_planes(ScanReport& report, double linking_radius) {
  report.linking_radius = linking_radius > 0.0 ? linking_radius : 1.5 * report.grid.max_spacing();
  const std::vector<Eigen::VectorXd> points = report.exceptional_centers();
  report.clusters.clear();
  report.fits.clear();
  const int k = report.n - report.d - 1;
  for (auto& members : cluster_candidates(points, report.linking_radius)) {
    std::vector<Eigen::VectorXd> cluster;
    std::vector<std::size_t> indices;
    for (std::size_t i : members) {
      cluster.push_back(points[i]);
      indices.push_back(report.exceptional[i]);
    }
    report.fits.push_back(fit_affine_plane(cluster, k));
    report.clusters.push_back(std::move(indices));
  }
}

ContainmentReport verify_containment(const std::vector<AffinePlane>& planes,
                                     const std::vector<Eigen::VectorXd>& candidates, double tol) {
  ContainmentReport r;
  r.tolerance = tol;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    double best = std::numeric_limits<double>::infinity();
    std::size_t arg = 0;
    for (std::size_t p = 0; p < planes.size(); ++p) {
      const double dist = planes[p].distance(candidates[i]);
      if (dist < best) {
        best = dist;
        arg = p;
      }
    }
    r.distances.push_back(best);
    r.nearest.push_back(arg);
    r.max_distance = std::max(r.max_distance, best);
    if (!(best <= tol)) r.outliers.push_back(i);
  }
  r.pass = r.outliers.empty();
  return r;
}

}  // namespace transversal
