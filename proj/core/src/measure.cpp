#include "transversal/measure.hpp"

#include <cmath>
#include <limits>

namespace transversal {

MeasureEstimate& MeasureEstimate::operator+=(const MeasureEstimate& other) {
  value += other.value;
  total += other.total;
  nodes_hit += other.nodes_hit;
  nodes_total += other.nodes_total;
  nodes_skipped += other.nodes_skipped;
  fraction = total > 0.0 ? value / total : 0.0;
  tolerance_used = other.tolerance_used;
  return *this;
}

MeasureGrid build_measure_grid(const Parametrization& chart, int nodes_per_axis) {
  if (nodes_per_axis < 4) throw std::invalid_argument("measure: nodes_per_axis must be >= 4");
  MeasureGrid grid;
  grid.d = chart.d();
  grid.n = chart.n();
  grid.nodes_per_axis = nodes_per_axis;
  const Box& box = chart.domain();
  const Eigen::VectorXd h = (box.hi - box.lo) / nodes_per_axis;
  grid.cell_volume = h.prod();

  Eigen::Index m = 1;
  for (int j = 0; j < grid.d; ++j) m *= nodes_per_axis;
  grid.params.resize(grid.d, m);
  grid.points.setZero(grid.n, m);
  grid.jacobians.setZero(grid.n, grid.d * m);
  grid.weights.setZero(m);
  grid.max_col_norm.setZero(m);
  grid.valid.assign(static_cast<std::size_t>(m), 0);

  std::vector<int> index(grid.d, 0);
  Eigen::VectorXd x(grid.d);
  Eigen::VectorXd p(grid.n);
  Eigen::MatrixXd jac(grid.n, grid.d);
  for (Eigen::Index k = 0; k < m; ++k) {
    for (int j = 0; j < grid.d; ++j) x[j] = box.lo[j] + (index[j] + 0.5) * h[j];
    grid.params.col(k) = x;
    try {
      chart.sample_into(x, p, jac);
      grid.points.col(k) = p;
      grid.jacobians.middleCols(k * grid.d, grid.d) = jac;
      grid.weights[k] = volume_element(jac) * grid.cell_volume;
      grid.max_col_norm[k] = jac.colwise().norm().maxCoeff();
      grid.valid[k] = 1;
      grid.total += grid.weights[k];
    } catch (const ExprError&) {
      ++grid.failed;
    }
    for (int j = grid.d - 1; j >= 0; --j) {
      if (++index[j] < nodes_per_axis) break;
      index[j] = 0;
    }
  }
  return grid;
}

std::vector<MeasureGrid> build_measure_grids(const ChartAtlas& atlas, int nodes_per_axis) {
  std::vector<MeasureGrid> grids;
  grids.reserve(atlas.size());
  for (const auto& chart : atlas) grids.push_back(build_measure_grid(chart, nodes_per_axis));
  return grids;
}

NodeMask nontransverse_mask(const MeasureGrid& grid, const Eigen::Ref<const Eigen::VectorXd>& a,
                            double tau) {
  if (!(tau > 0.0)) throw std::invalid_argument("measure: tau must be positive");
  if (a.size() != grid.n) throw std::invalid_argument("measure: center has wrong dimension");
  constexpr double kFloor = std::numeric_limits<double>::min();
  constexpr double kEps = std::numeric_limits<double>::epsilon();
  const Eigen::Index m = grid.size();
  const int n = grid.n;
  const int d = grid.d;
  NodeMask mask(static_cast<std::size_t>(m), NodeState::kMiss);
  Eigen::VectorXd diff(n);
  for (Eigen::Index k = 0; k < m; ++k) {
    if (!grid.valid[k]) {
      mask[k] = NodeState::kSkipped;
      continue;
    }
    diff = grid.points.col(k) - a;
    const double radius = diff.norm();
    if (radius <= kEps * std::max(1.0, grid.points.col(k).norm())) {
      mask[k] = NodeState::kSkipped;
      continue;
    }
    const double* jac = grid.jacobians.data() + k * d * n;
    double g2 = 0.0;
    for (int j = 0; j < d; ++j) {
      double gj = 0.0;
      for (int r = 0; r < n; ++r) gj += jac[j * n + r] * diff[r];
      g2 += gj * gj;
    }
    const double scale = radius * grid.max_col_norm[k] + kFloor;
    if (std::sqrt(g2) <= tau * scale) mask[k] = NodeState::kHit;
  }
  return mask;
}

NodeMask intersect(const NodeMask& u, const NodeMask& v) {
  if (u.size() != v.size()) throw std::invalid_argument("intersect: masks differ in size");
  NodeMask out(u.size(), NodeState::kMiss);
  for (std::size_t k = 0; k < u.size(); ++k) {
    if (u[k] == NodeState::kSkipped || v[k] == NodeState::kSkipped) {
      out[k] = NodeState::kSkipped;
    } else if (u[k] == NodeState::kHit && v[k] == NodeState::kHit) {
      out[k] = NodeState::kHit;
    }
  }
  return out;
}

MeasureEstimate summarize(const MeasureGrid& grid, const NodeMask& mask, double tau) {
  if (static_cast<Eigen::Index>(mask.size()) != grid.size()) {
    throw std::invalid_argument("summarize: mask does not match grid");
  }
  MeasureEstimate e;
  e.total = grid.total;
  e.nodes_total = grid.size();
  e.tolerance_used = tau;
  for (Eigen::Index k = 0; k < grid.size(); ++k) {
    switch (mask[k]) {
      case NodeState::kHit:
        e.value += grid.weights[k];
        ++e.nodes_hit;
        break;
      case NodeState::kSkipped:
        ++e.nodes_skipped;
        break;
      case NodeState::kMiss:
        break;
    }
  }
  e.fraction = e.total > 0.0 ? e.value / e.total : 0.0;
  return e;
}

void check_skipped(const MeasureEstimate& estimate) {
  if (estimate.nodes_total > 0 &&
      estimate.nodes_skipped > kMaxSkippedFraction * static_cast<double>(estimate.nodes_total)) {
    throw NumericalFailure("measure: " + std::to_string(estimate.nodes_skipped) + " of " +
                           std::to_string(estimate.nodes_total) +
                           " quadrature nodes could not be evaluated");
  }
}

MeasureEstimate nontransverse_measure(const MeasureGrid& grid,
                                      const Eigen::Ref<const Eigen::VectorXd>& a, double tau) {
  MeasureEstimate e = summarize(grid, nontransverse_mask(grid, a, tau), tau);
  check_skipped(e);
  return e;
}

MeasureEstimate nontransverse_measure(const std::vector<MeasureGrid>& grids,
                                      const Eigen::Ref<const Eigen::VectorXd>& a, double tau) {
  MeasureEstimate total;
  total.tolerance_used = tau;
  for (const auto& grid : grids) total += summarize(grid, nontransverse_mask(grid, a, tau), tau);
  check_skipped(total);
  return total;
}

MeasureEstimate nontransverse_measure(const Parametrization& chart,
                                      const Eigen::Ref<const Eigen::VectorXd>& a,
                                      int nodes_per_axis, double tau) {
  return nontransverse_measure(build_measure_grid(chart, nodes_per_axis), a, tau);
}

MeasureEstimate nontransverse_measure(const ChartAtlas& atlas,
                                      const Eigen::Ref<const Eigen::VectorXd>& a,
                                      int nodes_per_axis, double tau) {
  return nontransverse_measure(build_measure_grids(atlas, nodes_per_axis), a, tau);
}

bool is_exceptional(const MeasureEstimate& estimate, double delta) {
  return estimate.fraction > delta;
}

bool is_exceptional(const Parametrization& chart, const Eigen::Ref<const Eigen::VectorXd>& a,
                    double delta, int nodes_per_axis, double tau) {
  return is_exceptional(nontransverse_measure(chart, a, nodes_per_axis, tau), delta);
}

bool is_exceptional(const ChartAtlas& atlas, const Eigen::Ref<const Eigen::VectorXd>& a,
                    const MeasureParams& params) {
  return is_exceptional(nontransverse_measure(atlas, a, params.nodes_per_axis, params.tau),
                        params.delta);
}

}  // namespace transversal
