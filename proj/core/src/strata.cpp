#include "transversal/strata.hpp"

#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

#include <Eigen/QR>

namespace transversal {

namespace {

Eigen::MatrixXd gaussian_matrix(std::mt19937_64& rng, int rows, int cols) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Eigen::MatrixXd m(rows, cols);
  for (int c = 0; c < cols; ++c) {
    for (int r = 0; r < rows; ++r) m(r, c) = normal(rng);
  }
  return m;
}

// Thin Q with diag(R) > 0; nullopt when the columns are numerically dependent.
std::optional<Eigen::MatrixXd> orthonormalize(const Eigen::Ref<const Eigen::MatrixXd>& m) {
  const Eigen::Index n = m.rows();
  const Eigen::Index k = m.cols();
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(m);
  const Eigen::MatrixXd r = qr.matrixQR().topRows(k).triangularView<Eigen::Upper>();
  const double scale = m.cwiseAbs().maxCoeff();
  Eigen::MatrixXd q = qr.householderQ() * Eigen::MatrixXd::Identity(n, k);
  for (Eigen::Index j = 0; j < k; ++j) {
    if (!(std::abs(r(j, j)) > 1e-10 * scale)) return std::nullopt;
    if (r(j, j) < 0.0) q.col(j) = -q.col(j);
  }
  return q;
}

}  // namespace

GrassmannPlane::GrassmannPlane(Eigen::MatrixXd frame_) : frame(std::move(frame_)) {
  if (orthonormality_defect(frame) > 1e-10) {
    throw std::invalid_argument("GrassmannPlane: frame is not orthonormal");
  }
}

GrassmannPlane GrassmannPlane::span(const Eigen::Ref<const Eigen::MatrixXd>& spanning) {
  auto q = orthonormalize(spanning);
  if (!q) throw std::invalid_argument("GrassmannPlane::span: columns are linearly dependent");
  return GrassmannPlane(std::move(*q));
}

GrassmannPlane random_grassmann(int n, int i, std::uint64_t seed) {
  if (n < 1 || i < 1 || i > n) throw std::invalid_argument("random_grassmann: need 1 <= i <= n");
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt <= 10; ++attempt) {
    if (auto q = orthonormalize(gaussian_matrix(rng, n, i))) return GrassmannPlane(std::move(*q));
  }
  throw std::runtime_error("random_grassmann: rank-deficient draws after 10 retries");
}

AffinePlane normal_affine_plane(const Eigen::Ref<const Eigen::VectorXd>& a, const GrassmannPlane& p) {
  if (a.size() != p.ambient_dim()) throw std::invalid_argument("normal_affine_plane: dimension mismatch");
  return AffinePlane(a, orthonormal_complement(p.frame));
}

NodeMask span_mask(const MeasureGrid& grid, const GrassmannPlane& p, double tau) {
  if (p.ambient_dim() != grid.n) throw std::invalid_argument("span_mask: plane lives in the wrong space");
  const Eigen::MatrixXd& f = p.frame;
  NodeMask mask(static_cast<std::size_t>(grid.size()), NodeState::kMiss);
  Eigen::MatrixXd defect(grid.n, grid.d);
  for (Eigen::Index k = 0; k < grid.size(); ++k) {
    if (!grid.valid[k]) {
      mask[k] = NodeState::kSkipped;
      continue;
    }
    const auto jac = grid.jacobian(k);
    defect.noalias() = jac - f * (f.transpose() * jac);
    if (defect.norm() <= tau * jac.norm()) mask[k] = NodeState::kHit;
  }
  return mask;
}

MeasureEstimate exceptional_param_set(const MeasureGrid& grid,
                                      const Eigen::Ref<const Eigen::VectorXd>& a,
                                      const GrassmannPlane& p, double tau) {
  MeasureEstimate e =
      summarize(grid, intersect(nontransverse_mask(grid, a, tau), span_mask(grid, p, tau)), tau);
  check_skipped(e);
  return e;
}

MeasureEstimate exceptional_param_set(const std::vector<MeasureGrid>& grids,
                                      const Eigen::Ref<const Eigen::VectorXd>& a,
                                      const GrassmannPlane& p, double tau) {
  MeasureEstimate total;
  total.tolerance_used = tau;
  for (const auto& grid : grids) {
    total += summarize(grid, intersect(nontransverse_mask(grid, a, tau), span_mask(grid, p, tau)), tau);
  }
  check_skipped(total);
  return total;
}

MeasureEstimate exceptional_param_set(const Parametrization& chart,
                                      const Eigen::Ref<const Eigen::VectorXd>& a,
                                      const GrassmannPlane& p, int nodes_per_axis, double tau) {
  return exceptional_param_set(build_measure_grid(chart, nodes_per_axis), a, p, tau);
}

StratumSample make_stratum_sample(const std::vector<MeasureGrid>& grids,
                                  const Eigen::Ref<const Eigen::VectorXd>& a,
                                  const GrassmannPlane& p, double tau) {
  return StratumSample{a, p, exceptional_param_set(grids, a, p, tau)};
}

MeasureEstimate pairwise_E_overlap(const std::vector<MeasureGrid>& grids, const StratumSample& first,
                                   const StratumSample& second, double tau) {
  MeasureEstimate total;
  total.tolerance_used = tau;
  for (const auto& grid : grids) {
    const NodeMask e1 = intersect(nontransverse_mask(grid, first.a, tau), span_mask(grid, first.plane, tau));
    const NodeMask e2 = intersect(nontransverse_mask(grid, second.a, tau), span_mask(grid, second.plane, tau));
    total += summarize(grid, intersect(e1, e2), tau);
  }
  check_skipped(total);
  return total;
}

NormalPlaneIntersection intersect_normal_planes(const Eigen::Ref<const Eigen::VectorXd>& a,
                                                const Eigen::Ref<const Eigen::VectorXd>& a_hat,
                                                const GrassmannPlane& p) {
  if (a.size() != p.ambient_dim() || a_hat.size() != p.ambient_dim()) {
    throw std::invalid_argument("intersect_normal_planes: dimension mismatch");
  }
  const Eigen::VectorXd delta = a - a_hat;
  const double len = delta.norm();
  if (len == 0.0) throw std::invalid_argument("intersect_normal_planes: centers must differ");
  return (p.frame.transpose() * delta).norm() <= 1e-10 * len ? NormalPlaneIntersection::kEqual
                                                             : NormalPlaneIntersection::kEmpty;
}

Box sample_bounding_box(const std::vector<MeasureGrid>& grids, double pad) {
  if (grids.empty()) throw std::invalid_argument("sample_bounding_box: no grids");
  const int n = grids.front().n;
  Eigen::VectorXd lo = Eigen::VectorXd::Constant(n, std::numeric_limits<double>::infinity());
  Eigen::VectorXd hi = -lo;
  for (const auto& g : grids) {
    for (Eigen::Index k = 0; k < g.size(); ++k) {
      if (!g.valid[k]) continue;
      lo = lo.cwiseMin(g.points.col(k));
      hi = hi.cwiseMax(g.points.col(k));
    }
  }
  if (!lo.allFinite()) throw std::invalid_argument("sample_bounding_box: no valid samples");
  const double margin = std::max(pad * (hi - lo).norm(), 1e-3);
  return Box((lo.array() - margin).matrix(), (hi.array() + margin).matrix());
}

Claim1Report claim1_diagnostic(const ChartAtlas& atlas, const Claim1Options& options) {
  if (options.trials < 1) throw std::invalid_argument("claim1_diagnostic: trials must be >= 1");
  const std::vector<MeasureGrid> grids = build_measure_grids(atlas, options.nodes_per_axis);

  Claim1Report report;
  report.d = atlas.d();
  report.n = atlas.n();
  report.trials = options.trials;
  report.seed = options.seed;
  report.center_box = options.center_box ? *options.center_box : sample_bounding_box(grids, 1.0);
  report.hits_per_dimension.assign(report.d, 0);

  std::mt19937_64 rng(options.seed);
  const Box& box = report.center_box;
  for (int i = 1; i <= report.d; ++i) {
    for (int t = 0; t < options.trials; ++t) {
      Eigen::VectorXd a(report.n);
      for (int j = 0; j < report.n; ++j) {
        std::uniform_real_distribution<double> u(box.lo[j], box.hi[j]);
        a[j] = u(rng);
      }
      const GrassmannPlane plane = random_grassmann(report.n, i, rng());
      MeasureEstimate e;
      e.tolerance_used = options.tau;
      for (const auto& grid : grids) {
        e += summarize(grid,
                       intersect(nontransverse_mask(grid, a, options.tau), span_mask(grid, plane, options.tau)),
                       options.tau);
      }
      report.hits_per_dimension[i - 1] += e.nodes_hit;
      if (e.nodes_hit > 0) report.violations.push_back({i, t, a, plane, e});
    }
  }
  return report;
}

DichotomyReport normal_plane_dichotomy_battery(int n, int instances, int reframes,
                                               std::uint64_t seed) {
  if (n < 2) throw std::invalid_argument("dichotomy battery: need n >= 2");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  std::uniform_int_distribution<int> dim(1, n - 1);
  auto gaussian = [&](int size) {
    Eigen::VectorXd v(size);
    for (int j = 0; j < size; ++j) v[j] = normal(rng);
    return v;
  };

  DichotomyReport report;
  for (int t = 0; t < instances + reframes; ++t) {
    const int i = dim(rng);
    const GrassmannPlane p = random_grassmann(n, i, rng());
    const Eigen::VectorXd a = gaussian(n);
    const bool perpendicular = (t % 2) == 0;
    Eigen::VectorXd offset;
    if (perpendicular) {
      offset = gaussian(n);
      offset -= p.frame * (p.frame.transpose() * offset);
    } else {
      offset = p.frame * gaussian(i);
      if ((t / 2) % 2 == 1) {
        Eigen::VectorXd w = gaussian(n);
        offset += w - p.frame * (p.frame.transpose() * w);
      }
    }
    const Eigen::VectorXd a_hat = a + offset;
    const auto expected = perpendicular ? NormalPlaneIntersection::kEqual : NormalPlaneIntersection::kEmpty;
    const auto got = intersect_normal_planes(a, a_hat, p);
    if (t < instances) {
      ++report.instances;
      if (got == expected) ++report.correct;
      if (intersect_normal_planes(a_hat, a, p) == got) ++report.symmetric;
    } else {
      ++report.reframed;
      auto rotation = orthonormalize(gaussian_matrix(rng, i, i));
      if (!rotation) continue;
      const GrassmannPlane reframed(p.frame * *rotation);
      if (intersect_normal_planes(a, a_hat, reframed) == got && got == expected) {
        ++report.reframe_consistent;
      }
    }
  }
  return report;
}

}  // namespace transversal
