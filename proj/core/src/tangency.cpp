#include "transversal/tangency.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <Eigen/LU>
#include <Eigen/QR>

namespace transversal {

namespace {

constexpr double kScaleFloor = std::numeric_limits<double>::min();

bool lex_less(const Eigen::VectorXd& u, const Eigen::VectorXd& v) {
  return std::lexicographical_compare(u.data(), u.data() + u.size(), v.data(), v.data() + v.size());
}

bool same_image(const Eigen::VectorXd& p, const Eigen::VectorXd& q) {
  return (p - q).norm() <= 1e-9 * (1.0 + p.norm());
}

}  // namespace

bool is_degenerate_sphere(const Eigen::Ref<const Eigen::VectorXd>& p,
                          const Eigen::Ref<const Eigen::VectorXd>& a) {
  return (p - a).norm() <= std::numeric_limits<double>::epsilon() * std::max(1.0, p.norm());
}

TangencyResidual residual_from_sample(const ChartSample& s, const Eigen::Ref<const Eigen::VectorXd>& a) {
  if (a.size() != s.point.size()) throw std::invalid_argument("residual: center has wrong dimension");
  TangencyResidual r;
  const Eigen::VectorXd diff = s.point - a;
  r.g = s.jacobian.transpose() * diff;
  r.scale = diff.norm() * s.jacobian.colwise().norm().maxCoeff() + kScaleFloor;
  return r;
}

TangencyResidual residual(const Parametrization& chart, const Eigen::Ref<const Eigen::VectorXd>& a,
                          const Eigen::Ref<const Eigen::VectorXd>& x) {
  return residual_from_sample(chart.sample(x), a);
}

bool is_sphere_transverse(const Parametrization& chart, const Eigen::Ref<const Eigen::VectorXd>& a,
                          const Eigen::Ref<const Eigen::VectorXd>& x, double tau) {
  if (!(tau > 0.0)) throw std::invalid_argument("is_sphere_transverse: tau must be positive");
  const ChartSample s = chart.sample(x);
  if (is_degenerate_sphere(s.point, a)) {
    throw DegenerateSphereError("is_sphere_transverse: center lies on the manifold");
  }
  const TangencyResidual r = residual_from_sample(s, a);
  return r.norm() > tau * r.scale;
}

bool rank_oracle(const Parametrization& chart, const Eigen::Ref<const Eigen::VectorXd>& a,
                 const Eigen::Ref<const Eigen::VectorXd>& x) {
  const ChartSample s = chart.sample(x);
  if (is_degenerate_sphere(s.point, a)) {
    throw DegenerateSphereError("rank_oracle: center lies on the manifold");
  }
  const int n = chart.n();
  const int d = chart.d();
  const Eigen::VectorXd radial = (s.point - a).normalized();
  const Eigen::MatrixXd radial_col = radial;
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(radial_col);
  const Eigen::MatrixXd q = qr.householderQ() * Eigen::MatrixXd::Identity(n, n);

  Eigen::MatrixXd stacked(n, d + n - 1);
  stacked.leftCols(d) = s.jacobian;
  stacked.rightCols(n - 1) = q.rightCols(n - 1);
  return numerical_rank(stacked, 1e-8) == n;
}

CriticalPoint newton_refine(const Parametrization& chart, const Eigen::Ref<const Eigen::VectorXd>& a,
                            const Eigen::Ref<const Eigen::VectorXd>& seed,
                            const NewtonOptions& options) {
  const Box& box = chart.domain();
  if (!box.contains(seed)) throw std::invalid_argument("newton_refine: seed outside the chart domain");
  const int d = chart.d();

  CriticalPoint cp;
  cp.x = seed;

  // Returns false when the residual cannot be evaluated at y.
  auto eval = [&](const Eigen::VectorXd& y, ChartSample& s, TangencyResidual& r) {
    try {
      s = chart.sample_unchecked(y);
    } catch (const ExprError&) {
      return false;
    }
    if (is_degenerate_sphere(s.point, a)) return false;
    r = residual_from_sample(s, a);
    return true;
  };

  ChartSample sample;
  TangencyResidual res;
  if (!eval(cp.x, sample, res)) return cp;

  auto finish = [&](bool converged) {
    cp.p = sample.point;
    cp.residual_norm = res.norm();
    cp.scale = res.scale;
    cp.converged = converged;
    return cp;
  };

  for (int it = 0; it <= options.max_iter; ++it) {
    cp.iterations = it;
    const double gnorm = res.norm();
    if (gnorm <= options.tau * res.scale) return finish(true);
    if (it == options.max_iter) break;

    const double h = 1e-6 * (1.0 + cp.x.norm());
    Eigen::MatrixXd hess(d, d);
    for (int j = 0; j < d; ++j) {
      Eigen::VectorXd xp = cp.x;
      Eigen::VectorXd xm = cp.x;
      xp[j] += h;
      xm[j] -= h;
      ChartSample sp, sm;
      TangencyResidual rp, rm;
      if (!eval(xp, sp, rp) || !eval(xm, sm, rm)) return finish(false);
      hess.col(j) = (rp.g - rm.g) / (2.0 * h);
    }
    Eigen::FullPivLU<Eigen::MatrixXd> lu(hess);
    if (lu.rank() < d) return finish(false);
    const Eigen::VectorXd step = lu.solve(-res.g);
    if (!step.allFinite()) return finish(false);

    bool accepted = false;
    double alpha = 1.0;
    for (int halving = 0; halving < 40; ++halving, alpha *= 0.5) {
      const Eigen::VectorXd trial = box.clamp(cp.x + alpha * step);
      if (trial == cp.x) break;
      ChartSample st;
      TangencyResidual rt;
      if (!eval(trial, st, rt)) continue;
      if (rt.norm() < gnorm) {
        cp.x = trial;
        sample = std::move(st);
        res = std::move(rt);
        accepted = true;
        break;
      }
    }
    if (!accepted) return finish(false);
  }
  return finish(false);
}

namespace {

template <typename Point, typename XOf, typename POf>
std::vector<Point> dedup(std::vector<Point> candidates, XOf x_of, POf p_of, bool compare_params) {
  std::stable_sort(candidates.begin(), candidates.end(), [&](const Point& u, const Point& v) {
    const double gu = p_of(u).residual_norm;
    const double gv = p_of(v).residual_norm;
    if (gu != gv) return gu < gv;
    return lex_less(x_of(u), x_of(v));
  });
  std::vector<Point> kept;
  for (auto& c : candidates) {
    bool duplicate = false;
    for (const auto& k : kept) {
      if ((compare_params && (x_of(c) - x_of(k)).norm() <= kDedupRadius) ||
          same_image(p_of(c).p, p_of(k).p)) {
        duplicate = true;
        break;
      }
    }
    if (!duplicate) kept.push_back(std::move(c));
  }
  return kept;
}

}  // namespace

CriticalPointSet find_critical_points(const Parametrization& chart,
                                      const Eigen::Ref<const Eigen::VectorXd>& a, int grid_per_axis,
                                      const NewtonOptions& options) {
  if (grid_per_axis < 2) throw std::invalid_argument("find_critical_points: grid_per_axis must be >= 2");
  const int d = chart.d();
  const Box& box = chart.domain();

  CriticalPointSet out;
  std::vector<CriticalPoint> converged;
  std::vector<int> index(d, 0);
  for (;;) {
    Eigen::VectorXd seed(d);
    for (int j = 0; j < d; ++j) {
      seed[j] = box.lo[j] + (box.hi[j] - box.lo[j]) * index[j] / (grid_per_axis - 1);
    }
    CriticalPoint cp = newton_refine(chart, a, seed, options);
    ++out.seeds;
    if (cp.converged) {
      ++out.converged_seeds;
      converged.push_back(std::move(cp));
    }
    int j = 0;
    while (j < d && ++index[j] == grid_per_axis) index[j++] = 0;
    if (j == d) break;
  }

  auto x_of = [](const CriticalPoint& c) -> const Eigen::VectorXd& { return c.x; };
  auto p_of = [](const CriticalPoint& c) -> const CriticalPoint& { return c; };
  out.points = dedup(std::move(converged), x_of, p_of, true);
  std::sort(out.points.begin(), out.points.end(),
            [](const CriticalPoint& u, const CriticalPoint& v) { return lex_less(u.x, v.x); });
  out.continuum = out.seeds > 0 && static_cast<double>(out.points.size()) >= 0.9 * out.seeds;
  return out;
}

AtlasCriticalPointSet find_critical_points(const ChartAtlas& atlas,
                                           const Eigen::Ref<const Eigen::VectorXd>& a,
                                           int grid_per_axis, const NewtonOptions& options) {
  AtlasCriticalPointSet out;
  std::vector<AtlasCriticalPoint> all;
  for (std::size_t c = 0; c < atlas.size(); ++c) {
    CriticalPointSet set = find_critical_points(atlas[c], a, grid_per_axis, options);
    out.continuum = out.continuum || set.continuum;
    out.seeds += set.seeds;
    out.converged_seeds += set.converged_seeds;
    for (auto& p : set.points) all.push_back({c, std::move(p)});
  }
  auto x_of = [](const AtlasCriticalPoint& c) -> const Eigen::VectorXd& { return c.point.x; };
  auto p_of = [](const AtlasCriticalPoint& c) -> const CriticalPoint& { return c.point; };
  out.points = dedup(std::move(all), x_of, p_of, false);
  std::sort(out.points.begin(), out.points.end(),
            [](const AtlasCriticalPoint& u, const AtlasCriticalPoint& v) {
              if (u.chart != v.chart) return u.chart < v.chart;
              return lex_less(u.point.x, v.point.x);
            });
  return out;
}

}  // namespace transversal
