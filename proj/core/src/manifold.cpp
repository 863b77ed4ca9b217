#include "transversal/manifold.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

#include <Eigen/LU>
#include <Eigen/SVD>

namespace transversal {

Box::Box(Eigen::VectorXd lo_, Eigen::VectorXd hi_) : lo(std::move(lo_)), hi(std::move(hi_)) {
  if (lo.size() != hi.size() || lo.size() == 0) {
    throw std::invalid_argument("Box: bounds must be non-empty and of equal length");
  }
  for (Eigen::Index i = 0; i < lo.size(); ++i) {
    if (!std::isfinite(lo[i]) || !std::isfinite(hi[i]) || !(lo[i] < hi[i])) {
      throw std::invalid_argument("Box: need finite lo < hi on every axis");
    }
  }
}

bool Box::contains(const Eigen::Ref<const Eigen::VectorXd>& x) const {
  if (x.size() != lo.size()) return false;
  return ((x.array() >= lo.array()) && (x.array() <= hi.array())).all();
}

Eigen::VectorXd Box::clamp(const Eigen::Ref<const Eigen::VectorXd>& x) const {
  return x.cwiseMax(lo).cwiseMin(hi);
}

double Box::volume() const { return (hi - lo).prod(); }

Parametrization::Parametrization(int d, int n, std::vector<Expression> components, Box domain)
    : d_(d), n_(n), components_(std::move(components)), domain_(std::move(domain)) {
  if (d < 1) throw std::invalid_argument("Parametrization: intrinsic dimension must be >= 1");
  if (n < d + 1) throw std::invalid_argument("Parametrization: need ambient dimension n >= d+1");
  if (static_cast<int>(components_.size()) != n) {
    throw std::invalid_argument("Parametrization: expected " + std::to_string(n) +
                                " component expressions, got " +
                                std::to_string(components_.size()));
  }
  if (domain_.dims() != d) throw std::invalid_argument("Parametrization: domain box must be d-dimensional");
  for (const auto& c : components_) {
    if (c.max_variable() > d) throw std::invalid_argument("Parametrization: component uses a variable beyond x" + std::to_string(d));
  }
}

Parametrization Parametrization::from_text(int d, const std::vector<std::string>& components,
                                           Box domain) {
  std::vector<Expression> parsed;
  parsed.reserve(components.size());
  for (const auto& text : components) parsed.push_back(Expression::parse(text, d));
  return Parametrization(d, static_cast<int>(components.size()), std::move(parsed),
                         std::move(domain));
}

void Parametrization::check_domain(const Eigen::Ref<const Eigen::VectorXd>& x) const {
  if (x.size() != d_) throw std::invalid_argument("Parametrization: point has wrong dimension");
  if (!domain_.contains(x)) throw std::out_of_range("Parametrization: point outside the chart domain");
}

Eigen::VectorXd Parametrization::evaluate(const Eigen::Ref<const Eigen::VectorXd>& x) const {
  return sample(x).point;
}

Eigen::MatrixXd Parametrization::jacobian(const Eigen::Ref<const Eigen::VectorXd>& x) const {
  return sample(x).jacobian;
}

ChartSample Parametrization::sample(const Eigen::Ref<const Eigen::VectorXd>& x) const {
  check_domain(x);
  return sample_unchecked(x);
}

ChartSample Parametrization::sample_unchecked(const Eigen::Ref<const Eigen::VectorXd>& x) const {
  ChartSample s;
  s.point.resize(n_);
  s.jacobian.resize(n_, d_);
  sample_into(x, s.point, s.jacobian);
  return s;
}

void Parametrization::sample_into(const Eigen::Ref<const Eigen::VectorXd>& x,
                                  Eigen::Ref<Eigen::VectorXd> point,
                                  Eigen::Ref<Eigen::MatrixXd> jacobian) const {
  Eigen::VectorXd row(d_);
  for (int i = 0; i < n_; ++i) {
    point[i] = components_[i].eval_dual_into(x, row);
    jacobian.row(i) = row.transpose();
  }
}

double volume_element(const Eigen::Ref<const Eigen::MatrixXd>& jacobian) {
  const Eigen::MatrixXd gram = jacobian.transpose() * jacobian;
  double det = 0.0;
  if (gram.rows() == 1) {
    det = gram(0, 0);
  } else if (gram.rows() == 2) {
    det = gram(0, 0) * gram(1, 1) - gram(0, 1) * gram(1, 0);
  } else {
    det = gram.determinant();
  }
  return std::sqrt(std::max(det, 0.0));
}

double Parametrization::volume_element(const Eigen::Ref<const Eigen::VectorXd>& x) const {
  return transversal::volume_element(jacobian(x));
}

Parametrization Parametrization::translated(const Eigen::Ref<const Eigen::VectorXd>& shift) const {
  if (shift.size() != n_) throw std::invalid_argument("Parametrization::translated: wrong shift size");
  std::vector<std::string> text;
  text.reserve(n_);
  for (int i = 0; i < n_; ++i) {
    text.push_back("(" + components_[i].print() + ") + " + format_double(shift[i]));
  }
  return from_text(d_, text, domain_);
}

ChartAtlas::ChartAtlas(std::vector<Parametrization> charts) {
  for (auto& c : charts) add(std::move(c));
}

void ChartAtlas::add(Parametrization chart) {
  if (!charts_.empty() && (chart.d() != charts_.front().d() || chart.n() != charts_.front().n())) {
    throw std::invalid_argument("ChartAtlas: all charts must share (d, n)");
  }
  charts_.push_back(std::move(chart));
}

int ChartAtlas::d() const {
  if (charts_.empty()) throw std::logic_error("ChartAtlas: empty atlas");
  return charts_.front().d();
}

int ChartAtlas::n() const {
  if (charts_.empty()) throw std::logic_error("ChartAtlas: empty atlas");
  return charts_.front().n();
}

int numerical_rank(const Eigen::Ref<const Eigen::MatrixXd>& m, double rel_threshold) {
  if (m.size() == 0) return 0;
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
  const auto& s = svd.singularValues();
  if (s.size() == 0 || s[0] == 0.0) return 0;
  int rank = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i) {
    if (s[i] > rel_threshold * s[0]) ++rank;
  }
  return rank;
}

ImmersionReport check_immersion(const Parametrization& chart, int samples, std::uint64_t seed,
                                double threshold) {
  ImmersionReport report;
  std::mt19937_64 rng(seed);
  const Box& box = chart.domain();
  Eigen::VectorXd x(chart.d());
  for (int s = 0; s < samples; ++s) {
    for (int j = 0; j < chart.d(); ++j) {
      std::uniform_real_distribution<double> u(box.lo[j], box.hi[j]);
      x[j] = u(rng);
    }
    const Eigen::MatrixXd jac = chart.jacobian(x);
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(jac);
    const auto& sv = svd.singularValues();
    const double ratio = sv[0] > 0.0 ? sv[sv.size() - 1] / sv[0] : 0.0;
    if (ratio < report.min_ratio || report.worst_point.size() == 0) {
      report.min_ratio = std::min(report.min_ratio, ratio);
      report.worst_point = x;
    }
    ++report.samples;
  }
  report.ok = report.min_ratio >= threshold;
  return report;
}

}  // namespace transversal
