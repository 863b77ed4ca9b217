#include "transversal/examples.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <stdexcept>

namespace transversal {

namespace {

constexpr double kPi = std::numbers::pi;

// Text of c0 + sum_k coeff[k] * body[k], dropping zero terms.
std::string linear_text(double constant, const std::vector<std::pair<double, std::string>>& terms) {
  std::string out;
  if (constant != 0.0) out = format_double(constant);
  for (const auto& [coeff, body] : terms) {
    if (coeff == 0.0) continue;
    const std::string factor = std::abs(coeff) == 1.0 ? body : format_double(std::abs(coeff)) + "*" + body;
    if (out.empty()) {
      out = coeff < 0.0 ? "-" + factor : factor;
    } else {
      out += coeff < 0.0 ? " - " : " + ";
      out += factor;
    }
  }
  return out.empty() ? "0" : out;
}

Box interval(double lo, double hi) {
  return Box(Eigen::VectorXd::Constant(1, lo), Eigen::VectorXd::Constant(1, hi));
}

Eigen::VectorXd component_center(const ExampleSpec& spec, int i) {
  Eigen::VectorXd c = Eigen::VectorXd::Zero(spec.n);
  c[0] = i * spec.spacing;
  return c;
}

// ----- Sigma2 polygonal skeleton -----

struct Piece {
  bool arc = true;
  // Arc: travels from theta_from to theta_to around (cx, cy).
  double cx = 0.0, cy = 0.0, r = 0.0, theta_from = 0.0, theta_to = 0.0;
  // Segment: travels from a to b.
  Eigen::Vector2d a, b;

  Eigen::Vector2d arc_point(double t) const { return {cx + r * std::cos(t), cy + r * std::sin(t)}; }
  double direction() const { return theta_to > theta_from ? 1.0 : -1.0; }

  Eigen::Vector2d start() const { return arc ? arc_point(theta_from) : a; }
  Eigen::Vector2d end() const { return arc ? arc_point(theta_to) : b; }
};

Piece make_arc(double cx, double r, double from, double to) {
  Piece p;
  p.arc = true;
  p.cx = cx;
  p.r = r;
  p.theta_from = from;
  p.theta_to = to;
  return p;
}

Piece make_segment(const Eigen::Vector2d& a, const Eigen::Vector2d& b) {
  Piece p;
  p.arc = false;
  p.a = a;
  p.b = b;
  return p;
}

// Trimmed piece geometry: start/end points and unit travel tangents.
struct Trimmed {
  Piece piece;
  Eigen::Vector2d start, end, start_tangent, end_tangent;
};

Trimmed trim(const Piece& p, double rho) {
  Trimmed t{p, {}, {}, {}, {}};
  if (p.arc) {
    const double phi = rho / p.r;
    const double s = p.direction();
    t.piece.theta_from = p.theta_from + s * phi;
    t.piece.theta_to = p.theta_to - s * phi;
    auto tangent = [&](double th) { return Eigen::Vector2d(-s * std::sin(th), s * std::cos(th)); };
    t.start = t.piece.arc_point(t.piece.theta_from);
    t.end = t.piece.arc_point(t.piece.theta_to);
    t.start_tangent = tangent(t.piece.theta_from);
    t.end_tangent = tangent(t.piece.theta_to);
  } else {
    const Eigen::Vector2d u = (p.b - p.a).normalized();
    t.piece.a = p.a + rho * u;
    t.piece.b = p.b - rho * u;
    t.start = t.piece.a;
    t.end = t.piece.b;
    t.start_tangent = u;
    t.end_tangent = u;
  }
  return t;
}

std::vector<Piece> sigma2_pieces(const ExampleSpec& spec, double r) {
  const double cut = 2.0 * spec.eps;
  const int c = spec.count;
  std::vector<Piece> pieces;
  // Upper arcs left to right, joined by the upper neck segments.
  for (int i = 0; i < c; ++i) {
    const double cx = i * spec.spacing;
    pieces.push_back(make_arc(cx, r, kPi - cut, cut));
    if (i + 1 < c) {
      const Piece next = make_arc((i + 1) * spec.spacing, r, kPi - cut, cut);
      pieces.push_back(make_segment(pieces.back().end(), next.start()));
    }
  }
  // Right cap closes the last circle's gap at theta = 0.
  const Piece last_lower = make_arc((c - 1) * spec.spacing, r, 2.0 * kPi - cut, kPi + cut);
  pieces.push_back(make_segment(pieces.back().end(), last_lower.start()));
  // Lower arcs right to left, joined by the lower neck segments.
  for (int i = c - 1; i >= 0; --i) {
    const double cx = i * spec.spacing;
    pieces.push_back(make_arc(cx, r, 2.0 * kPi - cut, kPi + cut));
    if (i > 0) {
      const Piece next = make_arc((i - 1) * spec.spacing, r, 2.0 * kPi - cut, kPi + cut);
      pieces.push_back(make_segment(pieces.back().end(), next.start()));
    }
  }
  // Left cap closes circle 0's gap at theta = pi.
  pieces.push_back(make_segment(pieces.back().end(), pieces.front().start()));
  return pieces;
}

std::vector<std::string> planar_components(const std::string& x, const std::string& y, int n) {
  std::vector<std::string> out{x, y};
  for (int j = 2; j < n; ++j) out.emplace_back("0");
  return out;
}

Parametrization arc_chart(const Piece& p, int n) {
  const double lo = std::min(p.theta_from, p.theta_to);
  const double hi = std::max(p.theta_from, p.theta_to);
  Eigen::VectorXd center = Eigen::VectorXd::Zero(n);
  center[0] = p.cx;
  center[1] = p.cy;
  return circle_chart(center, p.r, n, lo, hi);
}

Parametrization segment_chart(const Eigen::Vector2d& a, const Eigen::Vector2d& b, int n) {
  const Eigen::Vector2d delta = b - a;
  return Parametrization::from_text(
      1,
      planar_components(linear_text(a.x(), {{delta.x(), "x1"}}),
                        linear_text(a.y(), {{delta.y(), "x1"}}), n),
      interval(0.0, 1.0));
}

// C1 cubic Hermite from (p0, unit t0) to (p1, unit t1), tangent length |p1 - p0|.
Parametrization blend_chart(const Eigen::Vector2d& p0, const Eigen::Vector2d& t0,
                            const Eigen::Vector2d& p1, const Eigen::Vector2d& t1, int n) {
  const double len = (p1 - p0).norm();
  const Eigen::Vector2d m0 = len * t0;
  const Eigen::Vector2d m1 = len * t1;
  const Eigen::Vector2d c1 = m0;
  const Eigen::Vector2d c2 = -3.0 * p0 - 2.0 * m0 + 3.0 * p1 - m1;
  const Eigen::Vector2d c3 = 2.0 * p0 + m0 - 2.0 * p1 + m1;
  auto poly = [&](int axis) {
    return linear_text(p0[axis], {{c1[axis], "x1"}, {c2[axis], "x1^2"}, {c3[axis], "x1^3"}});
  };
  return Parametrization::from_text(1, planar_components(poly(0), poly(1), n), interval(0.0, 1.0));
}

}  // namespace

ExampleSpec ExampleSpec::single_circle(int n) {
  ExampleSpec s;
  s.kind = ExampleKind::kSingleCircle;
  s.n = n;
  s.d = 1;
  s.count = 1;
  return s;
}

ExampleSpec ExampleSpec::single_sphere(int d, int n) {
  ExampleSpec s;
  s.kind = ExampleKind::kSingleSphere;
  s.n = n;
  s.d = d;
  s.count = 1;
  return s;
}

ExampleSpec ExampleSpec::sigma0(int count, int n) {
  ExampleSpec s;
  s.kind = ExampleKind::kSigma0;
  s.n = n;
  s.d = 1;
  s.count = count;
  return s;
}

ExampleSpec ExampleSpec::sigma2(int count, double eps, int n) {
  ExampleSpec s;
  s.kind = ExampleKind::kSigma2;
  s.n = n;
  s.d = 1;
  s.count = count;
  s.eps = eps;
  return s;
}

ExampleSpec ExampleSpec::sphere_chain(int d, int n, int count) {
  ExampleSpec s;
  s.kind = ExampleKind::kSphereChain;
  s.n = n;
  s.d = d;
  s.count = count;
  return s;
}

double ExampleSpec::resolved_scale() const {
  if (scale) return *scale;
  if (kind == ExampleKind::kSphereChain) return std::pow(4.0, -n);
  return 0.25;
}

void ExampleSpec::validate() const {
  if (d < 1) throw std::invalid_argument("example: d must be >= 1");
  if (n < d + 1) throw std::invalid_argument("example: n must be >= d+1");
  if (count < 1) throw std::invalid_argument("example: count must be >= 1");
  const bool curve_kind = kind == ExampleKind::kSigma0 || kind == ExampleKind::kSigma2 ||
                          kind == ExampleKind::kSingleCircle;
  if (curve_kind && d != 1) throw std::invalid_argument("example: " + to_string(kind) + " is a curve (d = 1)");
  if ((kind == ExampleKind::kSingleCircle || kind == ExampleKind::kSingleSphere) && count != 1) {
    throw std::invalid_argument("example: single components have count = 1");
  }
  if (kind == ExampleKind::kSigma2 && !(eps > 0.0 && eps <= 0.01)) {
    throw std::invalid_argument("example: sigma2 needs 0 < eps <= 1/100");
  }
  const double r = resolved_scale();
  if (!(r > 0.0) || !std::isfinite(r)) throw std::invalid_argument("example: scale must be positive");
  if (!(spacing > 0.0)) throw std::invalid_argument("example: spacing must be positive");
  if (count > 1 && !(2.0 * r < spacing)) {
    throw std::invalid_argument("example: components overlap (need 2*scale < spacing)");
  }
}

std::string to_string(ExampleKind kind) {
  switch (kind) {
    case ExampleKind::kSigma0: return "sigma0";
    case ExampleKind::kSigma2: return "sigma2";
    case ExampleKind::kSphereChain: return "sphere-chain";
    case ExampleKind::kSingleCircle: return "circle";
    case ExampleKind::kSingleSphere: return "sphere";
  }
  return "unknown";
}

ExampleKind parse_example_kind(const std::string& name) {
  for (ExampleKind k : {ExampleKind::kSigma0, ExampleKind::kSigma2, ExampleKind::kSphereChain,
                        ExampleKind::kSingleCircle, ExampleKind::kSingleSphere}) {
    if (to_string(k) == name) return k;
  }
  throw std::invalid_argument("unknown example kind '" + name + "'");
}

Parametrization circle_chart(const Eigen::Ref<const Eigen::VectorXd>& center, double radius, int n,
                             double theta_lo, double theta_hi) {
  return Parametrization::from_text(
      1,
      planar_components(linear_text(center[0], {{radius, "cos(x1)"}}),
                        linear_text(center[1], {{radius, "sin(x1)"}}), n),
      interval(theta_lo, theta_hi));
}

Parametrization sphere_face_chart(const Eigen::Ref<const Eigen::VectorXd>& center, double radius,
                                  int d, int n, int axis, int sign) {
  if (axis < 0 || axis > d) throw std::invalid_argument("sphere_face_chart: axis out of range");
  std::string norm = "sqrt(1";
  for (int j = 1; j <= d; ++j) norm += " + x" + std::to_string(j) + "^2";
  norm += ")";
  std::vector<std::string> components;
  int var = 0;
  for (int j = 0; j < n; ++j) {
    if (j > d) {
      components.push_back(linear_text(center[j], {}));
    } else if (j == axis) {
      components.push_back(linear_text(center[j], {{sign * radius, "1/" + norm}}));
    } else {
      ++var;
      components.push_back(linear_text(center[j], {{radius, "x" + std::to_string(var) + "/" + norm}}));
    }
  }
  return Parametrization::from_text(d, components,
                                    Box(Eigen::VectorXd::Constant(d, -1.0), Eigen::VectorXd::Constant(d, 1.0)));
}

BuiltExample build_example(const ExampleSpec& spec) {
  spec.validate();
  const double r = spec.resolved_scale();
  BuiltExample out;

  if (spec.kind != ExampleKind::kSigma2) {
    for (int i = 0; i < spec.count; ++i) {
      const Eigen::VectorXd c = component_center(spec, i);
      if (spec.d == 1) {
        out.atlas.add(circle_chart(c, r, spec.n, 0.0, 2.0 * kPi));
        out.roles.push_back(ChartRole::kSphere);
        continue;
      }
      for (int axis = 0; axis <= spec.d; ++axis) {
        for (int sign : {1, -1}) {
          out.atlas.add(sphere_face_chart(c, r, spec.d, spec.n, axis, sign));
          out.roles.push_back(ChartRole::kSphere);
        }
      }
    }
    return out;
  }

  const std::vector<Piece> pieces = sigma2_pieces(spec, r);
  const double rho = std::min(spec.eps / 4.0, 0.4 * r * std::sin(2.0 * spec.eps));
  out.blend_radius = rho;
  std::vector<Trimmed> trimmed;
  trimmed.reserve(pieces.size());
  for (const auto& p : pieces) trimmed.push_back(trim(p, rho));

  for (std::size_t k = 0; k < pieces.size(); ++k) {
    const Trimmed& cur = trimmed[k];
    const Trimmed& next = trimmed[(k + 1) % pieces.size()];
    if (cur.piece.arc) {
      out.atlas.add(arc_chart(cur.piece, spec.n));
      out.roles.push_back(ChartRole::kArc);
    } else {
      out.atlas.add(segment_chart(cur.piece.a, cur.piece.b, spec.n));
      out.roles.push_back(ChartRole::kSegment);
    }
    Eigen::VectorXd corner = Eigen::VectorXd::Zero(spec.n);
    corner.head<2>() = pieces[k].end();
    out.corners.push_back(corner);
    out.atlas.add(blend_chart(cur.end, cur.end_tangent, next.start, next.start_tangent, spec.n));
    out.roles.push_back(ChartRole::kBlend);
  }
  return out;
}

ChartAtlas build(const ExampleSpec& spec) { return build_example(spec).atlas; }

std::vector<AffinePlane> predicted_planes(const ExampleSpec& spec, const Box& window) {
  spec.validate();
  if (window.dims() != spec.n) throw std::invalid_argument("predicted_planes: window must live in R^n");
  const int k = spec.n - spec.d - 1;
  Eigen::MatrixXd basis = Eigen::MatrixXd::Zero(spec.n, k);
  for (int c = 0; c < k; ++c) basis(spec.d + 1 + c, c) = 1.0;

  std::vector<AffinePlane> planes;
  for (int i = 0; i < spec.count; ++i) {
    const Eigen::VectorXd base = component_center(spec, i);
    bool meets = true;
    for (int j = 0; j <= spec.d; ++j) {
      if (base[j] < window.lo[j] || base[j] > window.hi[j]) meets = false;
    }
    if (meets) planes.emplace_back(base, basis);
  }
  return planes;
}

bool meridian_check(const ExampleSpec& spec, const Eigen::Ref<const Eigen::VectorXd>& a, int samples) {
  if (spec.kind != ExampleKind::kSingleCircle && spec.kind != ExampleKind::kSingleSphere) {
    throw std::invalid_argument("meridian_check: needs a single component");
  }
  if (samples < 1) throw std::invalid_argument("meridian_check: samples must be >= 1");
  const ChartAtlas atlas = build(spec);
  std::mt19937_64 rng(0x5eed);
  double first = -1.0;
  for (int s = 0; s < samples; ++s) {
    const Parametrization& chart = atlas[static_cast<std::size_t>(s) % atlas.size()];
    Eigen::VectorXd x(chart.d());
    for (int j = 0; j < chart.d(); ++j) {
      std::uniform_real_distribution<double> u(chart.domain().lo[j], chart.domain().hi[j]);
      x[j] = u(rng);
    }
    const double dist = (chart.evaluate(x) - a).norm();
    if (first < 0.0) {
      if (!(dist > 0.0)) throw std::invalid_argument("meridian_check: center lies on the component");
      first = dist;
    } else if (std::abs(dist - first) > 1e-9 * first) {
      return false;
    }
  }
  return true;
}

JunctionReport c1_junctions(const ChartAtlas& atlas, double match_radius) {
  if (atlas.d() != 1) throw std::invalid_argument("c1_junctions: curve atlases only");
  struct End {
    std::size_t chart;
    Eigen::VectorXd point;
    Eigen::VectorXd tangent;
  };
  std::vector<End> ends;
  for (std::size_t c = 0; c < atlas.size(); ++c) {
    for (const double t : {atlas[c].domain().lo[0], atlas[c].domain().hi[0]}) {
      const ChartSample s = atlas[c].sample(Eigen::VectorXd::Constant(1, t));
      ends.push_back({c, s.point, s.jacobian.col(0).normalized()});
    }
  }
  JunctionReport report;
  for (std::size_t e = 0; e < ends.size(); ++e) {
    double best = std::numeric_limits<double>::infinity();
    std::size_t arg = e;
    for (std::size_t f = 0; f < ends.size(); ++f) {
      if (ends[f].chart == ends[e].chart) continue;
      const double gap = (ends[e].point - ends[f].point).norm();
      if (gap < best) {
        best = gap;
        arg = f;
      }
    }
    if (!(best <= match_radius)) {
      ++report.unmatched_endpoints;
      continue;
    }
    if (arg > e) ++report.junctions;
    report.max_position_gap = std::max(report.max_position_gap, best);
    const double tangent_gap = std::min((ends[e].tangent - ends[arg].tangent).norm(),
                                        (ends[e].tangent + ends[arg].tangent).norm());
    report.max_tangent_gap = std::max(report.max_tangent_gap, tangent_gap);
  }
  return report;
}

}  // namespace transversal
