#pragma once

// Constructed manifolds with known exceptional sets.
//
// Components are round d-spheres of radius r in the first d+1 coordinates,
// centred at (i * spacing, 0, ..., 0) for i = 0..count-1. For every such
// family the exceptional set is the union of the affine planes
// (i * spacing, 0, ..., 0) + span(e_{d+2}, ..., e_n), one per component.

#include <optional>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "transversal/affine.hpp"
#include "transversal/manifold.hpp"

namespace transversal {

enum class ExampleKind {
  kSigma0,        // disjoint circles
  kSigma2,        // circles joined by thin necks, corners blended to C1
  kSphereChain,   // disjoint round d-spheres
  kSingleCircle,
  kSingleSphere,
};

struct ExampleSpec {
  ExampleKind kind = ExampleKind::kSingleCircle;
  int n = 3;
  int d = 1;
  int count = 1;
  double eps = 0.01;             // neck parameter, Sigma2 only
  std::optional<double> scale;   // component radius; see resolved_scale()
  double spacing = 1.0;

  static ExampleSpec single_circle(int n = 3);
  static ExampleSpec single_sphere(int d, int n);
  static ExampleSpec sigma0(int count, int n = 3);
  static ExampleSpec sigma2(int count, double eps = 0.01, int n = 3);
  static ExampleSpec sphere_chain(int d, int n, int count);

  /// 4^-n for sphere chains, 1/4 otherwise, unless set explicitly.
  double resolved_scale() const;
  /// Throws std::invalid_argument describing the first violated constraint.
  void validate() const;
};

std::string to_string(ExampleKind kind);
/// Accepts sigma0, sigma2, sphere-chain, circle, sphere.
ExampleKind parse_example_kind(const std::string& name);

enum class ChartRole { kSphere, kArc, kSegment, kBlend };

struct BuiltExample {
  ChartAtlas atlas;
  std::vector<ChartRole> roles;        // one per chart
  std::vector<Eigen::VectorXd> corners;  // Sigma2: polygon corners before blending
  double blend_radius = 0.0;
};

BuiltExample build_example(const ExampleSpec& spec);
ChartAtlas build(const ExampleSpec& spec);

/// Exceptional planes of the components whose plane meets `window`.
std::vector<AffinePlane> predicted_planes(const ExampleSpec& spec, const Box& window);

/// True iff all sampled points of the single component are equidistant from a
/// (relative 1e-9), i.e. the component is a meridian of a sphere about a.
bool meridian_check(const ExampleSpec& spec, const Eigen::Ref<const Eigen::VectorXd>& a, int samples);

/// Chart text for a round circle / cube-face d-sphere patch; exposed for tests.
Parametrization circle_chart(const Eigen::Ref<const Eigen::VectorXd>& center, double radius, int n,
                             double theta_lo, double theta_hi);
Parametrization sphere_face_chart(const Eigen::Ref<const Eigen::VectorXd>& center, double radius,
                                  int d, int n, int axis, int sign);

struct JunctionReport {
  int junctions = 0;
  int unmatched_endpoints = 0;
  double max_position_gap = 0.0;
  double max_tangent_gap = 0.0;  // between unit tangents, up to orientation
};

/// For curve atlases (d = 1): pairs each chart endpoint with the nearest
/// endpoint of another chart and measures position and unit-tangent mismatch.
JunctionReport c1_junctions(const ChartAtlas& atlas, double match_radius = 1e-6);

}  // namespace transversal
