#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "support.hpp"
#include "transversal/examples.hpp"
#include "transversal/measure.hpp"

using namespace transversal;
using testing_support::vec;

namespace {

double distance_to_nearest_center(const Eigen::VectorXd& p, int count) {
  double best = INFINITY;
  for (int i = 0; i < count; ++i) {
    Eigen::VectorXd c = Eigen::VectorXd::Zero(p.size());
    c[0] = i;
    best = std::min(best, (p - c).norm());
  }
  return best;
}

TEST(Examples, SigmaZero) {
  const BuiltExample ex = build_example(ExampleSpec::sigma0(2));
  ASSERT_EQ(ex.atlas.size(), 2u);
  EXPECT_TRUE(ex.atlas[0].evaluate(vec({0.0})).isApprox(vec({0.25, 0.0, 0.0})));
  EXPECT_TRUE(ex.atlas[1].evaluate(vec({0.0})).isApprox(vec({1.25, 0.0, 0.0})));
  EXPECT_TRUE(ex.atlas[1].evaluate(vec({std::numbers::pi})).isApprox(vec({0.75, 0.0, 0.0})));
}

TEST(Examples, SingleCircle) {
  const ChartAtlas atlas = build(ExampleSpec::single_circle());
  ASSERT_EQ(atlas.size(), 1u);
  EXPECT_EQ(atlas[0].evaluate(vec({0.0})), vec({0.25, 0.0, 0.0}));
}

TEST(Examples, SphereChainCharts) {
  const ExampleSpec spec = ExampleSpec::sphere_chain(2, 4, 2);
  EXPECT_DOUBLE_EQ(spec.resolved_scale(), 1.0 / 256.0);
  const ChartAtlas atlas = build(spec);
  ASSERT_EQ(atlas.size(), 12u);
  for (const auto& chart : atlas) {
    for (const Eigen::VectorXd& x : {vec({0.0, 0.0}), vec({1.0, -1.0}), vec({0.3, 0.7})}) {
      const Eigen::VectorXd p = chart.evaluate(x);
      EXPECT_NEAR(distance_to_nearest_center(p, 2), 1.0 / 256.0, 1e-15);
      EXPECT_EQ(p[3], 0.0);
    }
  }
}

TEST(Examples, SigmaTwoStructure) {
  const BuiltExample ex = build_example(ExampleSpec::sigma2(2, 0.01));
  ASSERT_EQ(ex.atlas.size(), 16u);
  int arcs = 0, segments = 0, blends = 0;
  for (ChartRole r : ex.roles) {
    arcs += r == ChartRole::kArc;
    segments += r == ChartRole::kSegment;
    blends += r == ChartRole::kBlend;
  }
  EXPECT_EQ(arcs, 4);
  EXPECT_EQ(segments, 4);
  EXPECT_EQ(blends, 8);
  EXPECT_GT(ex.blend_radius, 0.0);
}

TEST(Examples, SigmaTwoIsClosedAndC1) {
  for (int count : {2, 3}) {
    const ChartAtlas atlas = build(ExampleSpec::sigma2(count, 0.01));
    const JunctionReport j = c1_junctions(atlas);
    EXPECT_EQ(j.unmatched_endpoints, 0);
    EXPECT_EQ(j.junctions, static_cast<int>(atlas.size()));
    EXPECT_LE(j.max_position_gap, 1e-9);
    EXPECT_LE(j.max_tangent_gap, 1e-9);
  }
}

TEST(Examples, SigmaTwoArcsLieOnSigmaZero) {
  const ExampleSpec spec = ExampleSpec::sigma2(2, 0.01);
  const BuiltExample ex = build_example(spec);
  for (std::size_t c = 0; c < ex.atlas.size(); ++c) {
    if (ex.roles[c] != ChartRole::kArc) continue;
    const Box& dom = ex.atlas[c].domain();
    for (int k = 0; k <= 50; ++k) {
      const Eigen::VectorXd x = vec({dom.lo[0] + (dom.hi[0] - dom.lo[0]) * k / 50.0});
      EXPECT_NEAR(distance_to_nearest_center(ex.atlas[c].evaluate(x), 2), 0.25, 1e-15);
    }
  }
}

TEST(Examples, SigmaTwoAgreesWithSigmaZeroAwayFromNecks) {
  // Necks, caps and blends all stay within |y| <= 2 eps; elsewhere Sigma2 runs
  // along the circles of Sigma0 and covers nearly all of their length.
  const double eps = 0.01;
  const ChartAtlas atlas = build(ExampleSpec::sigma2(2, eps));
  const auto grids = build_measure_grids(atlas, 2000);
  double on_circle = 0.0, total = 0.0;
  for (const auto& g : grids) {
    for (Eigen::Index k = 0; k < g.size(); ++k) {
      const Eigen::VectorXd p = g.points.col(k);
      total += g.weights[k];
      if (std::abs(p[1]) <= 2 * eps) continue;
      EXPECT_NEAR(distance_to_nearest_center(p, 2), 0.25, 1e-12) << p.transpose();
      on_circle += g.weights[k];
    }
  }
  const double sigma0_length = 2 * 2 * std::numbers::pi * 0.25;
  EXPECT_GT(on_circle, 0.9 * sigma0_length);
  EXPECT_LE(on_circle, sigma0_length);
}

TEST(Examples, PredictedPlanes) {
  const Box cube(Eigen::VectorXd::Constant(3, -1.0), Eigen::VectorXd::Constant(3, 1.0));
  const auto one = predicted_planes(ExampleSpec::single_circle(), cube);
  ASSERT_EQ(one.size(), 1u);
  EXPECT_EQ(one[0].base, vec({0.0, 0.0, 0.0}));
  EXPECT_EQ(Eigen::VectorXd(one[0].basis.col(0)), vec({0.0, 0.0, 1.0}));

  const auto three = predicted_planes(ExampleSpec::sigma0(3), Box(vec({-1.0, -1.0, -1.0}), vec({3.0, 1.0, 1.0})));
  ASSERT_EQ(three.size(), 3u);
  for (int i = 0; i < 3; ++i) {
    EXPECT_EQ(three[i].base, vec({double(i), 0.0, 0.0}));
    EXPECT_EQ(three[i].basis, one[0].basis);
  }
  const auto clipped = predicted_planes(ExampleSpec::sigma0(3), cube);
  EXPECT_EQ(clipped.size(), 2u);

  const auto line = predicted_planes(ExampleSpec::sphere_chain(2, 4, 1),
                                     Box(Eigen::VectorXd::Constant(4, -1.0), Eigen::VectorXd::Constant(4, 1.0)));
  ASSERT_EQ(line.size(), 1u);
  EXPECT_EQ(line[0].dim(), 1);
  EXPECT_EQ(Eigen::VectorXd(line[0].basis.col(0)), vec({0.0, 0.0, 0.0, 1.0}));

  const auto planes5 = predicted_planes(ExampleSpec::sigma0(1, 5),
                                        Box(Eigen::VectorXd::Constant(5, -1.0), Eigen::VectorXd::Constant(5, 1.0)));
  ASSERT_EQ(planes5.size(), 1u);
  EXPECT_EQ(planes5[0].dim(), 3);
}

TEST(Examples, Meridians) {
  EXPECT_TRUE(meridian_check(ExampleSpec::single_circle(), vec({0.0, 0.0, 1.0}), 100));
  EXPECT_FALSE(meridian_check(ExampleSpec::single_circle(), vec({0.3, 0.0, 1.0}), 100));
  for (double t : {-2.0, 0.1, 0.7}) {
    EXPECT_TRUE(meridian_check(ExampleSpec::single_sphere(2, 4), vec({0.0, 0.0, 0.0, t}), 200));
  }
  EXPECT_FALSE(meridian_check(ExampleSpec::single_sphere(2, 4), vec({0.0, 0.05, 0.0, 0.7}), 200));
}

TEST(Examples, Validation) {
  EXPECT_THROW(ExampleSpec::sigma2(2, 0.02).validate(), std::invalid_argument);
  EXPECT_THROW(ExampleSpec::sigma2(2, 0.0).validate(), std::invalid_argument);
  EXPECT_THROW(ExampleSpec::sigma0(0).validate(), std::invalid_argument);
  EXPECT_THROW(ExampleSpec::sphere_chain(3, 3, 1).validate(), std::invalid_argument);
  EXPECT_THROW(parse_example_kind("torus"), std::invalid_argument);
  for (auto k : {ExampleKind::kSigma0, ExampleKind::kSigma2, ExampleKind::kSphereChain,
                 ExampleKind::kSingleCircle, ExampleKind::kSingleSphere}) {
    EXPECT_EQ(parse_example_kind(to_string(k)), k);
  }
}

}  // namespace
