#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "oracles/oracles.hpp"
#include "support.hpp"
#include "transversal/examples.hpp"
#include "transversal/strata.hpp"

using namespace transversal;
using testing_support::quarter_circle;
using testing_support::vec;

namespace {

Eigen::MatrixXd cols(int n, std::initializer_list<int> which) {
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, static_cast<Eigen::Index>(which.size()));
  int c = 0;
  for (int j : which) m(j, c++) = 1.0;
  return m;
}

TEST(Grassmann, FramesAreOrthonormal) {
  for (int n : {2, 3, 4, 7}) {
    for (int i = 1; i <= n; ++i) {
      const GrassmannPlane p = random_grassmann(n, i, 100 * n + i);
      EXPECT_EQ(p.dim(), i);
      EXPECT_EQ(p.ambient_dim(), n);
      EXPECT_LE(orthonormality_defect(p.frame), 1e-12);
    }
  }
  const GrassmannPlane full = random_grassmann(4, 4, 1);
  EXPECT_LE((full.projector() - Eigen::MatrixXd::Identity(4, 4)).norm(), 1e-12);
  EXPECT_THROW(random_grassmann(3, 0, 1), std::invalid_argument);
  EXPECT_THROW(random_grassmann(3, 4, 1), std::invalid_argument);
}

TEST(Grassmann, Deterministic) {
  EXPECT_EQ(random_grassmann(5, 2, 42).frame, random_grassmann(5, 2, 42).frame);
  EXPECT_NE(random_grassmann(5, 2, 42).frame, random_grassmann(5, 2, 43).frame);
}

TEST(Grassmann, LineDirectionsAreSpread) {
  Eigen::Vector3d mean = Eigen::Vector3d::Zero();
  for (std::uint64_t s = 0; s < 4000; ++s) {
    const Eigen::Vector3d u = random_grassmann(3, 1, s).frame.col(0);
    EXPECT_NEAR(u.norm(), 1.0, 1e-14);
    mean += u;
  }
  EXPECT_LE((mean / 4000.0).norm(), 0.05);
}

TEST(NormalPlane, Complements) {
  const AffinePlane z = normal_affine_plane(vec({0.0, 0.0, 0.0}), GrassmannPlane(cols(3, {0, 1})));
  EXPECT_EQ(z.dim(), 1);
  EXPECT_NEAR(std::abs(z.basis(2, 0)), 1.0, 1e-15);
  const AffinePlane point = normal_affine_plane(vec({1.0, 2.0, 3.0}), random_grassmann(3, 3, 5));
  EXPECT_EQ(point.dim(), 0);
  EXPECT_EQ(point.base, vec({1.0, 2.0, 3.0}));
}

TEST(ExceptionalSet, MeridianPlaneHasFullMeasure) {
  const MeasureEstimate e =
      exceptional_param_set(quarter_circle(), vec({0.0, 0.0, 0.6}), GrassmannPlane(cols(3, {0, 1})), 64);
  EXPECT_NEAR(e.value, oracle::kCircleLength, 1e-2 * oracle::kCircleLength);
}

TEST(ExceptionalSet, PerpendicularLineIsEmpty) {
  for (const Eigen::VectorXd& a : {vec({0.0, 0.0, 0.6}), vec({0.3, -0.1, 0.2})}) {
    const MeasureEstimate e = exceptional_param_set(quarter_circle(), a, GrassmannPlane(cols(3, {2})), 64);
    EXPECT_EQ(e.nodes_hit, 0);
    EXPECT_EQ(e.value, 0.0);
  }
}

TEST(ExceptionalSet, FullSpaceMatchesNontransverseMeasure) {
  for (const auto& spec : testing_support::shipped_examples()) {
    const auto grids = build_measure_grids(build(spec), 32);
    const Eigen::VectorXd a = Eigen::VectorXd::LinSpaced(spec.n, 0.05, 0.3);
    const GrassmannPlane full = random_grassmann(spec.n, spec.n, 3);
    const MeasureEstimate e = exceptional_param_set(grids, a, full, kDefaultTau);
    const MeasureEstimate m = nontransverse_measure(grids, a, kDefaultTau);
    EXPECT_EQ(e.value, m.value);
    EXPECT_EQ(e.nodes_hit, m.nodes_hit);
    EXPECT_EQ(e.total, m.total);
  }
}

TEST(Overlap, SameMeridianFamily) {
  const std::vector<MeasureGrid> grids{build_measure_grid(quarter_circle(), 64)};
  const GrassmannPlane p(cols(3, {0, 1}));
  const StratumSample s1 = make_stratum_sample(grids, vec({0.0, 0.0, 1.0}), p, kDefaultTau);
  const StratumSample s2 = make_stratum_sample(grids, vec({0.0, 0.0, 2.0}), p, kDefaultTau);
  EXPECT_EQ(intersect_normal_planes(s1.a, s2.a, p), NormalPlaneIntersection::kEqual);
  const MeasureEstimate o = pairwise_E_overlap(grids, s1, s2, kDefaultTau);
  EXPECT_NEAR(o.value, oracle::kCircleLength, 1e-2 * oracle::kCircleLength);
}

TEST(Overlap, DifferentPlanesAreNegligible) {
  const auto grids = build_measure_grids(build(ExampleSpec::single_sphere(2, 4)), 48);
  const Eigen::VectorXd a = vec({0.0, 0.0, 0.0, 0.4});
  const StratumSample s1 = make_stratum_sample(grids, a, GrassmannPlane(cols(4, {0, 1, 2})), kDefaultTau);
  const StratumSample s2 = make_stratum_sample(grids, a, GrassmannPlane(cols(4, {0, 1})), kDefaultTau);
  EXPECT_NEAR(s1.e_measure.fraction, 1.0, 1e-12);
  const MeasureEstimate o = pairwise_E_overlap(grids, s1, s2, kDefaultTau);
  EXPECT_LE(o.value, 1e-3 * o.total);
}

TEST(Overlap, DisjointSupports) {
  const auto grids = build_measure_grids(build(ExampleSpec::sigma0(2)), 64);
  const GrassmannPlane p(cols(3, {0, 1}));
  const StratumSample s1 = make_stratum_sample(grids, vec({0.0, 0.0, 0.5}), p, kDefaultTau);
  const StratumSample s2 = make_stratum_sample(grids, vec({1.0, 0.0, 0.5}), p, kDefaultTau);
  EXPECT_NEAR(s1.e_measure.fraction, 0.5, 1e-12);
  EXPECT_NEAR(s2.e_measure.fraction, 0.5, 1e-12);
  EXPECT_EQ(pairwise_E_overlap(grids, s1, s2, kDefaultTau).nodes_hit, 0);
}

TEST(Dichotomy, Examples) {
  const GrassmannPlane p(cols(3, {0, 1}));
  EXPECT_EQ(intersect_normal_planes(vec({0.0, 0.0, 0.0}), vec({0.0, 0.0, 1.0}), p), NormalPlaneIntersection::kEqual);
  EXPECT_EQ(intersect_normal_planes(vec({0.0, 0.0, 0.0}), vec({1.0, 0.0, 0.0}), p), NormalPlaneIntersection::kEmpty);
  EXPECT_THROW(intersect_normal_planes(vec({0.0, 0.0, 0.0}), vec({0.0, 0.0, 0.0}), p), std::invalid_argument);
}

TEST(Dichotomy, Battery) {
  for (int n : {2, 3, 5}) {
    const DichotomyReport r = normal_plane_dichotomy_battery(n, 1000, 100, n);
    EXPECT_EQ(r.instances, 1000);
    EXPECT_EQ(r.reframed, 100);
    EXPECT_TRUE(r.pass()) << n;
  }
}

TEST(Claim1, CircleHasNoViolations) {
  Claim1Options o;
  o.trials = 100;
  const Claim1Report r = claim1_diagnostic(ChartAtlas({quarter_circle()}), o);
  EXPECT_TRUE(r.pass());
  EXPECT_EQ(r.hits_per_dimension, std::vector<std::int64_t>{0});
}

TEST(Claim1, SphereHasNoViolations) {
  Claim1Options o;
  o.trials = 50;
  o.nodes_per_axis = 32;
  const Claim1Report r = claim1_diagnostic(build(ExampleSpec::single_sphere(2, 4)), o);
  EXPECT_TRUE(r.pass());
  EXPECT_EQ(r.hits_per_dimension.size(), 2u);
}

TEST(Claim1, ConstantChartViolates) {
  // Rank 0 < d: every node is both non-transverse and inside every P.
  const auto chart = Parametrization::from_text(1, {"0.5", "0.25", "0"}, Box(vec({0.0}), vec({1.0})));
  Claim1Options o;
  o.trials = 5;
  const Claim1Report r = claim1_diagnostic(ChartAtlas({chart}), o);
  EXPECT_FALSE(r.pass());
  EXPECT_EQ(r.violations.size(), 5u);
}

}  // namespace
