#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include <gtest/gtest.h>

#include "oracles/oracles.hpp"
#include "support.hpp"
#include "transversal/examples.hpp"
#include "transversal/manifold.hpp"
#include "transversal/manifold_io.hpp"
#include "transversal/measure.hpp"

using namespace transversal;
using testing_support::quarter_circle;
using testing_support::vec;

namespace {

TEST(Box, RejectsDegenerateBounds) {
  EXPECT_THROW(Box(vec({0.0}), vec({0.0})), std::invalid_argument);
  EXPECT_THROW(Box(vec({0.0, 1.0}), vec({1.0})), std::invalid_argument);
  EXPECT_THROW(Box(vec({0.0}), vec({INFINITY})), std::invalid_argument);
  const Box b(vec({-1.0, 0.0}), vec({1.0, 2.0}));
  EXPECT_DOUBLE_EQ(b.volume(), 4.0);
  EXPECT_TRUE(b.contains(vec({1.0, 2.0})));
  EXPECT_FALSE(b.contains(vec({1.1, 2.0})));
}

TEST(Parametrization, ValidatesDimensions) {
  const Box unit(vec({0.0}), vec({1.0}));
  EXPECT_THROW(Parametrization::from_text(1, {"x1"}, unit), std::invalid_argument);
  EXPECT_THROW(Parametrization::from_text(1, {"x1", "x2"}, unit), ExprError);
  EXPECT_THROW(Parametrization::from_text(2, {"x1", "x2", "0"}, unit), std::invalid_argument);
}

TEST(Parametrization, CirclePoints) {
  const Parametrization c = quarter_circle();
  EXPECT_TRUE(c.evaluate(vec({0.0})).isApprox(vec({0.25, 0.0, 0.0})));
  const Eigen::VectorXd antipode = c.evaluate(vec({std::numbers::pi}));
  EXPECT_NEAR((antipode - vec({-0.25, 0.0, 0.0})).norm(), 0.0, 1e-16);
}

TEST(Parametrization, OutsideDomainThrows) {
  EXPECT_THROW(quarter_circle().evaluate(vec({-0.1})), std::out_of_range);
  EXPECT_THROW(quarter_circle().evaluate(vec({0.1, 0.2})), std::invalid_argument);
}

TEST(Parametrization, SpherePole) {
  const Parametrization face = sphere_face_chart(vec({0.0, 0.0, 0.0, 0.0}), 0.25, 2, 4, 2, 1);
  EXPECT_TRUE(face.evaluate(vec({0.0, 0.0})).isApprox(vec({0.0, 0.0, 0.25, 0.0})));
}

TEST(Parametrization, CircleJacobian) {
  const Eigen::MatrixXd j = quarter_circle().jacobian(vec({0.0}));
  ASSERT_EQ(j.rows(), 3);
  ASSERT_EQ(j.cols(), 1);
  EXPECT_NEAR((j.col(0) - vec({0.0, 0.25, 0.0})).norm(), 0.0, 1e-16);
}

TEST(Parametrization, GraphJacobian) {
  const auto g = Parametrization::from_text(2, {"x1", "x2", "x1*x2", "0"},
                                            Box(vec({-2.0, -2.0}), vec({2.0, 2.0})));
  const Eigen::MatrixXd j = g.jacobian(vec({1.0, 1.0}));
  EXPECT_EQ(Eigen::VectorXd(j.col(0)), vec({1.0, 0.0, 1.0, 0.0}));
  EXPECT_EQ(Eigen::VectorXd(j.col(1)), vec({0.0, 1.0, 1.0, 0.0}));
}

TEST(Parametrization, VolumeElements) {
  const Parametrization c = quarter_circle();
  for (double t : {0.0, 1.0, 2.5, 6.0}) EXPECT_NEAR(c.volume_element(vec({t})), 0.25, 1e-15);
  const auto line = Parametrization::from_text(1, {"0.6*x1", "0.8*x1"}, Box(vec({0.0}), vec({1.0})));
  EXPECT_NEAR(line.volume_element(vec({0.5})), 1.0, 1e-15);
}

TEST(Parametrization, ExampleChartsHaveFullRank) {
  for (const auto& spec : testing_support::shipped_examples()) {
    const ChartAtlas atlas = build(spec);
    std::uint64_t seed = 1;
    for (const auto& chart : atlas) {
      const ImmersionReport r = check_immersion(chart, 1000 / static_cast<int>(atlas.size()) + 1, seed++);
      EXPECT_TRUE(r.ok) << to_string(spec.kind) << " min ratio " << r.min_ratio;
      EXPECT_EQ(numerical_rank(chart.jacobian(r.worst_point)), chart.d());
    }
  }
}

TEST(Parametrization, NumericalRank) {
  Eigen::MatrixXd m(3, 2);
  m << 1, 2, 2, 4, 3, 6;
  EXPECT_EQ(numerical_rank(m), 1);
  EXPECT_EQ(numerical_rank(Eigen::MatrixXd::Zero(3, 2)), 0);
  EXPECT_EQ(numerical_rank(Eigen::MatrixXd::Identity(3, 3)), 3);
}

TEST(Parametrization, TranslatedShiftsImage) {
  const Parametrization c = quarter_circle();
  const Parametrization t = c.translated(vec({1.0, -2.0, 0.5}));
  for (double x : {0.0, 0.7, 3.0}) {
    EXPECT_NEAR((t.evaluate(vec({x})) - c.evaluate(vec({x})) - vec({1.0, -2.0, 0.5})).norm(), 0.0, 1e-15);
    EXPECT_EQ(t.jacobian(vec({x})), c.jacobian(vec({x})));
  }
}

TEST(Atlas, RejectsMixedDimensions) {
  ChartAtlas atlas;
  atlas.add(quarter_circle());
  EXPECT_THROW(atlas.add(sphere_face_chart(vec({0.0, 0.0, 0.0, 0.0}), 1.0, 2, 4, 0, 1)),
               std::invalid_argument);
}

TEST(Measure, CircleCircumference) {
  const MeasureGrid g = build_measure_grid(quarter_circle(), 10000);
  EXPECT_NEAR(g.total, oracle::kCircleLength, 1e-3 * oracle::kCircleLength);
}

TEST(Measure, SphereArea) {
  const auto grids = build_measure_grids(build(ExampleSpec::single_sphere(2, 4)), 100);
  double total = 0.0;
  for (const auto& g : grids) total += g.total;
  EXPECT_NEAR(total, oracle::kSphereAreaQuarter, 1e-3 * oracle::kSphereAreaQuarter);
}

TEST(ManifoldFile, ParsesSpec) {
  std::istringstream in(
      "# quarter circle\n"
      "dims 1 3\n"
      "chart\n"
      "box 0 6.283185307179586  # full turn\n"
      "cos(x1)/4\n"
      "sin(x1)/4\n"
      "\n"
      "0\n");
  const ChartAtlas atlas = read_manifold(in);
  ASSERT_EQ(atlas.size(), 1u);
  EXPECT_EQ(atlas.d(), 1);
  EXPECT_EQ(atlas.n(), 3);
  EXPECT_TRUE(atlas[0].evaluate(vec({0.0})).isApprox(vec({0.25, 0.0, 0.0})));
}

TEST(ManifoldFile, ReportsLineOfError) {
  const auto line_of = [](const std::string& text) {
    std::istringstream in(text);
    try {
      read_manifold(in);
    } catch (const ManifoldFileError& e) {
      return e.line();
    }
    return -1;
  };
  EXPECT_EQ(line_of("dims 1 3\nchart\nbox 0 1\nx1\nx2\n0\n"), 5);
  EXPECT_EQ(line_of("dims 1\n"), 1);
  EXPECT_EQ(line_of("dims 1 3\nchart\nbox 1 0\nx1\nx1\n0\n"), 3);
  EXPECT_EQ(line_of("dims 1 3\nchart\nbox 0 1\nx1\nx1\n"), 5);
  EXPECT_GT(line_of(""), 0);
  EXPECT_EQ(line_of("chart\n"), 1);
}

TEST(ManifoldFile, RoundTripsExamples) {
  for (const auto& spec : testing_support::shipped_examples()) {
    const ChartAtlas atlas = build(spec);
    std::stringstream buffer;
    write_manifold(buffer, atlas, {"round trip"});
    const ChartAtlas again = read_manifold(buffer);
    ASSERT_EQ(again.size(), atlas.size());
    for (std::size_t c = 0; c < atlas.size(); ++c) {
      EXPECT_EQ(again[c].domain().lo, atlas[c].domain().lo);
      EXPECT_EQ(again[c].domain().hi, atlas[c].domain().hi);
      for (int i = 0; i < atlas.n(); ++i) {
        EXPECT_TRUE(again[c].components()[i].same_structure(atlas[c].components()[i]));
      }
    }
  }
}

TEST(ManifoldFile, MissingFile) {
  EXPECT_THROW(read_manifold_file("/nonexistent/manifold.txt"), std::runtime_error);
}

}  // namespace
