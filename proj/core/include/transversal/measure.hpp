#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include <Eigen/Core>

#include "transversal/manifold.hpp"
#include "transversal/tangency.hpp"

namespace transversal {

inline constexpr double kDefaultDelta = 0.01;
inline constexpr int kDefaultMeasureNodes = 64;
inline constexpr double kMaxSkippedFraction = 0.01;

/// More than 1% of quadrature nodes could not be evaluated.
class NumericalFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct MeasureParams {
  int nodes_per_axis = kDefaultMeasureNodes;
  double tau = kDefaultTau;
  double delta = kDefaultDelta;
};

struct MeasureEstimate {
  double value = 0.0;  // induced measure of the indicator set
  double total = 0.0;  // induced measure of all evaluated nodes
  double fraction = 0.0;
  std::int64_t nodes_hit = 0;
  std::int64_t nodes_total = 0;
  std::int64_t nodes_skipped = 0;
  double tolerance_used = 0.0;

  MeasureEstimate& operator+=(const MeasureEstimate& other);
};

/// Midpoint-rule samples of one chart, independent of the center a.
///
/// Node order is lexicographic in the multi-index with the last parameter
/// varying fastest; every sum over nodes runs in that order.
struct MeasureGrid {
  int d = 0;
  int n = 0;
  int nodes_per_axis = 0;
  double cell_volume = 0.0;
  Eigen::MatrixXd params;     // d x m
  Eigen::MatrixXd points;     // n x m
  Eigen::MatrixXd jacobians;  // n x (d*m), node k occupies columns [k*d, k*d + d)
  Eigen::VectorXd weights;    // volume_element * cell_volume
  Eigen::VectorXd max_col_norm;
  std::vector<char> valid;
  std::int64_t failed = 0;
  double total = 0.0;

  Eigen::Index size() const { return params.cols(); }
  auto jacobian(Eigen::Index k) const { return jacobians.middleCols(k * d, d); }
};

MeasureGrid build_measure_grid(const Parametrization& chart, int nodes_per_axis);
std::vector<MeasureGrid> build_measure_grids(const ChartAtlas& atlas, int nodes_per_axis);

enum class NodeState : std::uint8_t { kMiss = 0, kHit = 1, kSkipped = 2 };
using NodeMask = std::vector<NodeState>;

/// Per-node indicator of |g(a, x)| <= tau * scale. Nodes that failed to
/// evaluate or sit on a degenerate sphere are kSkipped.
NodeMask nontransverse_mask(const MeasureGrid& grid, const Eigen::Ref<const Eigen::VectorXd>& a,
                            double tau);

/// Node-wise conjunction; skipped wins over hit.
NodeMask intersect(const NodeMask& u, const NodeMask& v);

/// Quadrature of a node mask. Does not enforce the skip limit.
MeasureEstimate summarize(const MeasureGrid& grid, const NodeMask& mask, double tau);

/// Throws NumericalFailure when more than 1% of nodes were skipped.
void check_skipped(const MeasureEstimate& estimate);

MeasureEstimate nontransverse_measure(const MeasureGrid& grid,
                                      const Eigen::Ref<const Eigen::VectorXd>& a, double tau);
MeasureEstimate nontransverse_measure(const std::vector<MeasureGrid>& grids,
                                      const Eigen::Ref<const Eigen::VectorXd>& a, double tau);
MeasureEstimate nontransverse_measure(const Parametrization& chart,
                                      const Eigen::Ref<const Eigen::VectorXd>& a,
                                      int nodes_per_axis, double tau = kDefaultTau);
MeasureEstimate nontransverse_measure(const ChartAtlas& atlas,
                                      const Eigen::Ref<const Eigen::VectorXd>& a,
                                      int nodes_per_axis, double tau = kDefaultTau);

bool is_exceptional(const MeasureEstimate& estimate, double delta = kDefaultDelta);
bool is_exceptional(const Parametrization& chart, const Eigen::Ref<const Eigen::VectorXd>& a,
                    double delta = kDefaultDelta, int nodes_per_axis = kDefaultMeasureNodes,
                    double tau = kDefaultTau);
bool is_exceptional(const ChartAtlas& atlas, const Eigen::Ref<const Eigen::VectorXd>& a,
                    const MeasureParams& params = {});

}  // namespace transversal
