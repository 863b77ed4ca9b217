#include "transversal/report.hpp"

#include <cmath>

namespace transversal {

Json to_json(const Eigen::Ref<const Eigen::VectorXd>& v) {
  Json arr = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) arr.push_back(v[i]);
  return arr;
}

Json to_json(const Box& box) { return Json{{"lo", to_json(box.lo)}, {"hi", to_json(box.hi)}}; }

Json to_json(const MeasureEstimate& e) {
  return Json{{"value", e.value},
              {"total", e.total},
              {"fraction", e.fraction},
              {"nodes_hit", e.nodes_hit},
              {"nodes_total", e.nodes_total},
              {"nodes_skipped", e.nodes_skipped},
              {"tolerance_used", e.tolerance_used}};
}

Json to_json(const AffinePlane& plane) {
  Json basis = Json::array();
  for (Eigen::Index c = 0; c < plane.basis.cols(); ++c) basis.push_back(to_json(plane.basis.col(c)));
  return Json{{"dim", plane.dim()}, {"base", to_json(plane.base)}, {"basis", basis}};
}

Json to_json(const PlaneFit& fit) {
  return Json{{"plane", to_json(fit.plane)},
              {"residual", fit.residual},
              {"rank", fit.rank},
              {"singular_values", to_json(fit.singular_values)}};
}

Json to_json(const CriticalPoint& cp) {
  return Json{{"x", to_json(cp.x)},
              {"p", to_json(cp.p)},
              {"residual_norm", cp.residual_norm},
              {"scale", cp.scale},
              {"iterations", cp.iterations},
              {"converged", cp.converged}};
}

Json to_json(const ContainmentReport& r) {
  Json outliers = Json::array();
  for (std::size_t i : r.outliers) {
    outliers.push_back(Json{{"index", i}, {"distance", r.distances[i]}});
  }
  return Json{{"pass", r.pass},
              {"tolerance", r.tolerance},
              {"candidates", r.distances.size()},
              {"max_distance", r.max_distance},
              {"outliers", outliers}};
}

Json to_json(const Claim1Report& r) {
  Json violations = Json::array();
  for (const auto& v : r.violations) {
    Json frame = Json::array();
    for (Eigen::Index c = 0; c < v.plane.frame.cols(); ++c) frame.push_back(to_json(v.plane.frame.col(c)));
    violations.push_back(Json{{"i", v.i},
                              {"trial", v.trial},
                              {"a", to_json(v.a)},
                              {"plane_frame", frame},
                              {"e_measure", to_json(v.e_measure)}});
  }
  Json hits = Json::array();
  for (auto h : r.hits_per_dimension) hits.push_back(h);
  return Json{{"d", r.d},
              {"n", r.n},
              {"trials", r.trials},
              {"seed", r.seed},
              {"center_box", to_json(r.center_box)},
              {"hits_per_dimension", hits},
              {"violations", violations},
              {"pass", r.pass()}};
}

Json to_json(const DichotomyReport& r) {
  return Json{{"instances", r.instances},
              {"correct", r.correct},
              {"symmetric", r.symmetric},
              {"reframed", r.reframed},
              {"reframe_consistent", r.reframe_consistent},
              {"pass", r.pass()}};
}

Json to_json(const ScanReport& r) {
  Json nodes = Json::array();
  for (int c : r.grid.nodes_per_axis) nodes.push_back(c);
  Json exceptional = Json::array();
  for (std::size_t i : r.exceptional) {
    exceptional.push_back(Json{{"index", i}, {"center", to_json(r.centers[i])},
                               {"fraction", r.measures[i].fraction}});
  }
  Json failed = Json::array();
  for (std::size_t i : r.failed) failed.push_back(i);
  Json clusters = Json::array();
  for (std::size_t c = 0; c < r.clusters.size(); ++c) {
    Json members = Json::array();
    for (std::size_t i : r.clusters[c]) members.push_back(i);
    Json entry{{"members", members}};
    if (c < r.fits.size()) entry["fit"] = to_json(r.fits[c]);
    clusters.push_back(entry);
  }
  return Json{{"d", r.d},
              {"n", r.n},
              {"plane_dim", r.n - r.d - 1},
              {"box", to_json(r.grid.box)},
              {"nodes_per_axis", nodes},
              {"spacing", to_json(r.grid.spacing())},
              {"measure", Json{{"nodes_per_axis", r.params.nodes_per_axis},
                               {"tau", r.params.tau},
                               {"delta", r.params.delta}}},
              {"centers_total", r.centers.size()},
              {"failed", failed},
              {"exceptional", exceptional},
              {"linking_radius", r.linking_radius},
              {"clusters", clusters}};
}

void write_center_table(std::ostream& out, const ScanReport& r) {
  for (int j = 0; j < r.n; ++j) out << 'a' << (j + 1) << ',';
  out << "value,fraction,exceptional\n";
  std::size_t next = 0;
  for (std::size_t k = 0; k < r.centers.size(); ++k) {
    for (int j = 0; j < r.n; ++j) out << format_double(r.centers[k][j]) << ',';
    const bool flagged = next < r.exceptional.size() && r.exceptional[next] == k;
    if (flagged) ++next;
    out << format_double(r.measures[k].value) << ',' << format_double(r.measures[k].fraction) << ','
        << (flagged ? 1 : 0) << '\n';
  }
}

}  // namespace transversal
