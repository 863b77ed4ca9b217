#pragma once

// JSON payloads for reports and the flat per-center CSV table. Payloads are
// deterministic functions of their inputs; wall-clock metadata is added by
// the caller under a separate key.

#include <ostream>

#include <nlohmann/json.hpp>

#include "transversal/affine.hpp"
#include "transversal/measure.hpp"
#include "transversal/scan.hpp"
#include "transversal/strata.hpp"
#include "transversal/tangency.hpp"

namespace transversal {

using Json = nlohmann::ordered_json;

Json to_json(const Eigen::Ref<const Eigen::VectorXd>& v);
Json to_json(const Box& box);
Json to_json(const MeasureEstimate& e);
Json to_json(const AffinePlane& plane);
Json to_json(const PlaneFit& fit);
Json to_json(const CriticalPoint& cp);
Json to_json(const ContainmentReport& r);
Json to_json(const Claim1Report& r);
Json to_json(const DichotomyReport& r);

/// Summary of a scan: grid, exceptional centers, clusters and fitted planes.
/// Per-center measures go to the CSV table instead.
Json to_json(const ScanReport& r);

/// Header "a1,...,an,value,fraction,exceptional"; shortest round-trip floats.
void write_center_table(std::ostream& out, const ScanReport& r);

}  // namespace transversal
