#pragma once

// JSON plane-set files ("grasspack-planes/1").
//
// {
//   "format": "grasspack-planes/1",
//   "m": 4, "n": 2, "N": 18,
//   "provenance": "theorem1 i=2 k=1",
//   "exactness": "exact" | "float",
//   "representation": "projection" | "basis",
//   "half_scale_convention": "value = entry * 2^(-half_scale/2)",
//   "claimed_d2": "1",                         (optional)
//   "planes": [ {"half_scale": 2, "rows": [[1,1,0,0], ...]} ]   exact: m x m projection
//          or [ {"rows": [[0.57735, ...], ...]} ]               float: n x m orthonormal rows
//   "report": { ... }                          (optional)
// }

#include "grasspack/geometry.hpp"

#include <json.hpp>

#include <string>

namespace grasspack {

inline constexpr const char* kPlaneSetFormat = "grasspack-planes/1";

nlohmann::json report_to_json(const PackingReport& report);
nlohmann::json planeset_to_json(const Packing& packing, const PackingReport* report = nullptr);
// Throws UsageError on any schema violation.
Packing planeset_from_json(const nlohmann::json& doc);

void write_planeset(const std::string& path, const Packing& packing, const PackingReport* report = nullptr);
Packing read_planeset(const std::string& path);

}  // namespace grasspack
