#pragma once

#include <string>

#include <nlohmann/json_fwd.hpp>

#include "hcwand/scan.hpp"

// CSV / JSON emission of scan and curve tables.  The two formats carry the
// same values; a parsed CSV row must match the JSON row exactly.

namespace hcwand {

// header: lambda,count,a_star,a1,a2,deriv_at_x0 (empty fields when absent)
std::string scan_to_csv(const ScanResult& res);
nlohmann::json scan_to_json(const ScanResult& res);

// header: t,lambda,a,c
std::string curve_to_csv(const std::vector<LambdaCurvePoint>& rows);
nlohmann::json curve_to_json(int k, double lambda2, const std::vector<LambdaCurvePoint>& rows);

std::string format_double(double v);  // round-trippable, empty for NaN

}  // namespace hcwand
