#include "hcwand/output.hpp"

#include <cmath>
#include <sstream>

#include <nlohmann/json.hpp>

namespace hcwand {

std::string format_double(double v) {
    if (std::isnan(v)) return "";
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
}

std::string scan_to_csv(const ScanResult& res) {
    std::ostringstream os;
    os << "lambda,count,a_star,a1,a2,deriv_at_x0\n";
    for (const ScanRow& r : res.rows) {
        os << format_double(r.lambda) << ',' << r.count << ',' << format_double(r.a_star) << ','
           << format_double(r.a1) << ',' << format_double(r.a2) << ','
           << format_double(r.criterion) << '\n';
    }
    return os.str();
}

static nlohmann::json json_or_null(double v) {
    if (std::isnan(v)) return nullptr;
    return v;
}

nlohmann::json scan_to_json(const ScanResult& res) {
    nlohmann::json j;
    j["config"] = {{"mode", mode_name(res.mode)}, {"k", res.k}, {"aux", res.aux}};
    j["rows"] = nlohmann::json::array();
    for (const ScanRow& r : res.rows) {
        j["rows"].push_back({{"lambda", r.lambda},
                             {"count", r.count},
                             {"a_star", json_or_null(r.a_star)},
                             {"a1", json_or_null(r.a1)},
                             {"a2", json_or_null(r.a2)},
                             {"deriv_at_x0", json_or_null(r.criterion)}});
    }
    j["critical"] = {{"closed_form", res.closed_form_cr},
                     {"empirical", json_or_null(res.empirical_cr)},
                     {"rel_err", json_or_null(res.rel_err)}};
    return j;
}

std::string curve_to_csv(const std::vector<LambdaCurvePoint>& rows) {
    std::ostringstream os;
    os << "t,lambda,a,c\n";
    for (const LambdaCurvePoint& r : rows)
        os << format_double(r.t) << ',' << format_double(r.lambda) << ',' << format_double(r.a)
           << ',' << format_double(r.c) << '\n';
    return os.str();
}

nlohmann::json curve_to_json(int k, double lambda2, const std::vector<LambdaCurvePoint>& rows) {
    nlohmann::json j;
    j["config"] = {{"mode", "curve"}, {"k", k}, {"lambda2", lambda2}};
    j["rows"] = nlohmann::json::array();
    for (const LambdaCurvePoint& r : rows)
        j["rows"].push_back({{"t", r.t}, {"lambda", r.lambda}, {"a", r.a}, {"c", r.c}});
    return j;
}

}  // namespace hcwand
