#include "ginitree/io.hpp"

#include <cstdio>

namespace ginitree {

void to_json(nlohmann::json& j, const EstimateRecord& r) {
    j = nlohmann::json{{"class", r.class_id},
                       {"regime", r.regime},
                       {"variant", r.variant},
                       {"param", r.parameter},
                       {"spine", r.spine},
                       {"replicates", r.replicates},
                       {"mean", r.mean},
                       {"se", r.se},
                       {"ci_lo", r.ci_lo},
                       {"ci_hi", r.ci_hi},
                       {"seed", r.seed},
                       {"wall_ms", r.wall_ms},
                       {"mean_size", r.mean_size}};
}

void from_json(const nlohmann::json& j, EstimateRecord& r) {
    j.at("class").get_to(r.class_id);
    j.at("regime").get_to(r.regime);
    j.at("variant").get_to(r.variant);
    j.at("param").get_to(r.parameter);
    j.at("spine").get_to(r.spine);
    j.at("replicates").get_to(r.replicates);
    j.at("mean").get_to(r.mean);
    j.at("se").get_to(r.se);
    j.at("ci_lo").get_to(r.ci_lo);
    j.at("ci_hi").get_to(r.ci_hi);
    j.at("seed").get_to(r.seed);
    j.at("wall_ms").get_to(r.wall_ms);
    j.at("mean_size").get_to(r.mean_size);
}

void to_json(nlohmann::json& j, const DualityReport& r) {
    j = nlohmann::json{{"class", r.class_id},
                       {"t", r.t},
                       {"mapped_n", r.mapped_n},
                       {"discrete", r.discrete},
                       {"poisson", r.poisson},
                       {"abs_difference", r.abs_difference},
                       {"pooled_se", r.pooled_se},
                       {"tolerance", r.tolerance},
                       {"pass", r.pass}};
}

void from_json(const nlohmann::json& j, DualityReport& r) {
    j.at("class").get_to(r.class_id);
    j.at("t").get_to(r.t);
    j.at("mapped_n").get_to(r.mapped_n);
    j.at("discrete").get_to(r.discrete);
    j.at("poisson").get_to(r.poisson);
    j.at("abs_difference").get_to(r.abs_difference);
    j.at("pooled_se").get_to(r.pooled_se);
    j.at("tolerance").get_to(r.tolerance);
    j.at("pass").get_to(r.pass);
}

std::string format_sig9(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.9g", v);
    return buf;
}

std::string csv_estimate_header() {
    return "class,regime,param,R,mean,se,ci_lo,ci_hi,seed,wall_ms";
}

std::string csv_estimate_row(const EstimateRecord& r) {
    return r.class_id + "," + r.regime + "," + format_sig9(r.parameter) + "," +
           std::to_string(r.replicates) + "," + format_sig9(r.mean) + "," +
           format_sig9(r.se) + "," + format_sig9(r.ci_lo) + "," +
           format_sig9(r.ci_hi) + "," + std::to_string(r.seed) + "," +
           format_sig9(r.wall_ms);
}

std::string csv_sweep_header() { return csv_estimate_header() + ",limit"; }

std::string csv_sweep_row(const SweepRow& row) {
    return csv_estimate_row(row.record) + "," + format_sig9(row.limit);
}

}  // namespace ginitree
