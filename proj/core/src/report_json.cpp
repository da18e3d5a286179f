#include "dualmod/report_json.hpp"

#include <stdexcept>

namespace dualmod {

using nlohmann::json;

json to_json_value(const Partition& p) { return json(p.parts()); }

Partition partition_from_json(const json& j) {
    if (!j.is_array()) throw std::invalid_argument("partition must be a JSON array");
    return Partition(j.get<std::vector<int>>());
}

json to_json_value(const splitter::SplitReport& r) {
    return json{
        {"lambda", to_json_value(r.lambda)},
        {"n", r.lambda.weight()},
        {"dim", r.dim},
        {"endo_dim", r.endo_dim},
        {"predicted_split", r.predicted_split},
        {"observed_split", r.observed_split},
        {"predicted_duality", verdict_name(r.predicted_duality)},
        {"observed_duality", verdict_name(r.observed_duality)},
        {"summand_dims", r.summand_dims},
        {"status", splitter::status_name(r.status)},
        {"detail", r.detail},
    };
}

splitter::SplitReport split_report_from_json(const json& j) {
    splitter::SplitReport r;
    r.lambda = partition_from_json(j.at("lambda"));
    if (j.at("n").get<int>() != r.lambda.weight()) throw std::invalid_argument("report: n does not match lambda");
    r.dim = j.at("dim").get<std::size_t>();
    r.endo_dim = j.at("endo_dim").get<std::size_t>();
    r.predicted_split = j.at("predicted_split").get<bool>();
    r.observed_split = j.at("observed_split").get<bool>();
    r.predicted_duality = parse_verdict(j.at("predicted_duality").get<std::string>());
    r.observed_duality = parse_verdict(j.at("observed_duality").get<std::string>());
    r.summand_dims = j.at("summand_dims").get<std::vector<std::size_t>>();
    r.status = splitter::parse_status(j.at("status").get<std::string>());
    r.detail = j.at("detail").get<std::string>();
    return r;
}

json to_json_value(const bressoud::Chain& c) {
    return json{
        {"mu", to_json_value(c.mu)},
        {"blocks", c.blocks.blocks},
        {"sigma", c.sigma},
        {"zeta", c.shifted.zeta},
        {"order", c.shifted.order},
        {"gamma", to_json_value(c.gamma)},
        {"lambda", to_json_value(c.lambda)},
    };
}

}  // namespace dualmod
