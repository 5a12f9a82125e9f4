#include "zeck/identity_json.hpp"

#include <algorithm>

namespace zeck {

nlohmann::json identity_to_json(const Identity& identity) {
    ShiftFamily sorted = identity.shifts;
    std::sort(sorted.begin(), sorted.end());
    return nlohmann::json{
        {"shifts", sorted},
        {"support", identity.support.elements()},
        {"n_min", identity.n_min},
    };
}

Identity identity_from_json(const nlohmann::json& doc) {
    ShiftFamily shifts = doc.at("shifts").get<std::vector<FibIndex>>();
    std::sort(shifts.begin(), shifts.end());
    auto support_elements = doc.at("support").get<std::vector<FibIndex>>();
    FibIndex n_min = doc.at("n_min").get<FibIndex>();
    return {std::move(shifts), make_holey(std::move(support_elements)), n_min};
}

}  // namespace zeck
