#include "splitfactor/report.hpp"

#include <json.hpp>

namespace splitfactor::report {

std::string factor_json(const Natural& n, const std::vector<Natural>& factors,
                        const SearchStats& stats) {
    nlohmann::ordered_json doc;
    doc["n"] = n.str();
    nlohmann::ordered_json list = nlohmann::ordered_json::array();
    for (const Natural& factor : factors) {
        list.push_back(factor.str());
    }
    doc["factors"] = std::move(list);
    doc["inner_iterations"] = stats.inner_iterations;
    doc["split_pairs_examined"] = stats.split_pairs_examined;
    doc["elapsed_ns"] = static_cast<std::uint64_t>(stats.elapsed.count());
    return doc.dump();
}

std::string factor_text(const Natural& n, const std::vector<Natural>& factors) {
    std::string line = n.str() + " =";
    bool first = true;
    for (const Natural& factor : factors) {
        line += first ? " " : " * ";
        line += factor.str();
        first = false;
    }
    return line;
}

}  // namespace splitfactor::report
