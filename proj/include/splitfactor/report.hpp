#pragma once

#include "splitfactor/factor.hpp"

#include <string>
#include <vector>

namespace splitfactor::report {

/// Single JSON object with keys "n", "factors" (decimal strings),
/// "inner_iterations", "split_pairs_examined", "elapsed_ns".
std::string factor_json(const Natural& n, const std::vector<Natural>& factors,
                        const SearchStats& stats);

/// "125 = 5 * 5 * 5"
std::string factor_text(const Natural& n, const std::vector<Natural>& factors);

}  // namespace splitfactor::report
