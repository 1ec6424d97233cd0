#pragma once

#include <string_view>
#include <vector>

namespace njconst::cli {

/// Parameter range for sweeps: a single value `v`, a list `v1,v2,...`, an
/// arithmetic progression `start:step:stop` (stop inclusive), or the empty
/// string for an empty range. Throws DomainError on malformed input.
[[nodiscard]] std::vector<double> parse_range(std::string_view text);

}  // namespace njconst::cli
