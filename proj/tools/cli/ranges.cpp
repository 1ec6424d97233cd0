#include "cli/ranges.hpp"

#include <charconv>
#include <cmath>
#include <string>

#include "njconst/errors.hpp"

namespace njconst::cli {

namespace {

double to_number(std::string_view token) {
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc() || ptr != token.data() + token.size() || !std::isfinite(value)) {
        throw DomainError("cannot parse range value '" + std::string(token) + "'");
    }
    return value;
}

}  // namespace

std::vector<double> parse_range(std::string_view text) {
    std::vector<double> values;
    if (text.empty()) return values;

    if (text.find(':') != std::string_view::npos) {
        const auto first = text.find(':');
        const auto second = text.find(':', first + 1);
        if (second == std::string_view::npos || text.find(':', second + 1) != std::string_view::npos) {
            throw DomainError("progression must have the form start:step:stop");
        }
        const double start = to_number(text.substr(0, first));
        const double step = to_number(text.substr(first + 1, second - first - 1));
        const double stop = to_number(text.substr(second + 1));
        if (!(step > 0.0)) throw DomainError("progression step must be positive");
        const double span = (stop - start) / step;
        if (span > 1e6) throw DomainError("progression has too many terms");
        // stop is inclusive up to rounding of the step count.
        const auto terms = span < -1e-9 ? -1 : static_cast<long>(std::floor(span + 1e-9));
        for (long k = 0; k <= terms; ++k) values.push_back(start + static_cast<double>(k) * step);
        return values;
    }

    std::string_view rest = text;
    while (true) {
        const auto comma = rest.find(',');
        values.push_back(to_number(rest.substr(0, comma)));
        if (comma == std::string_view::npos) break;
        rest = rest.substr(comma + 1);
    }
    return values;
}

}  // namespace njconst::cli
