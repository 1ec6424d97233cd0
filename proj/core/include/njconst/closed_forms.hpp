#pragma once

#include <string>
#include <utility>

#include "njconst/spaces.hpp"

namespace njconst {

// A closed-form value together with the applicability quantity
// lambda^2 (1 - 1/lambda^2)^(p/2); the formula is claimed only when it is >= 1.
struct ClosedFormResult {
    double value = 0.0;
    bool condition_met = false;
    double condition_value = 0.0;
    std::string formula_name;
};

struct ConditionResult {
    double value = 0.0;
    bool met = false;
    // For p > 2 the condition forces lambda >= sqrt(2).
    bool implies_lambda_at_least_sqrt2 = false;
};

/// 2 - 1/lambda^2
[[nodiscard]] double cf_cnj_bf(double lambda);

/// 1 + (1 - 1/lambda^2)^(p/2), p >= 2.
[[nodiscard]] ClosedFormResult cf_cnjp_bf(double lambda, double p);

/// ((xi + eta)^p + [(xi + eta)^2 - 4 xi eta / lambda^2]^(p/2)) / (2^(p-1) (xi^p + eta^p))
[[nodiscard]] ClosedFormResult cf_skew_bf(double lambda, double p, double xi, double eta);

[[nodiscard]] ConditionResult condition_bf(double lambda, double p);

/// x = (1/lambda, sqrt(1 - 1/lambda^2)), y = (1/lambda, -sqrt(1 - 1/lambda^2)).
[[nodiscard]] std::pair<Vector2, Vector2> witness_pair(double lambda);

/// ratio_cnj_skew on the Banas-Fraczek space at witness_pair(lambda).
[[nodiscard]] double witness_ratio(double lambda, double p, double xi, double eta);

}  // namespace njconst
