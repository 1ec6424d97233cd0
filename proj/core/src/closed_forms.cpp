#include "njconst/closed_forms.hpp"

#include <cmath>

#include "njconst/constants.hpp"
#include "njconst/errors.hpp"
#include "numeric.hpp"

namespace njconst {

namespace {

void require_lambda(double lambda) {
    if (!(lambda > 1.0) || !std::isfinite(lambda)) throw DomainError("lambda must exceed 1");
}

void require_formula_exponent(double p) {
    if (!(p >= 2.0) || !std::isfinite(p)) throw DomainError("exponent p must be a finite value >= 2");
}

void require_weights(double xi, double eta) {
    if (!(xi > 0.0) || !std::isfinite(xi)) throw DomainError("xi must be positive");
    if (!(eta > 0.0) || !std::isfinite(eta)) throw DomainError("eta must be positive");
}

ClosedFormResult with_condition(double value, double lambda, double p, const char* name) {
    const ConditionResult c = condition_bf(lambda, p);
    return {value, c.met, c.value, name};
}

}  // namespace

double cf_cnj_bf(double lambda) {
    require_lambda(lambda);
    return 2.0 - 1.0 / (lambda * lambda);
}

ConditionResult condition_bf(double lambda, double p) {
    require_lambda(lambda);
    require_formula_exponent(p);
    // lambda^2 u^(p/2) with u = 1 - 1/lambda^2, written as (lambda^2 - 1) u^(p/2 - 1)
    // so that p = 2 reduces to lambda^2 - 1 without a rounding detour.
    const double lambda_sq = lambda * lambda;
    const double u = 1.0 - 1.0 / lambda_sq;
    const double value = (lambda_sq - 1.0) * std::pow(u, 0.5 * p - 1.0);
    const bool met = value >= 1.0;
    return {value, met, met && p > 2.0};
}

ClosedFormResult cf_cnjp_bf(double lambda, double p) {
    require_lambda(lambda);
    require_formula_exponent(p);
    const double u = 1.0 - 1.0 / (lambda * lambda);
    return with_condition(1.0 + detail::pow_half(u, p), lambda, p, "1+(1-1/lambda^2)^(p/2)");
}

ClosedFormResult cf_skew_bf(double lambda, double p, double xi, double eta) {
    require_lambda(lambda);
    require_formula_exponent(p);
    require_weights(xi, eta);
    const double sum = xi + eta;
    // (xi + eta)^2 - 4 xi eta / lambda^2 >= (xi - eta)^2 + 4 xi eta (1 - 1/lambda^2) > 0
    const double inner = sum * sum - 4.0 * xi * eta / (lambda * lambda);
    const double num = std::pow(sum, p) + detail::pow_half(inner, p);
    const double den = std::exp2(p - 1.0) * (std::pow(xi, p) + std::pow(eta, p));
    return with_condition(num / den, lambda, p,
                          "((xi+eta)^p+[(xi+eta)^2-4xi*eta/lambda^2]^(p/2))/(2^(p-1)(xi^p+eta^p))");
}

std::pair<Vector2, Vector2> witness_pair(double lambda) {
    require_lambda(lambda);
    const double first = 1.0 / lambda;
    const double second = std::sqrt(1.0 - first * first);
    return {Vector2(first, second), Vector2(first, -second)};
}

double witness_ratio(double lambda, double p, double xi, double eta) {
    require_formula_exponent(p);
    require_weights(xi, eta);
    const auto [x, y] = witness_pair(lambda);
    return ratio_cnj_skew(BanasFraczek{lambda}, p, xi, eta, x, y);
}

}  // namespace njconst
