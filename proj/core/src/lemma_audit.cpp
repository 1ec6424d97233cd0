#include "njconst/lemma_audit.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "njconst/closed_forms.hpp"
#include "njconst/errors.hpp"
#include "njconst/spaces.hpp"
#include "numeric.hpp"

namespace njconst {

namespace {

using detail::pow_half;

constexpr double kCoordinateSlack = 4.0 * std::numeric_limits<double>::epsilon();

void require_parameters(double lambda, double p, double xi, double eta) {
    if (!(lambda > 1.0) || !std::isfinite(lambda)) throw DomainError("lambda must exceed 1");
    if (!(p >= 2.0) || !std::isfinite(p)) throw DomainError("exponent p must be a finite value >= 2");
    if (!(xi > 0.0) || !std::isfinite(xi)) throw DomainError("xi must be positive");
    if (!(eta > 0.0) || !std::isfinite(eta)) throw DomainError("eta must be positive");
}

void require_t(double t) {
    if (!(t >= 0.0 && t <= 1.0)) throw DomainError("t must lie in [0, 1], got " + format_number(t));
}

void require_coordinate(double z, double lambda, const char* name) {
    const double limit = 1.0 / lambda;
    if (!(z >= 0.0 && z <= limit * (1.0 + kCoordinateSlack))) {
        throw DomainError(std::string(name) + " must lie in [0, 1/lambda], got " + format_number(z));
    }
}

void require_grid(const AuditGrid& grid) {
    require_parameters(grid.lambda, grid.p, grid.xi, grid.eta);
    if (grid.resolution < 3) throw DomainError("audit resolution must be at least 3");
    if (grid.t_samples < 2) throw DomainError("audit t_samples must be at least 2");
}

double grid_value(int k, int count, double hi) {
    if (k == count - 1) return hi;
    return hi * static_cast<double>(k) / (count - 1);
}

// xi^2 + eta^2 t^2 - 4 eta xi t / lambda^2 + 2 eta xi t, i.e. the bracket at x1 = y1 = 1/lambda.
double corner_bracket(double lambda, double xi, double eta, double t) {
    return xi * xi + eta * eta * t * t - 4.0 * eta * xi * t / (lambda * lambda) + 2.0 * eta * xi * t;
}

// 2 [xi - (2 eta xi - eta) t] / lambda^2
double interior_correction(double lambda, double xi, double eta, double t) {
    return 2.0 * (xi - (2.0 * eta * xi - eta) * t) / (lambda * lambda);
}

void record(AuditReport& report, double slack, AuditPoint where, double tolerance) {
    if (report.cases_audited == 0 || slack < report.min_slack) {
        report.min_slack = slack;
        report.argmin = where;
    }
    if (slack < -tolerance) ++report.violations;
    ++report.cases_audited;
}

}  // namespace

double lemma1_f(double lambda, double p, double xi, double eta, double t, double y1) {
    require_parameters(lambda, p, xi, eta);
    require_t(t);
    require_coordinate(y1, lambda, "y1");
    const double cross = 2.0 * eta * xi * t;
    const double bracket = xi * xi + eta * eta * t * t - cross * y1 / lambda +
                           cross * std::sqrt(1.0 - 1.0 / (lambda * lambda)) * std::sqrt(1.0 - y1 * y1);
    return std::pow(xi + eta * t * lambda * y1, p) + pow_half(bracket, p);
}

double lemma1_f_bound(double lambda, double p, double xi, double eta, double t) {
    require_parameters(lambda, p, xi, eta);
    require_t(t);
    const double s = xi + eta * t;
    const double sp = std::pow(s, p);
    const double interior = sp + std::pow(s, p - 2.0) * interior_correction(lambda, xi, eta, t);
    // f(0) = xi^p + (...); max(xi^2, xi^p) covers both the xi^2 and xi^p forms.
    const double at_zero = std::max(xi * xi, std::pow(xi, p)) + sp;
    const double at_limit = sp + pow_half(corner_bracket(lambda, xi, eta, t), p);
    return std::max({interior, at_zero, at_limit});
}

double lemma2_F(double lambda, double p, double xi, double eta, double t, double x1, double y1) {
    require_parameters(lambda, p, xi, eta);
    require_t(t);
    require_coordinate(x1, lambda, "x1");
    require_coordinate(y1, lambda, "y1");
    const double cross = 2.0 * eta * xi * t;
    const double bracket = xi * xi + eta * eta * t * t - cross * x1 * y1 +
                           cross * std::sqrt(1.0 - x1 * x1) * std::sqrt(1.0 - y1 * y1);
    return std::pow(lambda, p) * std::pow(xi * x1 + eta * t * y1, p) + pow_half(bracket, p);
}

double lemma2_bound(double lambda, double p, double xi, double eta, double t, Lemma2Variant variant) {
    if (!(p > 2.0)) {
        throw DomainError("lemma2_bound requires p > 2: the exponent -2p/(p-2) is singular at p = 2 (got p = " +
                          format_number(p) + ")");
    }
    require_parameters(lambda, p, xi, eta);
    require_t(t);
    const double s = xi + eta * t;
    const double sp = std::pow(s, p);
    const double critical = (1.0 + std::pow(lambda, -2.0 * p / (p - 2.0))) * sp;
    const double at_limit = sp + pow_half(corner_bracket(lambda, xi, eta, t), p);
    const double lead = variant == Lemma2Variant::full_lead ? std::pow(xi + eta, p) : sp;
    const double interior = lead + std::pow(s, p - 2.0) * interior_correction(lambda, xi, eta, t);
    return std::max({critical, at_limit, interior});
}

double theorem_phi(double lambda, double p, double xi, double eta, double t) {
    require_parameters(lambda, p, xi, eta);
    require_t(t);
    const double den = std::exp2(p - 2.0) * (std::pow(xi, p) + std::pow(eta, p)) * (1.0 + std::pow(t, p));
    return pow_half(corner_bracket(lambda, xi, eta, t), p) / den;
}

AuditReport audit_lemma1(const AuditGrid& grid) {
    require_grid(grid);
    const double limit = 1.0 / grid.lambda;
    AuditReport report;
    for (int k = 0; k < grid.t_samples; ++k) {
        const double t = grid_value(k, grid.t_samples, 1.0);
        const double bound = lemma1_f_bound(grid.lambda, grid.p, grid.xi, grid.eta, t);
        for (int j = 0; j < grid.resolution; ++j) {
            const double y1 = grid_value(j, grid.resolution, limit);
            const double f = lemma1_f(grid.lambda, grid.p, grid.xi, grid.eta, t, y1);
            record(report, bound - f, {t, limit, y1}, kAuditSlackTolerance);
        }
    }
    return report;
}

AuditReport audit_lemma2(const AuditGrid& grid, Lemma2Variant variant) {
    if (!(grid.p > 2.0)) {
        throw DomainError("audit_lemma2 requires p > 2: the exponent -2p/(p-2) is singular at p = 2 (got p = " +
                          format_number(grid.p) + ")");
    }
    require_grid(grid);
    const ConditionResult condition = condition_bf(grid.lambda, grid.p);
    if (!condition.met) {
        throw PreconditionError("audit_lemma2 requires lambda^2 (1 - 1/lambda^2)^(p/2) >= 1; condition_value = " +
                                format_number(condition.value));
    }
    const double limit = 1.0 / grid.lambda;
    AuditReport report;
    for (int k = 0; k < grid.t_samples; ++k) {
        const double t = grid_value(k, grid.t_samples, 1.0);
        const double bound = lemma2_bound(grid.lambda, grid.p, grid.xi, grid.eta, t, variant);
        for (int i = 0; i < grid.resolution; ++i) {
            const double x1 = grid_value(i, grid.resolution, limit);
            for (int j = 0; j < grid.resolution; ++j) {
                const double y1 = grid_value(j, grid.resolution, limit);
                const double f = lemma2_F(grid.lambda, grid.p, grid.xi, grid.eta, t, x1, y1);
                record(report, bound - f, {t, x1, y1}, kAuditSlackTolerance);
            }
        }
    }
    return report;
}

AuditReport audit_phi_monotone(double lambda, double p, double xi, double eta, int t_samples) {
    require_parameters(lambda, p, xi, eta);
    if (lambda < std::numbers::sqrt2 * (1.0 - kCoordinateSlack)) {
        throw PreconditionError("monotonicity of phi is claimed only for lambda >= sqrt(2); got lambda = " +
                                format_number(lambda));
    }
    if (t_samples < 2) throw DomainError("t_samples must be at least 2");
    AuditReport report;
    double previous = theorem_phi(lambda, p, xi, eta, 0.0);
    for (int k = 1; k < t_samples; ++k) {
        const double t_prev = grid_value(k - 1, t_samples, 1.0);
        const double t = grid_value(k, t_samples, 1.0);
        const double current = theorem_phi(lambda, p, xi, eta, t);
        record(report, current - previous, {t_prev, 0.0, 0.0}, kMonotoneSlackTolerance);
        previous = current;
    }
    return report;
}

}  // namespace njconst
