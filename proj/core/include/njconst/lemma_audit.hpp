#pragma once

#include <cstdint>

namespace njconst {

// The parameter point and grid sizes of an audit. Grids are uniform and include
// the endpoints 0 and 1/lambda for x1, y1 and 0 and 1 for t.
struct AuditGrid {
    int resolution = 201;
    double lambda = 2.0;
    double p = 3.0;
    double xi = 1.0;
    double eta = 1.0;
    int t_samples = 51;
};

struct AuditPoint {
    double t = 0.0;
    double x1 = 0.0;
    double y1 = 0.0;
};

struct AuditReport {
    // Minimum of (bound - function) over the grid.
    double min_slack = 0.0;
    AuditPoint argmin;
    // Grid points with slack below -1e-9 (-1e-12 for the monotonicity audit).
    std::int64_t violations = 0;
    std::int64_t cases_audited = 0;
};

inline constexpr double kAuditSlackTolerance = 1e-9;
inline constexpr double kMonotoneSlackTolerance = 1e-12;

// The interior bound terms use the factor (2 eta xi - eta) t throughout.

/// (xi + eta t lambda y1)^p + [xi^2 + eta^2 t^2 - 2 eta xi t y1 / lambda
///   + 2 eta xi t sqrt(1 - lambda^-2) sqrt(1 - y1^2)]^(p/2)
[[nodiscard]] double lemma1_f(double lambda, double p, double xi, double eta, double t, double y1);

/// Maximum of the three bound terms for lemma1_f. The second term uses
/// max(xi^2, xi^p) + (xi + eta t)^p.
[[nodiscard]] double lemma1_f_bound(double lambda, double p, double xi, double eta, double t);

/// lambda^p (xi x1 + eta t y1)^p + (xi^2 + eta^2 t^2 - 2 eta xi t x1 y1
///   + 2 eta xi t sqrt(1 - x1^2) sqrt(1 - y1^2))^(p/2)
[[nodiscard]] double lemma2_F(double lambda, double p, double xi, double eta, double t, double x1,
                              double y1);

enum class Lemma2Variant {
    // Third term led by (xi + eta t)^p.
    scaled_lead,
    // Third term led by (xi + eta)^p; never smaller than scaled_lead.
    full_lead,
};

/// Maximum of the three bound terms for lemma2_F. Requires p > 2; the exponent
/// -2p/(p-2) is singular at p = 2.
[[nodiscard]] double lemma2_bound(double lambda, double p, double xi, double eta, double t,
                                  Lemma2Variant variant = Lemma2Variant::scaled_lead);

/// (xi^2 + eta^2 t^2 - 4 eta xi t / lambda^2 + 2 eta xi t)^(p/2) / (2^(p-2) (xi^p + eta^p) (1 + t^p))
[[nodiscard]] double theorem_phi(double lambda, double p, double xi, double eta, double t);

[[nodiscard]] AuditReport audit_lemma1(const AuditGrid& grid);

/// Requires p > 2 and lambda^2 (1 - 1/lambda^2)^(p/2) >= 1; otherwise throws
/// PreconditionError whose message carries the condition value.
[[nodiscard]] AuditReport audit_lemma2(const AuditGrid& grid,
                                       Lemma2Variant variant = Lemma2Variant::scaled_lead);

/// Checks theorem_phi is nondecreasing on t_samples equispaced points of [0, 1].
/// Requires lambda >= sqrt(2).
[[nodiscard]] AuditReport audit_phi_monotone(double lambda, double p, double xi, double eta,
                                             int t_samples = 51);

}  // namespace njconst
