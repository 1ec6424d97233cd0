#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

#include "njconst/spaces.hpp"

namespace njconst {

// Grid resolution and refinement schedule for supremum estimation.
//
// The coarse grid places `coarse_angles` equispaced angles on [0, 2pi) for each
// of x and y and `t_samples` points on [0, 1] inclusive. Doubling coarse_angles
// and taking 2 * t_samples - 1 yields a grid that contains the original one.
// Each refinement round samples `refine_points` per dimension in a window
// around the incumbent, then multiplies the window half-width by `shrink`.
struct SearchConfig {
    int coarse_angles = 512;
    int t_samples = 129;
    int refine_rounds = 3;
    double shrink = 0.1;
    int refine_points = 9;
    // 0 selects std::thread::hardware_concurrency(). Results do not depend on it.
    unsigned workers = 0;

    void validate() const;
    friend bool operator==(const SearchConfig&, const SearchConfig&) = default;
};

// A lower bound for a supremum together with the point that attains it.
//
// For the skew estimators the witness is expressed in the sphere-and-t form:
// value == objective_sphere_t(space, p, u, v, witness_x, witness_y, witness_t)
// where (u, v) = (xi, eta), or (eta, xi) when weights_swapped is set. The
// swapped form covers pairs with ||y|| > ||x|| in the unrestricted definition.
struct Estimate {
    double value = 0.0;
    Vector2 witness_x;
    Vector2 witness_y;
    double witness_t = 0.0;
    bool weights_swapped = false;
    // Best value of the (xi, eta) form and of the (eta, xi) form.
    std::array<double, 2> form_values{};
    std::uint64_t evaluations = 0;
    SearchConfig config;
};

/// (||xi x + eta y||^p + ||eta x - xi y||^p) / (2^(p-2) (xi^p + eta^p) (||x||^p + ||y||^p))
[[nodiscard]] double ratio_cnj_skew(const SpaceDescriptor& space, double p, double xi, double eta,
                                    const Vector2& x, const Vector2& y);

/// (||xi x + eta t y||^p + ||eta x - xi t y||^p) / (2^(p-2) (xi^p + eta^p) (1 + t^p)),
/// for x, y on the unit sphere. Throws PreconditionError when either vector is
/// off the sphere by more than 1e-9 or t is outside [0, 1].
[[nodiscard]] double objective_sphere_t(const SpaceDescriptor& space, double p, double xi, double eta,
                                        const Vector2& x, const Vector2& y, double t);

/// (||x + t y||^2 + ||x - t y||^2) / 2
[[nodiscard]] double gamma_objective(const SpaceDescriptor& space, const Vector2& x, const Vector2& y,
                                     double t);

/// (||xi x + eta y||^2 + ||eta x - xi y||^2) / (2 (||x||^2 + ||y||^2))
[[nodiscard]] double lyj_prime_objective(const SpaceDescriptor& space, double xi, double eta,
                                         const Vector2& x, const Vector2& y);

/// sup over x, y on the sphere of gamma_objective at fixed t. witness_t == t.
[[nodiscard]] Estimate gamma(const SpaceDescriptor& space, double t, const SearchConfig& config = {});

/// von Neumann-Jordan constant, sup over t of gamma(t) / (1 + t^2).
[[nodiscard]] Estimate estimate_cnj(const SpaceDescriptor& space, const SearchConfig& config = {});

/// Skew generalized constant. Searches both weight orders of the sphere-and-t
/// form and reports the larger; both are kept in Estimate::form_values.
[[nodiscard]] Estimate estimate_skew(const SpaceDescriptor& space, double p, double xi, double eta,
                                     const SearchConfig& config = {});

/// The same supremum on the Banas-Fraczek space with x and y restricted to
/// extreme points of the unit ball: x = (x1, sqrt(1 - x1^2)),
/// y = (y1, +-sqrt(1 - y1^2)), |x1|, |y1| <= 1/lambda. Each first coordinate
/// is sampled at coarse_angles / 4 + 1 points.
[[nodiscard]] Estimate estimate_skew_extreme_bf(double lambda, double p, double xi, double eta,
                                                const SearchConfig& config = {});

/// L_YJ; shares the defining ratio of the p = 2 skew constant.
[[nodiscard]] Estimate estimate_lyj(const SpaceDescriptor& space, double xi, double eta,
                                    const SearchConfig& config = {});

/// L'_YJ, both vectors on the unit sphere. witness_t is 1.
[[nodiscard]] Estimate estimate_lyj_prime(const SpaceDescriptor& space, double xi, double eta,
                                          const SearchConfig& config = {});

namespace kind {
struct CNJ {
    friend bool operator==(const CNJ&, const CNJ&) = default;
};
struct CNJp {
    double p = 2.0;
    friend bool operator==(const CNJp&, const CNJp&) = default;
};
struct CNJskew {
    double p = 2.0;
    double xi = 1.0;
    double eta = 1.0;
    friend bool operator==(const CNJskew&, const CNJskew&) = default;
};
struct LYJ {
    double xi = 1.0;
    double eta = 1.0;
    friend bool operator==(const LYJ&, const LYJ&) = default;
};
struct LYJprime {
    double xi = 1.0;
    double eta = 1.0;
    friend bool operator==(const LYJprime&, const LYJprime&) = default;
};
}  // namespace kind

using ConstantKind = std::variant<kind::CNJ, kind::CNJp, kind::CNJskew, kind::LYJ, kind::LYJprime>;

void require_valid(const ConstantKind& constant);

/// `cnj`, `cnjp:p=<v>`, `cnjskew:p=<v>,xi=<v>,eta=<v>`, `lyj:xi=<v>,eta=<v>`,
/// `lyjprime:xi=<v>,eta=<v>`.
[[nodiscard]] ConstantKind parse_constant(std::string_view text);
[[nodiscard]] std::string to_string(const ConstantKind& constant);

[[nodiscard]] Estimate estimate(const SpaceDescriptor& space, const ConstantKind& constant,
                                const SearchConfig& config = {});

}  // namespace njconst
