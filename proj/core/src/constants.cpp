#include "njconst/constants.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include "grid_search.hpp"
#include "njconst/errors.hpp"

namespace njconst {

using detail::Axis;
using detail::Coords;
using detail::pow_half;
using detail::SearchPoint;

void SearchConfig::validate() const {
    if (coarse_angles < 3) throw DomainError("coarse_angles must be at least 3");
    if (t_samples < 3) throw DomainError("t_samples must be at least 3");
    if (refine_rounds < 0) throw DomainError("refine_rounds must be nonnegative");
    if (refine_points < 3) throw DomainError("refine_points must be at least 3");
    if (!(shrink > 0.0 && shrink < 1.0)) throw DomainError("shrink must lie in (0, 1)");
}

namespace {

void require_exponent(double p) {
    if (!(p >= 1.0) || !std::isfinite(p)) throw DomainError("exponent p must be a finite value >= 1");
}

void require_weights(double xi, double eta) {
    if (!(xi > 0.0) || !std::isfinite(xi)) throw DomainError("xi must be positive");
    if (!(eta > 0.0) || !std::isfinite(eta)) throw DomainError("eta must be positive");
}

void require_unit(const SpaceDescriptor& space, const Vector2& v, const char* name) {
    const double n = norm(space, v);
    if (std::abs(n - 1.0) > 1e-9) {
        throw PreconditionError(std::string(name) + " must lie on the unit sphere (norm " + format_number(n) +
                                ")");
    }
}

double skew_scale(double p, double xi, double eta) {
    return std::exp2(p - 2.0) * (std::pow(xi, p) + std::pow(eta, p));
}

// ||(a, b)||^p for each space, without re-validating per call.
struct EuclideanPower {
    double p;
    double operator()(double a, double b) const { return pow_half(a * a + b * b, p); }
};

struct BanasFraczekPower {
    double lambda_sq;
    double p;
    double operator()(double a, double b) const {
        const double a2 = a * a;
        return pow_half(std::max(lambda_sq * a2, a2 + b * b), p);
    }
};

struct GenericPower {
    SpaceDescriptor space;
    double p;
    double operator()(double a, double b) const { return std::pow(norm(space, Vector2(a, b)), p); }
};

template <class F>
decltype(auto) with_norm_power(const SpaceDescriptor& space, double p, F&& f) {
    if (std::holds_alternative<Euclidean>(space)) return f(EuclideanPower{p});
    if (const auto* bf = std::get_if<BanasFraczek>(&space)) {
        return f(BanasFraczekPower{bf->lambda * bf->lambda, p});
    }
    return f(GenericPower{space, p});
}

struct Plane {
    double a;
    double b;
};

struct PairSearch {
    SearchPoint point;
    Plane x;
    Plane y;
};

// Maximizes (P(a x + b t y) + P(b x - a t y)) / den(t) with x = x_at(u),
// y = y_at(v), over the (u, v, t) axes.
template <class Power, class XAt, class YAt, class Den>
PairSearch search_pairs(const std::array<Axis, 3>& axes, const Power& power, const XAt& x_at,
                        const YAt& y_at, double a, double b, const Den& den, const SearchConfig& config,
                        std::uint64_t& evaluations) {
    auto combine = [&](Plane x, Plane y, double t) {
        const double ya = t * y.a;
        const double yb = t * y.b;
        return power(a * x.a + b * ya, a * x.b + b * yb) + power(b * x.a - a * ya, b * x.b - a * yb);
    };

    std::vector<Plane> xs(axes[0].count);
    std::vector<Plane> ys(axes[1].count);
    std::vector<double> ts(axes[2].count);
    std::vector<double> dens(axes[2].count);
    for (int i = 0; i < axes[0].count; ++i) xs[i] = x_at(axes[0].sample(i));
    for (int j = 0; j < axes[1].count; ++j) ys[j] = y_at(axes[1].sample(j));
    for (int k = 0; k < axes[2].count; ++k) {
        ts[k] = axes[2].sample(k);
        dens[k] = den(ts[k]);
    }

    const std::array<int, 3> counts{axes[0].count, axes[1].count, axes[2].count};
    const auto hit = detail::scan_grid(
        counts, [&](int i, int j, int k) { return combine(xs[i], ys[j], ts[k]) / dens[k]; },
        detail::resolve_workers(config.workers));
    evaluations += static_cast<std::uint64_t>(counts[0]) * counts[1] * counts[2];

    const SearchPoint start{{axes[0].sample(hit.index[0]), axes[1].sample(hit.index[1]), ts[hit.index[2]]},
                            hit.value};
    const auto best = detail::refine(
        axes, start, config,
        [&](const Coords& c) { return combine(x_at(c[0]), y_at(c[1]), c[2]) / den(c[2]); }, evaluations);
    return {best, x_at(best.coords[0]), y_at(best.coords[1])};
}

Axis angle_axis(const SearchConfig& config) { return {0.0, 2.0 * std::numbers::pi, config.coarse_angles, true}; }
Axis t_axis(const SearchConfig& config) { return {0.0, 1.0, config.t_samples, false}; }
Axis pinned_axis(double value) { return {value, value, 1, false}; }

auto sphere_map(const SpaceDescriptor& space) {
    return [space](double theta) {
        const Vector2 v = sphere_point(space, theta);
        return Plane{v.a(), v.b()};
    };
}

Estimate make_estimate(const PairSearch& found, bool swapped, const SearchConfig& config) {
    Estimate e;
    e.value = found.point.value;
    e.witness_x = Vector2(found.x.a, found.x.b);
    e.witness_y = Vector2(found.y.a, found.y.b);
    e.witness_t = found.point.coords[2];
    e.weights_swapped = swapped;
    e.config = config;
    return e;
}

Estimate single_form(const PairSearch& found, const SearchConfig& config, std::uint64_t evaluations) {
    Estimate e = make_estimate(found, false, config);
    e.form_values = {found.point.value, found.point.value};
    e.evaluations = evaluations;
    return e;
}

// Runs `run(a, b)` for (xi, eta) and, when the weights differ, for (eta, xi);
// keeps the larger, preferring the first on ties.
template <class Run>
Estimate best_of_forms(double xi, double eta, const SearchConfig& config, const Run& run) {
    std::uint64_t evaluations = 0;
    const PairSearch forward = run(xi, eta, evaluations);
    Estimate e = make_estimate(forward, false, config);
    e.form_values = {forward.point.value, forward.point.value};
    if (xi != eta) {
        const PairSearch swapped = run(eta, xi, evaluations);
        e.form_values[1] = swapped.point.value;
        if (swapped.point.value > forward.point.value) {
            e = make_estimate(swapped, true, config);
            e.form_values = {forward.point.value, swapped.point.value};
        }
    }
    e.evaluations = evaluations;
    return e;
}

}  // namespace

double ratio_cnj_skew(const SpaceDescriptor& space, double p, double xi, double eta, const Vector2& x,
                      const Vector2& y) {
    require_valid(space);
    require_exponent(p);
    require_weights(xi, eta);
    if (x.is_zero() && y.is_zero()) throw DomainError("x and y must not both be zero");
    const double num = std::pow(norm(space, xi * x + eta * y), p) + std::pow(norm(space, eta * x - xi * y), p);
    const double den = skew_scale(p, xi, eta) * (std::pow(norm(space, x), p) + std::pow(norm(space, y), p));
    return num / den;
}

double objective_sphere_t(const SpaceDescriptor& space, double p, double xi, double eta, const Vector2& x,
                          const Vector2& y, double t) {
    require_valid(space);
    require_exponent(p);
    require_weights(xi, eta);
    if (!(t >= 0.0 && t <= 1.0)) throw PreconditionError("t must lie in [0, 1]");
    require_unit(space, x, "x");
    require_unit(space, y, "y");
    const Vector2 ty = t * y;
    const double num = std::pow(norm(space, xi * x + eta * ty), p) + std::pow(norm(space, eta * x - xi * ty), p);
    return num / (skew_scale(p, xi, eta) * (1.0 + std::pow(t, p)));
}

double gamma_objective(const SpaceDescriptor& space, const Vector2& x, const Vector2& y, double t) {
    const Vector2 ty = t * y;
    const double plus = norm(space, x + ty);
    const double minus = norm(space, x - ty);
    return 0.5 * (plus * plus + minus * minus);
}

double lyj_prime_objective(const SpaceDescriptor& space, double xi, double eta, const Vector2& x,
                           const Vector2& y) {
    require_weights(xi, eta);
    const double s = norm(space, xi * x + eta * y);
    const double d = norm(space, eta * x - xi * y);
    const double nx = norm(space, x);
    const double ny = norm(space, y);
    return (s * s + d * d) / (2.0 * (nx * nx + ny * ny));
}

Estimate gamma(const SpaceDescriptor& space, double t, const SearchConfig& config) {
    require_valid(space);
    config.validate();
    if (!(t >= 0.0 && t <= 1.0)) throw DomainError("t must lie in [0, 1]");
    const std::array<Axis, 3> axes{angle_axis(config), angle_axis(config), pinned_axis(t)};
    return with_norm_power(space, 2.0, [&](const auto& power) {
        std::uint64_t evals = 0;
        const auto found = search_pairs(axes, power, sphere_map(space), sphere_map(space), 1.0, 1.0,
                                        [](double) { return 2.0; }, config, evals);
        return single_form(found, config, evals);
    });
}

Estimate estimate_cnj(const SpaceDescriptor& space, const SearchConfig& config) {
    require_valid(space);
    config.validate();
    const std::array<Axis, 3> axes{angle_axis(config), angle_axis(config), t_axis(config)};
    return with_norm_power(space, 2.0, [&](const auto& power) {
        std::uint64_t evals = 0;
        const auto found = search_pairs(axes, power, sphere_map(space), sphere_map(space), 1.0, 1.0,
                                        [](double t) { return 2.0 * (1.0 + t * t); }, config, evals);
        return single_form(found, config, evals);
    });
}

Estimate estimate_skew(const SpaceDescriptor& space, double p, double xi, double eta,
                       const SearchConfig& config) {
    require_valid(space);
    require_exponent(p);
    require_weights(xi, eta);
    config.validate();
    const std::array<Axis, 3> axes{angle_axis(config), angle_axis(config), t_axis(config)};
    return with_norm_power(space, p, [&](const auto& power) {
        return best_of_forms(xi, eta, config, [&](double a, double b, std::uint64_t& evals) {
            const double scale = skew_scale(p, a, b);
            return search_pairs(axes, power, sphere_map(space), sphere_map(space), a, b,
                                [&](double t) { return scale * (1.0 + std::pow(t, p)); }, config, evals);
        });
    });
}

Estimate estimate_skew_extreme_bf(double lambda, double p, double xi, double eta, const SearchConfig& config) {
    require_valid(BanasFraczek{lambda});
    require_exponent(p);
    require_weights(xi, eta);
    config.validate();

    const double limit = 1.0 / lambda;
    const Axis first_coordinate{-limit, limit, config.coarse_angles / 4 + 1, false};
    const std::array<Axis, 3> axes{first_coordinate, first_coordinate, t_axis(config)};
    const BanasFraczekPower power{lambda * lambda, p};
    auto upper = [](double z) { return Plane{z, std::sqrt(1.0 - z * z)}; };
    auto lower = [](double z) { return Plane{z, -std::sqrt(1.0 - z * z)}; };

    return best_of_forms(xi, eta, config, [&](double a, double b, std::uint64_t& evals) {
        const double scale = skew_scale(p, a, b);
        auto den = [&](double t) { return scale * (1.0 + std::pow(t, p)); };
        // The objective is invariant under (x, y) -> (-x, -y), so x stays on the
        // upper branch and only y's branch is enumerated.
        PairSearch best = search_pairs(axes, power, upper, lower, a, b, den, config, evals);
        PairSearch alt = search_pairs(axes, power, upper, upper, a, b, den, config, evals);
        if (alt.point.value > best.point.value) best = alt;
        // (a, b) -> (-a, b) is an isometry; report the witness with x1 >= 0.
        if (best.x.a < 0.0) {
            best.x.a = -best.x.a;
            best.y.a = -best.y.a;
        }
        return best;
    });
}

Estimate estimate_lyj(const SpaceDescriptor& space, double xi, double eta, const SearchConfig& config) {
    return estimate_skew(space, 2.0, xi, eta, config);
}

Estimate estimate_lyj_prime(const SpaceDescriptor& space, double xi, double eta, const SearchConfig& config) {
    require_valid(space);
    require_weights(xi, eta);
    config.validate();
    const std::array<Axis, 3> axes{angle_axis(config), angle_axis(config), pinned_axis(1.0)};
    // Swapping the weights together with (x, y) -> (y, -x) leaves the ratio
    // unchanged on S x S, so a single weight order covers the supremum.
    return with_norm_power(space, 2.0, [&](const auto& power) {
        std::uint64_t evals = 0;
        const auto found = search_pairs(axes, power, sphere_map(space), sphere_map(space), xi, eta,
                                        [](double) { return 4.0; }, config, evals);
        return single_form(found, config, evals);
    });
}

namespace {

struct ConstantValidator {
    void operator()(const kind::CNJ&) const {}
    void operator()(const kind::CNJp& k) const { require_exponent(k.p); }
    void operator()(const kind::CNJskew& k) const {
        require_exponent(k.p);
        require_weights(k.xi, k.eta);
    }
    void operator()(const kind::LYJ& k) const { require_weights(k.xi, k.eta); }
    void operator()(const kind::LYJprime& k) const { require_weights(k.xi, k.eta); }
};

struct ConstantPrinter {
    std::string operator()(const kind::CNJ&) const { return "cnj"; }
    std::string operator()(const kind::CNJp& k) const { return "cnjp:p=" + format_number(k.p); }
    std::string operator()(const kind::CNJskew& k) const {
        return "cnjskew:p=" + format_number(k.p) + ",xi=" + format_number(k.xi) + ",eta=" + format_number(k.eta);
    }
    std::string operator()(const kind::LYJ& k) const {
        return "lyj:xi=" + format_number(k.xi) + ",eta=" + format_number(k.eta);
    }
    std::string operator()(const kind::LYJprime& k) const {
        return "lyjprime:xi=" + format_number(k.xi) + ",eta=" + format_number(k.eta);
    }
};

}  // namespace

void require_valid(const ConstantKind& constant) { std::visit(ConstantValidator{}, constant); }

ConstantKind parse_constant(std::string_view text) {
    const ParsedSpec spec = parse_spec(text);
    ConstantKind constant;
    if (spec.name == "cnj") {
        spec.expect_only({});
        constant = kind::CNJ{};
    } else if (spec.name == "cnjp") {
        spec.expect_only({"p"});
        constant = kind::CNJp{spec.require("p")};
    } else if (spec.name == "cnjskew") {
        spec.expect_only({"p", "xi", "eta"});
        constant = kind::CNJskew{spec.require("p"), spec.require("xi"), spec.require("eta")};
    } else if (spec.name == "lyj") {
        spec.expect_only({"xi", "eta"});
        constant = kind::LYJ{spec.require("xi"), spec.require("eta")};
    } else if (spec.name == "lyjprime") {
        spec.expect_only({"xi", "eta"});
        constant = kind::LYJprime{spec.require("xi"), spec.require("eta")};
    } else {
        throw DomainError("unknown constant '" + spec.name + "'");
    }
    require_valid(constant);
    return constant;
}

std::string to_string(const ConstantKind& constant) { return std::visit(ConstantPrinter{}, constant); }

Estimate estimate(const SpaceDescriptor& space, const ConstantKind& constant, const SearchConfig& config) {
    require_valid(constant);
    struct Dispatch {
        const SpaceDescriptor& space;
        const SearchConfig& config;
        Estimate operator()(const kind::CNJ&) const { return estimate_cnj(space, config); }
        Estimate operator()(const kind::CNJp& k) const { return estimate_skew(space, k.p, 1.0, 1.0, config); }
        Estimate operator()(const kind::CNJskew& k) const { return estimate_skew(space, k.p, k.xi, k.eta, config); }
        Estimate operator()(const kind::LYJ& k) const { return estimate_lyj(space, k.xi, k.eta, config); }
        Estimate operator()(const kind::LYJprime& k) const { return estimate_lyj_prime(space, k.xi, k.eta, config); }
    };
    return std::visit(Dispatch{space, config}, constant);
}

}  // namespace njconst
