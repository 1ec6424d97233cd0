#include "njconst/spaces.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <limits>

#include "njconst/errors.hpp"

namespace njconst {

Vector2::Vector2(double a, double b) : a_(a), b_(b) {
    if (!std::isfinite(a) || !std::isfinite(b)) {
        throw DomainError("vector coordinates must be finite");
    }
}

double Vector2::euclidean_length() const noexcept { return std::sqrt(a_ * a_ + b_ * b_); }

namespace {

struct Validator {
    std::optional<std::string> operator()(const Euclidean&) const { return std::nullopt; }
    std::optional<std::string> operator()(const Lr& s) const {
        if (!(s.r >= 1.0) || !std::isfinite(s.r)) return "r must be a finite value >= 1";
        return std::nullopt;
    }
    std::optional<std::string> operator()(const BanasFraczek& s) const {
        if (!(s.lambda > 1.0) || !std::isfinite(s.lambda)) return "lambda must exceed 1";
        return std::nullopt;
    }
    std::optional<std::string> operator()(const GeneralizedBF& s) const {
        if (!(s.lambda > 1.0) || !std::isfinite(s.lambda)) return "lambda must exceed 1";
        if (!(s.norm_exponent >= 1.0) || !std::isfinite(s.norm_exponent)) {
            return "norm exponent p must be a finite value >= 1";
        }
        return std::nullopt;
    }
};

double lr_norm(double a, double b, double r) {
    if (r == 2.0) return std::sqrt(a * a + b * b);
    if (r == 1.0) return std::abs(a) + std::abs(b);
    const double m = std::max(std::abs(a), std::abs(b));
    if (m == 0.0) return 0.0;
    // Scaled to keep |a/m|^r, |b/m|^r in [0, 1].
    return m * std::pow(std::pow(std::abs(a) / m, r) + std::pow(std::abs(b) / m, r), 1.0 / r);
}

struct NormEval {
    const Vector2& v;
    double operator()(const Euclidean&) const { return std::sqrt(v.a() * v.a() + v.b() * v.b()); }
    double operator()(const Lr& s) const { return lr_norm(v.a(), v.b(), s.r); }
    double operator()(const BanasFraczek& s) const {
        return std::max(s.lambda * std::abs(v.a()), std::sqrt(v.a() * v.a() + v.b() * v.b()));
    }
    double operator()(const GeneralizedBF& s) const {
        return std::max(s.lambda * std::abs(v.a()), lr_norm(v.a(), v.b(), s.norm_exponent));
    }
};

double parse_double(std::string_view token, std::string_view context) {
    double value = 0.0;
    const char* first = token.data();
    const char* last = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last || token.empty()) {
        throw DomainError("cannot parse number '" + std::string(token) + "' in '" + std::string(context) +
                          "'");
    }
    if (!std::isfinite(value)) {
        throw DomainError("non-finite number in '" + std::string(context) + "'");
    }
    return value;
}

}  // namespace

std::optional<std::string> validate_space(const SpaceDescriptor& space) {
    return std::visit(Validator{}, space);
}

void require_valid(const SpaceDescriptor& space) {
    if (auto error = validate_space(space)) throw DomainError(*error);
}

double norm(const SpaceDescriptor& space, const Vector2& v) {
    require_valid(space);
    return std::visit(NormEval{v}, space);
}

Vector2 sphere_point(const SpaceDescriptor& space, double theta) {
    const Vector2 direction(std::cos(theta), std::sin(theta));
    const double n = norm(space, direction);
    return {direction.a() / n, direction.b() / n};
}

Vector2 extreme_point_bf(double lambda, double z1, Branch branch) {
    require_valid(BanasFraczek{lambda});
    const double limit = 1.0 / lambda;
    if (!std::isfinite(z1) || std::abs(z1) > limit * (1.0 + 4.0 * std::numeric_limits<double>::epsilon())) {
        throw DomainError("first coordinate " + format_number(z1) + " exceeds 1/lambda = " +
                          format_number(limit) + "; not an extreme point");
    }
    const double z = std::clamp(z1, -limit, limit);
    const double height = std::sqrt(1.0 - z * z);
    return {z, branch == Branch::upper ? height : -height};
}

std::string format_number(double x) {
    char buffer[32];
    std::snprintf(buffer, sizeof buffer, "%.12g", x);
    return buffer;
}

std::optional<double> ParsedSpec::get(std::string_view key) const {
    for (const auto& [k, v] : params) {
        if (k == key) return v;
    }
    return std::nullopt;
}

double ParsedSpec::require(std::string_view key) const {
    if (auto v = get(key)) return *v;
    throw DomainError("'" + name + "' requires parameter '" + std::string(key) + "'");
}

void ParsedSpec::expect_only(std::initializer_list<std::string_view> keys) const {
    for (const auto& [k, v] : params) {
        if (std::find(keys.begin(), keys.end(), k) == keys.end()) {
            throw DomainError("unknown parameter '" + k + "' for '" + name + "'");
        }
    }
}

ParsedSpec parse_spec(std::string_view text) {
    ParsedSpec spec;
    const auto colon = text.find(':');
    spec.name = std::string(text.substr(0, colon));
    if (spec.name.empty()) throw DomainError("empty specification");
    if (colon == std::string_view::npos) return spec;

    std::string_view rest = text.substr(colon + 1);
    while (true) {
        const auto comma = rest.find(',');
        const std::string_view item = rest.substr(0, comma);
        const auto eq = item.find('=');
        if (eq == std::string_view::npos || eq == 0) {
            throw DomainError("expected key=value in '" + std::string(text) + "'");
        }
        std::string key(item.substr(0, eq));
        if (spec.get(key)) throw DomainError("duplicate parameter '" + key + "'");
        spec.params.emplace_back(std::move(key), parse_double(item.substr(eq + 1), text));
        if (comma == std::string_view::npos) break;
        rest = rest.substr(comma + 1);
    }
    return spec;
}

SpaceDescriptor parse_space(std::string_view text) {
    const ParsedSpec spec = parse_spec(text);
    SpaceDescriptor space;
    if (spec.name == "euclidean") {
        spec.expect_only({});
        space = Euclidean{};
    } else if (spec.name == "lr") {
        spec.expect_only({"r"});
        space = Lr{spec.require("r")};
    } else if (spec.name == "bf") {
        spec.expect_only({"lambda"});
        space = BanasFraczek{spec.require("lambda")};
    } else if (spec.name == "gbf") {
        spec.expect_only({"lambda", "p"});
        space = GeneralizedBF{spec.require("lambda"), spec.require("p")};
    } else {
        throw DomainError("unknown space '" + spec.name + "'");
    }
    require_valid(space);
    return space;
}

namespace {
struct Printer {
    std::string operator()(const Euclidean&) const { return "euclidean"; }
    std::string operator()(const Lr& s) const { return "lr:r=" + format_number(s.r); }
    std::string operator()(const BanasFraczek& s) const { return "bf:lambda=" + format_number(s.lambda); }
    std::string operator()(const GeneralizedBF& s) const {
        return "gbf:lambda=" + format_number(s.lambda) + ",p=" + format_number(s.norm_exponent);
    }
};
}  // namespace

std::string to_string(const SpaceDescriptor& space) { return std::visit(Printer{}, space); }

}  // namespace njconst
