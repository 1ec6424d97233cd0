#pragma once

#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace njconst {

/// A point of the plane. Both coordinates are finite; construction rejects NaN
/// and infinity with a DomainError.
class Vector2 {
public:
    constexpr Vector2() = default;
    Vector2(double a, double b);

    [[nodiscard]] constexpr double a() const noexcept { return a_; }
    [[nodiscard]] constexpr double b() const noexcept { return b_; }

    [[nodiscard]] Vector2 operator+(const Vector2& o) const { return {a_ + o.a_, b_ + o.b_}; }
    [[nodiscard]] Vector2 operator-(const Vector2& o) const { return {a_ - o.a_, b_ - o.b_}; }
    [[nodiscard]] Vector2 operator-() const { return {-a_, -b_}; }
    [[nodiscard]] friend Vector2 operator*(double c, const Vector2& v) { return {c * v.a_, c * v.b_}; }

    [[nodiscard]] bool is_zero() const noexcept { return a_ == 0.0 && b_ == 0.0; }
    [[nodiscard]] double euclidean_length() const noexcept;

    friend bool operator==(const Vector2&, const Vector2&) = default;

private:
    double a_ = 0.0;
    double b_ = 0.0;
};

struct Euclidean {
    friend bool operator==(const Euclidean&, const Euclidean&) = default;
};

// l_r norm (|a|^r + |b|^r)^(1/r), r >= 1.
struct Lr {
    double r = 2.0;
    friend bool operator==(const Lr&, const Lr&) = default;
};

// max{lambda |a|, sqrt(a^2 + b^2)}, lambda > 1.
struct BanasFraczek {
    double lambda = 2.0;
    friend bool operator==(const BanasFraczek&, const BanasFraczek&) = default;
};

// max{lambda |a|, (|a|^q + |b|^q)^(1/q)}, lambda > 1, q >= 1.
struct GeneralizedBF {
    double lambda = 2.0;
    double norm_exponent = 2.0;
    friend bool operator==(const GeneralizedBF&, const GeneralizedBF&) = default;
};

using SpaceDescriptor = std::variant<Euclidean, Lr, BanasFraczek, GeneralizedBF>;

/// Empty when the descriptor satisfies its parameter invariants, otherwise a
/// message naming the offending parameter.
[[nodiscard]] std::optional<std::string> validate_space(const SpaceDescriptor& space);

/// Throws DomainError carrying the validate_space message.
void require_valid(const SpaceDescriptor& space);

[[nodiscard]] double norm(const SpaceDescriptor& space, const Vector2& v);

/// The point of the unit sphere in direction (cos theta, sin theta).
[[nodiscard]] Vector2 sphere_point(const SpaceDescriptor& space, double theta);

enum class Branch : int { upper = 1, lower = -1 };

/// (z1, sign * sqrt(1 - z1^2)), an extreme point of the Banas-Fraczek unit ball.
/// Throws DomainError when |z1| > 1/lambda.
[[nodiscard]] Vector2 extreme_point_bf(double lambda, double z1, Branch branch);

/// Canonical text forms: `euclidean`, `lr:r=<v>`, `bf:lambda=<v>`,
/// `gbf:lambda=<v>,p=<v>`. Parsing validates the parameters.
[[nodiscard]] SpaceDescriptor parse_space(std::string_view text);
[[nodiscard]] std::string to_string(const SpaceDescriptor& space);

// Shared by the constant and audit modules for err messages and output.
[[nodiscard]] std::string format_number(double x);

/// Key/value list of the form `name:k1=v1,k2=v2`, used by the space and
/// constant text forms.
struct ParsedSpec {
    std::string name;
    std::vector<std::pair<std::string, double>> params;

    [[nodiscard]] std::optional<double> get(std::string_view key) const;
    [[nodiscard]] double require(std::string_view key) const;
    void expect_only(std::initializer_list<std::string_view> keys) const;
};
[[nodiscard]] ParsedSpec parse_spec(std::string_view text);

}  // namespace njconst
