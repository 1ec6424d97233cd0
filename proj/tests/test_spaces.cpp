#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <vector>

#include "njconst/errors.hpp"
#include "njconst/spaces.hpp"

namespace njconst {
namespace {

std::vector<SpaceDescriptor> sample_spaces() {
    return {Euclidean{},       Lr{1.0},       Lr{3.0},           Lr{1.5},
            BanasFraczek{2.0}, BanasFraczek{std::numbers::sqrt2}, BanasFraczek{10.0},
            GeneralizedBF{2.0, 1.0}, GeneralizedBF{3.0, 4.0}};
}

TEST(Vector2, RejectsNonFinite) {
    EXPECT_THROW(Vector2(std::numeric_limits<double>::quiet_NaN(), 0.0), DomainError);
    EXPECT_THROW(Vector2(0.0, std::numeric_limits<double>::infinity()), DomainError);
    EXPECT_NO_THROW(Vector2(1e300, -1e300));
}

TEST(Norm, BanasFraczekExamples) {
    EXPECT_NEAR(norm(BanasFraczek{2.0}, {0.3, 0.9}), std::sqrt(0.90), 1e-15);
    EXPECT_NEAR(norm(BanasFraczek{2.0}, {0.3, 0.9}), 0.948683, 1e-6);
    EXPECT_DOUBLE_EQ(norm(BanasFraczek{2.0}, {0.5, 0.5}), 1.0);
}

TEST(Norm, ZeroVectorForEverySpace) {
    for (const auto& s : sample_spaces()) EXPECT_EQ(norm(s, {0.0, 0.0}), 0.0) << to_string(s);
}

TEST(Norm, GeneralizedUsesAbsoluteValues) {
    // q = 3: (|a|^3 + |b|^3)^(1/3) stays a norm for negative coordinates.
    const GeneralizedBF s{1.5, 3.0};
    EXPECT_DOUBLE_EQ(norm(s, {-0.2, -0.9}), norm(s, {0.2, 0.9}));
    EXPECT_NEAR(norm(s, {0.2, 0.9}), std::max(0.3, std::cbrt(0.008 + 0.729)), 1e-15);
}

TEST(Norm, InvalidSpaceSignalsDomainError) {
    EXPECT_THROW(static_cast<void>(norm(BanasFraczek{1.0}, {1.0, 0.0})), DomainError);
    EXPECT_THROW(static_cast<void>(norm(Lr{0.5}, {1.0, 0.0})), DomainError);
}

TEST(ValidateSpace, Examples) {
    const auto bf = validate_space(BanasFraczek{1.0});
    ASSERT_TRUE(bf.has_value());
    EXPECT_EQ(*bf, "lambda must exceed 1");
    EXPECT_FALSE(validate_space(Lr{3.0}).has_value());
    const auto gbf = validate_space(GeneralizedBF{2.0, 0.5});
    ASSERT_TRUE(gbf.has_value());
    EXPECT_NE(gbf->find("norm exponent"), std::string::npos);
    EXPECT_TRUE(validate_space(BanasFraczek{std::numeric_limits<double>::quiet_NaN()}).has_value());
    EXPECT_TRUE(validate_space(Lr{0.999}).has_value());
}

TEST(SpherePoint, Examples) {
    const Vector2 axis = sphere_point(BanasFraczek{2.0}, 0.0);
    EXPECT_DOUBLE_EQ(axis.a(), 0.5);
    EXPECT_DOUBLE_EQ(axis.b(), 0.0);

    const Vector2 up = sphere_point(Euclidean{}, std::numbers::pi / 2);
    EXPECT_NEAR(up.a(), 0.0, 1e-16);
    EXPECT_DOUBLE_EQ(up.b(), 1.0);

    const Vector2 bf_up = sphere_point(BanasFraczek{2.0}, std::numbers::pi / 2);
    EXPECT_NEAR(bf_up.a(), 0.0, 1e-16);
    EXPECT_DOUBLE_EQ(bf_up.b(), 1.0);
}

TEST(SpherePoint, UnitNormFor1024Angles) {
    for (const auto& s : sample_spaces()) {
        for (int k = 0; k < 1024; ++k) {
            const double theta = 2.0 * std::numbers::pi * k / 1024;
            EXPECT_NEAR(norm(s, sphere_point(s, theta)), 1.0, 1e-12) << to_string(s) << " k=" << k;
        }
    }
}

TEST(ExtremePoint, Examples) {
    const Vector2 w = extreme_point_bf(2.0, 0.5, Branch::upper);
    EXPECT_DOUBLE_EQ(w.a(), 0.5);
    EXPECT_NEAR(w.b(), std::sqrt(0.75), 1e-16);
    EXPECT_NEAR(w.b(), 0.866025, 1e-6);

    const Vector2 pole = extreme_point_bf(2.0, 0.0, Branch::lower);
    EXPECT_EQ(pole.a(), 0.0);
    EXPECT_EQ(pole.b(), -1.0);

    EXPECT_THROW(static_cast<void>(extreme_point_bf(2.0, 0.6, Branch::upper)), DomainError);
    EXPECT_THROW(static_cast<void>(extreme_point_bf(2.0, -0.6, Branch::lower)), DomainError);
    EXPECT_THROW(static_cast<void>(extreme_point_bf(1.0, 0.0, Branch::lower)), DomainError);
}

TEST(ExtremePoint, MembershipProperty) {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> lambda_dist(1.0001, 10.0);
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    for (int i = 0; i < 2000; ++i) {
        const double lambda = lambda_dist(rng);
        const double z1 = unit(rng) / lambda;
        const Branch branch = i % 2 ? Branch::upper : Branch::lower;
        const Vector2 z = extreme_point_bf(lambda, z1, branch);
        EXPECT_NEAR(z.euclidean_length(), 1.0, 1e-12);
        EXPECT_LE(std::abs(z.a()), 1.0 / lambda);
        EXPECT_NEAR(norm(BanasFraczek{lambda}, z), 1.0, 1e-12);
    }
    // Endpoint z1 = 1/lambda is admitted.
    EXPECT_NEAR(norm(BanasFraczek{3.0}, extreme_point_bf(3.0, 1.0 / 3.0, Branch::upper)), 1.0, 1e-12);
}

TEST(NormProperties, Homogeneity) {
    std::mt19937_64 rng(11);
    std::normal_distribution<double> coord(0.0, 1.0);
    for (const auto& s : sample_spaces()) {
        for (int i = 0; i < 500; ++i) {
            const Vector2 v(coord(rng), coord(rng));
            const double base = norm(s, v);
            for (double c : {-2.0, -0.5, 0.0, 1.0, 3.0}) {
                EXPECT_NEAR(norm(s, c * v), std::abs(c) * base, 1e-12 * std::max(1.0, std::abs(c) * base))
                    << to_string(s);
            }
        }
    }
}

TEST(NormProperties, TriangleInequality) {
    std::mt19937_64 rng(13);
    std::normal_distribution<double> coord(0.0, 1.0);
    for (const auto& s : sample_spaces()) {
        for (int i = 0; i < 10000; ++i) {
            const Vector2 u(coord(rng), coord(rng));
            const Vector2 v(coord(rng), coord(rng));
            ASSERT_LE(norm(s, u + v), norm(s, u) + norm(s, v) + 1e-12) << to_string(s);
        }
    }
}

TEST(NormProperties, BanasFraczekDominatesEuclidean) {
    std::mt19937_64 rng(17);
    std::normal_distribution<double> coord(0.0, 1.0);
    for (double lambda : {1.01, 1.5, 2.0, 7.0}) {
        for (int i = 0; i < 2000; ++i) {
            const Vector2 v(coord(rng), coord(rng));
            EXPECT_GE(norm(BanasFraczek{lambda}, v), norm(Euclidean{}, v));
        }
    }
}

TEST(SpaceText, CanonicalFormsParse) {
    EXPECT_EQ(parse_space("euclidean"), SpaceDescriptor{Euclidean{}});
    EXPECT_EQ(parse_space("lr:r=3"), SpaceDescriptor{Lr{3.0}});
    EXPECT_EQ(parse_space("bf:lambda=2"), SpaceDescriptor{BanasFraczek{2.0}});
    EXPECT_EQ(parse_space("gbf:lambda=2,p=1.5"), (SpaceDescriptor{GeneralizedBF{2.0, 1.5}}));
    EXPECT_EQ(to_string(GeneralizedBF{2.0, 1.5}), "gbf:lambda=2,p=1.5");
}

TEST(SpaceText, Rejections) {
    EXPECT_THROW(static_cast<void>(parse_space("bf:lambda=1")), DomainError);
    EXPECT_THROW(static_cast<void>(parse_space("bf")), DomainError);
    EXPECT_THROW(static_cast<void>(parse_space("bf:lambda=abc")), DomainError);
    EXPECT_THROW(static_cast<void>(parse_space("bf:lambda=2,r=3")), DomainError);
    EXPECT_THROW(static_cast<void>(parse_space("bf:lambda=2,lambda=3")), DomainError);
    EXPECT_THROW(static_cast<void>(parse_space("hilbert")), DomainError);
    EXPECT_THROW(static_cast<void>(parse_space("")), DomainError);
    EXPECT_THROW(static_cast<void>(parse_space("gbf:lambda=2,p=0.5")), DomainError);
}

TEST(SpaceText, RoundTripProperty) {
    std::mt19937_64 rng(19);
    std::uniform_real_distribution<double> param(1.001, 20.0);
    for (int i = 0; i < 300; ++i) {
        // 12 significant digits survive the text form exactly.
        const double a = std::stod(format_number(param(rng)));
        const double b = std::stod(format_number(param(rng)));
        for (const SpaceDescriptor& s : {SpaceDescriptor{Lr{a}}, SpaceDescriptor{BanasFraczek{a}},
                                         SpaceDescriptor{GeneralizedBF{a, b}}}) {
            EXPECT_EQ(parse_space(to_string(s)), s);
        }
    }
}

}  // namespace
}  // namespace njconst
