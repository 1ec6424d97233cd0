#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "njconst/closed_forms.hpp"
#include "njconst/constants.hpp"
#include "njconst/errors.hpp"

namespace njconst {
namespace {

TEST(CnjFormula, Examples) {
    EXPECT_DOUBLE_EQ(cf_cnj_bf(2), 1.75);
    EXPECT_NEAR(cf_cnj_bf(3), 1.888889, 1e-6);
    EXPECT_NEAR(cf_cnj_bf(1.000001), 1.000002, 1e-9);
    EXPECT_THROW(static_cast<void>(cf_cnj_bf(1.0)), DomainError);
    EXPECT_THROW(static_cast<void>(cf_cnj_bf(0.5)), DomainError);
}

TEST(CnjpFormula, Examples) {
    const ClosedFormResult r = cf_cnjp_bf(2, 4);
    EXPECT_DOUBLE_EQ(r.value, 1.5625);
    EXPECT_TRUE(r.condition_met);
    EXPECT_NEAR(r.condition_value, 2.25, 1e-15);
    EXPECT_NEAR(cf_cnjp_bf(2, 2).value, cf_cnj_bf(2), 1e-15);

    const ClosedFormResult unmet = cf_cnjp_bf(1.1, 4);
    EXPECT_FALSE(unmet.condition_met);
    EXPECT_NEAR(unmet.condition_value, 0.0365, 1e-4);
    EXPECT_NEAR(unmet.value, 1 + std::pow(1 - 1 / 1.21, 2), 1e-15);
    EXPECT_THROW(static_cast<void>(cf_cnjp_bf(2, 1.5)), DomainError);
}

TEST(SkewFormula, Examples) {
    const ClosedFormResult r = cf_skew_bf(2, 3, 1, 2);
    EXPECT_NEAR(r.value, (27 + std::pow(7.0, 1.5)) / 36, 1e-15);
    EXPECT_NEAR(r.value, 1.264452, 1e-6);
    EXPECT_TRUE(r.condition_met);
    EXPECT_NEAR(r.condition_value, 2.598, 1e-3);
    EXPECT_NEAR(r.condition_value, 4 * std::pow(0.75, 1.5), 1e-14);
    EXPECT_FALSE(r.formula_name.empty());

    EXPECT_DOUBLE_EQ(cf_skew_bf(2, 2, 1, 1).value, 1.75);

    const ClosedFormResult boundary = cf_skew_bf(std::numbers::sqrt2, 2, 1, 1);
    EXPECT_NEAR(boundary.value, 1.5, 1e-15);
    EXPECT_TRUE(boundary.condition_met);
    EXPECT_NEAR(boundary.condition_value, 1.0, 1e-15);
}

TEST(SkewFormula, DomainErrors) {
    EXPECT_THROW(static_cast<void>(cf_skew_bf(1, 3, 1, 1)), DomainError);
    EXPECT_THROW(static_cast<void>(cf_skew_bf(2, 1.9, 1, 1)), DomainError);
    EXPECT_THROW(static_cast<void>(cf_skew_bf(2, 3, 0, 1)), DomainError);
    EXPECT_THROW(static_cast<void>(cf_skew_bf(2, 3, 1, -1)), DomainError);
    EXPECT_THROW(static_cast<void>(cf_skew_bf(std::nan(""), 3, 1, 1)), DomainError);
}

TEST(Condition, Examples) {
    const ConditionResult a = condition_bf(2, 3);
    EXPECT_NEAR(a.value, 2.598, 1e-3);
    EXPECT_TRUE(a.met);
    EXPECT_TRUE(a.implies_lambda_at_least_sqrt2);

    const ConditionResult b = condition_bf(1.5, 3);
    EXPECT_NEAR(b.value, 0.9318, 1e-3);
    EXPECT_NEAR(b.value, 2.25 * std::pow(5.0 / 9.0, 1.5), 1e-14);
    EXPECT_FALSE(b.met);
    EXPECT_FALSE(b.implies_lambda_at_least_sqrt2);

    const ConditionResult c = condition_bf(std::numbers::sqrt2, 2);
    EXPECT_NEAR(c.value, 1.0, 1e-15);
    EXPECT_TRUE(c.met);
    EXPECT_FALSE(c.implies_lambda_at_least_sqrt2);

    EXPECT_NEAR(condition_bf(1.2, 3).value, 0.243, 1e-3);
}

TEST(Condition, MetImpliesLambdaAtLeastSqrt2ForLargeExponents) {
    for (double lambda = 1.01; lambda < 4; lambda += 0.01) {
        for (double p : {2.5, 3.0, 4.0, 8.0}) {
            const ConditionResult c = condition_bf(lambda, p);
            EXPECT_EQ(c.met, c.value >= 1.0);
            if (c.met) {
                EXPECT_GE(lambda, std::numbers::sqrt2);
                EXPECT_TRUE(c.implies_lambda_at_least_sqrt2);
            }
        }
    }
}

TEST(Identities, Specialization) {
    for (double lambda : {1.5, 2.0, 3.0, 10.0}) {
        for (double p : {2.0, 3.0, 4.0, 6.0}) {
            EXPECT_NEAR(cf_skew_bf(lambda, p, 1, 1).value, cf_cnjp_bf(lambda, p).value, 1e-12);
        }
        EXPECT_NEAR(cf_skew_bf(lambda, 2, 1, 1).value, cf_cnj_bf(lambda), 1e-12);
    }
}

TEST(Identities, SymmetryAndScale) {
    std::mt19937_64 rng(23);
    std::uniform_real_distribution<double> lam(1.01, 10), pe(2, 8), w(0.01, 5);
    for (int i = 0; i < 200; ++i) {
        const double lambda = lam(rng), p = pe(rng), xi = w(rng), eta = w(rng);
        const double v = cf_skew_bf(lambda, p, xi, eta).value;
        EXPECT_EQ(v, cf_skew_bf(lambda, p, eta, xi).value);
        for (double c : {0.5, 3.0}) {
            EXPECT_NEAR(cf_skew_bf(lambda, p, c * xi, c * eta).value, v, 1e-12 * v);
        }
    }
}

TEST(Identities, RangeForEqualWeights) {
    for (double lambda = 1.05; lambda < 12; lambda *= 1.1) {
        for (double p : {2.0, 2.5, 3.0, 4.0, 6.0, 8.0}) {
            const ClosedFormResult r = cf_skew_bf(lambda, p, 1.7, 1.7);
            if (!r.condition_met) continue;
            EXPECT_GT(r.value, 1.0);
            EXPECT_LT(r.value, 2.0);
        }
    }
}

TEST(Identities, UnequalWeightsCanFallBelowOne) {
    // As xi / eta -> 0 the formula tends to 2^(2-p), below 1 once p > 2.
    const ClosedFormResult r = cf_skew_bf(3, 4, 0.01, 1);
    EXPECT_TRUE(r.condition_met);
    EXPECT_LT(r.value, 1.0);
    EXPECT_NEAR(cf_skew_bf(3, 4, 1e-9, 1).value, 0.25, 1e-6);
    // At p = 2 the value stays in (1, 2) for any weights.
    EXPECT_GT(cf_skew_bf(3, 2, 0.01, 1).value, 1.0);
}

TEST(Witness, Pairs) {
    {
        const auto [x, y] = witness_pair(2);
        EXPECT_DOUBLE_EQ(x.a(), 0.5);
        EXPECT_NEAR(x.b(), 0.866025, 1e-6);
        EXPECT_DOUBLE_EQ(y.a(), 0.5);
        EXPECT_NEAR(y.b(), -0.866025, 1e-6);
    }
    {
        const auto [x, y] = witness_pair(std::numbers::sqrt2);
        EXPECT_NEAR(x.a(), 0.707107, 1e-6);
        EXPECT_NEAR(x.b(), 0.707107, 1e-6);
        EXPECT_NEAR(y.b(), -0.707107, 1e-6);
    }
    {
        const auto [x, y] = witness_pair(10);
        EXPECT_DOUBLE_EQ(x.a(), 0.1);
        EXPECT_NEAR(x.b(), 0.994987, 1e-6);
        EXPECT_NEAR(y.b(), -0.994987, 1e-6);
    }
    for (double lambda : {1.001, std::numbers::sqrt2, 2.0, 10.0}) {
        const auto [x, y] = witness_pair(lambda);
        EXPECT_NEAR(norm(BanasFraczek{lambda}, x), 1.0, 1e-14);
        EXPECT_NEAR(norm(BanasFraczek{lambda}, y), 1.0, 1e-14);
        EXPECT_NEAR(std::abs(x.a()), 1.0 / lambda, 1e-16);
        EXPECT_NEAR(x.euclidean_length(), 1.0, 1e-15);
    }
    EXPECT_THROW(static_cast<void>(witness_pair(1.0)), DomainError);
}

TEST(Witness, RatioExamples) {
    EXPECT_NEAR(witness_ratio(2, 2, 1, 1), 1.75, 1e-12);
    EXPECT_NEAR(witness_ratio(2, 3, 1, 2), 1.264452, 1e-6);
    EXPECT_NEAR(witness_ratio(3, 4, 1, 1), 1 + std::pow(8.0 / 9.0, 2), 1e-12);
    EXPECT_NEAR(witness_ratio(3, 4, 1, 1), 1.790123, 1e-6);
    EXPECT_THROW(static_cast<void>(witness_ratio(2, 1, 1, 1)), DomainError);
}

TEST(Witness, AttainsClosedFormEverywhere) {
    std::mt19937_64 rng(29);
    std::uniform_real_distribution<double> lam(1.0001, 10), pe(2, 8), w(0.001, 5);
    for (int i = 0; i < 500; ++i) {
        const double lambda = lam(rng), p = pe(rng), xi = w(rng), eta = w(rng);
        const double cf = cf_skew_bf(lambda, p, xi, eta).value;
        EXPECT_NEAR(witness_ratio(lambda, p, xi, eta), cf, 1e-12 * cf);
    }
}

TEST(Witness, BracketedByEstimate) {
    SearchConfig config;
    config.coarse_angles = 128;
    config.t_samples = 33;
    for (auto [lambda, p] : {std::pair{2.0, 3.0}, {3.0, 2.0}}) {
        const double w = witness_ratio(lambda, p, 1, 2);
        EXPECT_LE(w, estimate_skew(BanasFraczek{lambda}, p, 1, 2, config).value + 2e-3);
        EXPECT_GE(w, cf_skew_bf(lambda, p, 1, 2).value - 1e-12);
    }
}

}  // namespace
}  // namespace njconst
