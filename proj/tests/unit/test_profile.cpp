#include <gtest/gtest.h>

#include <cmath>

#include "landau/errors.hpp"
#include "landau/profile.hpp"

using namespace landau;

TEST(Profile, Constant) {
    const auto p = FieldProfile::constant(1.5);
    EXPECT_TRUE(p.is_smooth());
    EXPECT_EQ(p.b(0.0), 1.5);
    EXPECT_EQ(p.b(100.0), 1.5);
    EXPECT_EQ(p.b_dot(3.0), 0.0);
    EXPECT_EQ(p.initial_field(), 1.5);
    EXPECT_TRUE(p.jumps().empty());
    EXPECT_EQ(to_string(p.kind()), "constant");
    EXPECT_THROW(FieldProfile::constant(0.0), DomainError);
}

TEST(Profile, StepSequenceIsRightContinuous) {
    const auto p = FieldProfile::step_sequence(1.0, {{0.0, 2.0}, {1.5, 1.0}});
    EXPECT_FALSE(p.is_smooth());
    EXPECT_EQ(p.b(0.0), 2.0);
    EXPECT_EQ(p.b(1.4999), 2.0);
    EXPECT_EQ(p.b(1.5), 1.0);
    EXPECT_EQ(p.b(7.0), 1.0);
    EXPECT_EQ(p.b_dot(0.7), 0.0);
    EXPECT_EQ(p.initial_field(), 1.0);
    const auto j = p.jumps();
    ASSERT_EQ(j.size(), 2u);
    EXPECT_EQ(j[0].t, 0.0);
    EXPECT_EQ(j[0].before, 1.0);
    EXPECT_EQ(j[0].after, 2.0);
    EXPECT_EQ(j[1].before, 2.0);
    EXPECT_EQ(j[1].after, 1.0);
    EXPECT_EQ(p.lower_bound(), 1.0);
    EXPECT_EQ(p.upper_bound(), 2.0);
}

TEST(Profile, StepSequenceValidation) {
    EXPECT_THROW(FieldProfile::step_sequence(1.0, {{1.0, 2.0}, {0.5, 1.0}}), DomainError);
    EXPECT_THROW(FieldProfile::step_sequence(1.0, {{1.0, 2.0}, {1.0, 1.0}}), DomainError);
    EXPECT_THROW(FieldProfile::step_sequence(1.0, {{-1.0, 2.0}}), DomainError);
    EXPECT_THROW(FieldProfile::step_sequence(1.0, {{1.0, -2.0}}), DomainError);
}

TEST(Profile, TanhRampValuesAndDerivative) {
    const auto p = FieldProfile::tanh_ramp(1.0, 2.0, 5.0, 0.5);
    EXPECT_NEAR(p.b(5.0), 1.5, 1e-15);
    EXPECT_NEAR(p.b(100.0), 2.0, 1e-15);
    EXPECT_NEAR(p.initial_field(), p.b(0.0), 0.0);
    EXPECT_LT(std::abs(p.b(0.0) - 1.0), 1e-8);
    for (double t : {0.3, 4.7, 5.0, 5.6, 9.0}) {
        const double h = 1e-5;
        EXPECT_NEAR(p.b_dot(t), (p.b(t + h) - p.b(t - h)) / (2 * h), 1e-8) << t;
    }
    EXPECT_DOUBLE_EQ(p.max_step_hint(), 0.125);
    EXPECT_TRUE(p.jumps().empty());
    EXPECT_EQ(p.lower_bound(), 1.0);
    EXPECT_EQ(p.upper_bound(), 2.0);
    EXPECT_THROW(FieldProfile::tanh_ramp(1.0, 2.0, 5.0, 0.0), DomainError);
    EXPECT_THROW(FieldProfile::tanh_ramp(1.0, 0.0, 5.0, 1.0), DomainError);
}

TEST(Profile, DescendingRampBounds) {
    const auto p = FieldProfile::tanh_ramp(2.0, 0.5, 3.0, 1.0);
    EXPECT_EQ(p.lower_bound(), 0.5);
    EXPECT_EQ(p.upper_bound(), 2.0);
    EXPECT_LT(p.b_dot(3.0), 0.0);
}

TEST(Profile, TanhCycleReturnsToBase) {
    const auto p = FieldProfile::tanh_cycle(1.0, 2.0, 10.0, 30.0, 1.0, 1.0);
    EXPECT_NEAR(p.b(20.0), 2.0, 1e-7);
    EXPECT_NEAR(p.b(60.0), 1.0, 1e-7);
    EXPECT_NEAR(p.b(0.0), 1.0, 1e-7);
    for (double t : {9.0, 10.0, 29.0, 31.5}) {
        const double h = 1e-5;
        EXPECT_NEAR(p.b_dot(t), (p.b(t + h) - p.b(t - h)) / (2 * h), 1e-8) << t;
    }
    for (double t = 0.0; t < 60.0; t += 0.1) {
        EXPECT_GE(p.b(t), p.lower_bound());
        EXPECT_LE(p.b(t), p.upper_bound());
    }
    EXPECT_DOUBLE_EQ(p.max_step_hint(), 0.25);
    EXPECT_THROW(FieldProfile::tanh_cycle(1.0, 2.0, 30.0, 10.0, 1.0, 1.0), DomainError);
}
