#include "morse/invariants.hpp"
#include "morse/spectral.hpp"

#include <gtest/gtest.h>

using namespace morse;

namespace {
const Rational half = make_rational(1, 2);
EigenResult proper(const Rational& q) { return {RadicalScalar(q), EigenStatus::Proper}; }
EigenResult trivial() { return {RadicalScalar{}, EigenStatus::TrivialZero}; }
}  // namespace

TEST(ExtractEigenvalue, Examples) {
    const auto st = make_state(0, 2);
    const auto& psi = st.wavefunction;
    EXPECT_EQ(extract_eigenvalue(apply(k0_prime_simplified(half, 2), psi), psi), proper(-1));
    EXPECT_EQ(extract_eigenvalue({psi.s, {}}, psi), trivial());

    const auto st2 = make_state(0, 5);  // s = 2
    const auto scaled = apply(naive_commutator(2, 5), st2.wavefunction);
    EXPECT_EQ(extract_eigenvalue(scaled, st2.wavefunction).status, EigenStatus::NotEigenfunction);

    EXPECT_THROW(extract_eigenvalue(psi, {psi.s, {}}), ZeroState);
}

TEST(ExtractEigenvalue, WeightShiftsAndRadicalEigenvalues) {
    const auto st = make_state(2, 11);
    const auto& psi = st.wavefunction;
    const auto lambda = sqrt_of_rational(make_rational(-7, 3)) + RadicalScalar(2);
    // same function written with weight s - 2
    WeightedFunction shifted{psi.s - 2, psi.poly.scaled(lambda).shifted(2)};
    const auto r = extract_eigenvalue(shifted, psi);
    EXPECT_EQ(r.status, EigenStatus::Proper);
    EXPECT_EQ(r.value, lambda);
    // non-integer weight difference
    EXPECT_EQ(extract_eigenvalue({psi.s + half, psi.poly}, psi).status, EigenStatus::NotEigenfunction);
    // proportional on the lowest coefficient only
    LaurentPoly bent = psi.poly;
    bent.add_term(1, RadicalScalar(1));
    EXPECT_EQ(extract_eigenvalue({psi.s, bent}, psi).status, EigenStatus::NotEigenfunction);
}

TEST(EigenvalueOne, Examples) {
    EXPECT_EQ(eigenvalue_one(0, 2), proper(-1));
    EXPECT_EQ(eigenvalue_one(0, 1), trivial());
    EXPECT_EQ(eigenvalue_one(3, 10), proper(-3));
}

TEST(EigenvalueTwo, Examples) {
    EXPECT_EQ(eigenvalue_two(0, 2), proper(-1));
    EXPECT_EQ(eigenvalue_two(0, 1), proper(0));
    EXPECT_EQ(eigenvalue_two(5, 3), proper(8));
    EXPECT_EQ(k0_eigenvalue(make_state(0, 2)), proper(-half));
}

TEST(EigenvalueThree, Examples) {
    EXPECT_EQ(eigenvalue_three(0, 2), -1);
    EXPECT_EQ(eigenvalue_three(0, 1), 0);
    EXPECT_EQ(eigenvalue_three(3, 10), -3);
}

TEST(EigenvalueRoutes, AgreeOnSmallGrid) {
    for (long n = 0; n <= 25; ++n) {
        for (long v = 0; v <= 25; ++v) {
            const auto st = make_state(n, v);
            const Rational ev3 = eigenvalue_three(n, v);
            EXPECT_EQ(eigenvalue_two(st), proper(ev3)) << n << "," << v;
            if (sgn(st.qn.s) == 0)
                EXPECT_EQ(eigenvalue_one(st), trivial());
            else
                EXPECT_EQ(eigenvalue_one(st), proper(ev3)) << n << "," << v;
        }
    }
}

TEST(VerifyLowering, Examples) {
    auto a = verify_lowering(1, 4);
    EXPECT_EQ(a.outcome, LadderOutcome::Holds);
    EXPECT_EQ(a.factor, sqrt_of_rational(Rational(3)));
    EXPECT_EQ(verify_lowering(0, 5).outcome, LadderOutcome::Holds);
    EXPECT_EQ(verify_lowering(0, 2).outcome, LadderOutcome::Holds);
    EXPECT_EQ(verify_lowering(2, 5).outcome, LadderOutcome::OutOfDomain);
    EXPECT_EQ(verify_lowering(1, 3).outcome, LadderOutcome::OutOfDomain);  // s = 0
    EXPECT_EQ(verify_lowering(0, 1).outcome, LadderOutcome::OutOfDomain);
}

TEST(VerifyRaising, Examples) {
    auto a = verify_raising(0, 4);
    EXPECT_EQ(a.outcome, LadderOutcome::Holds);
    EXPECT_EQ(a.factor, sqrt_of_rational(Rational(3)));
    auto b = verify_raising(0, 6);
    EXPECT_EQ(b.outcome, LadderOutcome::Holds);
    EXPECT_EQ(b.factor, sqrt_of_rational(Rational(5)));
    EXPECT_EQ(verify_raising(1, 5).outcome, LadderOutcome::OutOfDomain);
}

TEST(VerifyCommutatorAction, Examples) {
    auto a = verify_commutator_action(0, 6);
    EXPECT_EQ(a.outcome, LadderOutcome::Holds);
    EXPECT_EQ(a.factor, RadicalScalar(-5));
    EXPECT_EQ(verify_commutator_action(0, 3).outcome, LadderOutcome::OutOfDomain);
    auto b = verify_commutator_action(1, 9);
    EXPECT_EQ(b.outcome, LadderOutcome::Holds);
    EXPECT_EQ(b.factor, RadicalScalar(-6));
    EXPECT_EQ(verify_commutator_action(0, 2).outcome, LadderOutcome::OutOfDomain);  // s = 1/2, negative radicands
    EXPECT_EQ(verify_commutator_action(3, 2).outcome, LadderOutcome::OutOfDomain);  // unphysical
}

TEST(LadderSuite, HoldsUpToVForty) {
    for (const auto& check : run_ladder_suite(40)) {
        EXPECT_GT(check.checked, 0) << check.name;
        EXPECT_EQ(check.failures, 0) << check.name;
    }
}

TEST(NaiveCommutator, NeverAnEigenOperator) {
    for (long n = 0; n <= 12; ++n) {
        for (long v = 0; v <= 30; ++v) {
            const auto st = make_state(n, v);
            const Rational& s = st.qn.s;
            if (sgn(s) == 0) continue;
            const auto r = eigen_of(naive_commutator(s, v), st.wavefunction);
            if (s == 1 || s == -1 || s == half || s == -half)
                EXPECT_EQ(r, trivial());
            else
                EXPECT_EQ(r.status, EigenStatus::NotEigenfunction) << n << "," << v;
        }
    }
}

TEST(Reciprocal, SingleTermOnly) {
    const auto x = RadicalScalar::term(make_rational(2, 5), Integer(3), 1);
    EXPECT_EQ(x * reciprocal(x), RadicalScalar(1));
    EXPECT_THROW(reciprocal(x + RadicalScalar(1)), std::domain_error);
}
