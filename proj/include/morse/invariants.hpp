#pragma once

// Grid-wide invariant checks backing the `verify` command.

#include "morse/diff_op.hpp"
#include "morse/exact_scalar.hpp"
#include "morse/morse_model.hpp"
#include "morse/spectral.hpp"

#include <string>
#include <utility>
#include <vector>

namespace morse {

struct CheckResult {
    explicit CheckResult(std::string name_, bool gated_ = true) : name(std::move(name_)), gated(gated_) {}

    std::string name;
    bool gated = true;  // ungated checks are reported but never fail the suite
    long checked = 0;
    long failures = 0;
    std::vector<std::pair<long, long>> sample;  // first few failing (n, v)

    [[nodiscard]] bool passed() const { return !gated || failures == 0; }

    void record(bool ok, long n, long v) {
        ++checked;
        if (ok) return;
        ++failures;
        if (sample.size() < 5) sample.emplace_back(n, v);
    }
};

/// 2 s sqrt(1 - 1/s^2) (1 - 4 s^2): the naive commutator coefficient of y^-2, any s != 0.
inline RadicalScalar naive_commutator_coefficient(const Rational& s) {
    return RadicalScalar(2 * s * (1 - 4 * s * s)) * sqrt_of_rational(1 - 1 / (s * s));
}

/// 2 (s^2 - 1)^(1/2) (1 - 4 s^2) with the principal root. Equals the coefficient above only for s > 0.
inline RadicalScalar naive_commutator_principal_form(const Rational& s) {
    return RadicalScalar(2 * (1 - 4 * s * s)) * sqrt_of_rational(s * s - 1);
}

inline bool is_y_inverse_square_multiplication(const DiffOp& op, const RadicalScalar& coefficient) {
    return op == DiffOp::multiplication(LaurentPoly::monomial(coefficient, -2));
}

inline std::vector<CheckResult> run_invariant_suite(long n_max, long v_max) {
    CheckResult schrodinger{"Schrodinger operator annihilates psi"};
    CheckResult routes{"eigenvalue routes agree (ev1 = ev2 = ev3)"};
    CheckResult composed{"composed commutator = simplified operator"};
    CheckResult composed_negative{"composed vs simplified, negative radicands (reported)", false};
    CheckResult naive_form{"naive commutator = 2s sqrt(1-1/s^2)(1-4s^2)/y^2"};
    CheckResult naive_principal{"naive commutator = 2 sqrt(s^2-1)(1-4s^2)/y^2, principal root (reported)", false};
    CheckResult naive_eigen{"naive commutator is not an eigen-operator"};

    const Rational half = make_rational(1, 2);
    for (long n = 0; n <= n_max; ++n) {
        for (long v = 0; v <= v_max; ++v) {
            const MorseState state = make_state(n, v);
            const Rational& s = state.qn.s;
            const Rational rv(v);
            const WeightedFunction& psi = state.wavefunction;

            schrodinger.record(apply(schrodinger_diff(s, rv), psi).is_zero(), n, v);

            const RadicalScalar expected(eigenvalue_three(n, v));
            const EigenResult e1 = eigenvalue_one(state);
            const EigenResult e2 = eigenvalue_two(state);
            const bool e1_ok = sgn(s) == 0 ? e1.status == EigenStatus::TrivialZero && e1.value.is_zero()
                                           : e1.status == EigenStatus::Proper && e1.value == expected;
            routes.record(e1_ok && e2.status == EigenStatus::Proper && e2.value == expected, n, v);

            if (sgn(s) == 0) continue;

            if (s != 1 && s != -1) {
                const bool same = k0_prime_composed(s, rv) == k0_prime_simplified(s, rv);
                (composed_radicands_nonnegative(s) ? composed : composed_negative).record(same, n, v);
            }

            const DiffOp naive = naive_commutator(s, rv);
            naive_form.record(is_y_inverse_square_multiplication(naive, naive_commutator_coefficient(s)), n, v);
            naive_principal.record(is_y_inverse_square_multiplication(naive, naive_commutator_principal_form(s)), n,
                                   v);
            const EigenResult en = eigen_of(naive, psi);
            const bool degenerate = s == 1 || s == -1 || s == half || s == -half;
            naive_eigen.record(degenerate ? naive.is_zero() && en.status == EigenStatus::TrivialZero
                                          : en.status == EigenStatus::NotEigenfunction,
                               n, v);
        }
    }
    return {schrodinger, routes, composed, composed_negative, naive_form, naive_principal, naive_eigen};
}

/// Ladder relations on every in-domain cell with v <= v_max.
inline std::vector<CheckResult> run_ladder_suite(long v_max) {
    CheckResult lowering{"K- psi_n = sqrt(n(v-n)) psi_(n-1)"};
    CheckResult annihilate{"K- psi_0 = 0"};
    CheckResult raising{"K+ psi_n = sqrt((n+1)(v-n-1)) psi_(n+1)"};
    for (long v = 0; v <= v_max; ++v) {
        for (long n = 0; 2 * n + 1 <= v; ++n) {
            const LadderCheck lo = verify_lowering(n, v);
            if (lo.outcome != LadderOutcome::OutOfDomain)
                (n == 0 ? annihilate : lowering).record(lo.outcome == LadderOutcome::Holds, n, v);
            const LadderCheck hi = verify_raising(n, v);
            if (hi.outcome != LadderOutcome::OutOfDomain) raising.record(hi.outcome == LadderOutcome::Holds, n, v);
        }
    }
    return {lowering, annihilate, raising};
}

}  // namespace morse
