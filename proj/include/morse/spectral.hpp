#pragma once

// Eigenvalue extraction by exact proportionality, the three k0' computations,
// and checks of the ladder relations K-psi_n = k- psi_{n-1}, K+psi_n = k+ psi_{n+1}.

#include "morse/diff_op.hpp"
#include "morse/exact_scalar.hpp"
#include "morse/morse_model.hpp"
#include "morse/weighted_function.hpp"

#include <stdexcept>
#include <string>

namespace morse {

enum class EigenStatus { Proper, TrivialZero, NotEigenfunction, OperatorUndefined };

inline const char* to_string(EigenStatus s) {
    switch (s) {
        case EigenStatus::Proper: return "Proper";
        case EigenStatus::TrivialZero: return "TrivialZero";
        case EigenStatus::NotEigenfunction: return "NotEigenfunction";
        case EigenStatus::OperatorUndefined: return "OperatorUndefined";
    }
    return "?";
}

inline EigenStatus parse_eigen_status(const std::string& text) {
    for (auto s : {EigenStatus::Proper, EigenStatus::TrivialZero, EigenStatus::NotEigenfunction,
                   EigenStatus::OperatorUndefined})
        if (text == to_string(s)) return s;
    throw std::invalid_argument("unknown eigen status '" + text + "'");
}

struct EigenResult {
    RadicalScalar value;
    EigenStatus status = EigenStatus::NotEigenfunction;

    /// Proper or TrivialZero: the eigenvalue equation holds with `value`.
    [[nodiscard]] bool holds() const { return status == EigenStatus::Proper || status == EigenStatus::TrivialZero; }

    friend bool operator==(const EigenResult&, const EigenResult&) = default;
};

class ZeroState : public std::invalid_argument {
public:
    ZeroState() : std::invalid_argument("eigenvalue extraction against the zero function") {}
};

/// Inverse of a single-term radical q i^m sqrt(r): i^-m sqrt(r) / (q r).
inline RadicalScalar reciprocal(const RadicalScalar& a) {
    if (a.terms().size() != 1) throw std::domain_error("reciprocal: only single-term radicals are invertible here");
    const auto& t = a.terms()[0];
    Rational c = Rational(1) / (t.coeff * Rational(t.radicand));
    if (t.i_power == 1) c = -c;
    return RadicalScalar::term(c, t.radicand, t.i_power);
}

/// Finds lambda with result = lambda * state, exactly. The candidate comes from the
/// lowest exponent of `result` and is then checked against every coefficient.
inline EigenResult extract_eigenvalue(const WeightedFunction& result, const WeightedFunction& state) {
    if (state.is_zero()) throw ZeroState();
    if (result.is_zero()) return {RadicalScalar{}, EigenStatus::TrivialZero};
    if (!is_integer(result.s - state.s)) return {RadicalScalar{}, EigenStatus::NotEigenfunction};

    const LaurentPoly aligned = result.reweighted(state.s).poly;
    const int k = aligned.min_exponent();
    const RadicalScalar denom = state.poly.coeff(k);
    if (denom.is_zero()) return {RadicalScalar{}, EigenStatus::NotEigenfunction};

    RadicalScalar lambda = aligned.coeff(k) * reciprocal(denom);
    if (state.poly.scaled(lambda) != aligned) return {RadicalScalar{}, EigenStatus::NotEigenfunction};
    return {lambda, EigenStatus::Proper};
}

/// Eigenvalue of `op` on `state`. A zero operator gives TrivialZero; a non-zero
/// operator that annihilates the state gives Proper(0).
inline EigenResult eigen_of(const DiffOp& op, const WeightedFunction& state) {
    if (op.is_zero()) return {RadicalScalar{}, EigenStatus::TrivialZero};
    EigenResult r = extract_eigenvalue(apply(op, state), state);
    if (r.status == EigenStatus::TrivialZero) r.status = EigenStatus::Proper;
    return r;
}

/// k0' from the parameter-shifted (simplified) derived operator.
inline EigenResult eigenvalue_one(const MorseState& state) {
    const auto& qn = state.qn;
    return eigen_of(k0_prime_simplified(qn.s, Rational(qn.v)), state.wavefunction);
}

/// k0 (not doubled) from the second-order differential form of K0.
inline EigenResult k0_eigenvalue(const MorseState& state) {
    const auto& qn = state.qn;
    return eigen_of(k0_diff(qn.s, Rational(qn.n)), state.wavefunction);
}

/// 2 k0, on the same scale as the other two routes.
inline EigenResult eigenvalue_two(const MorseState& state) {
    EigenResult r = k0_eigenvalue(state);
    r.value = r.value * RadicalScalar(2);
    return r;
}

/// k0' = 2 k0 = 2n - v + 1 = -2s.
inline Rational eigenvalue_three(long n, long v) { return Rational(2 * n - v + 1); }

inline EigenResult eigenvalue_one(long n, long v) { return eigenvalue_one(make_state(n, v)); }
inline EigenResult eigenvalue_two(long n, long v) { return eigenvalue_two(make_state(n, v)); }

enum class LadderOutcome { Holds, Fails, OutOfDomain };

inline const char* to_string(LadderOutcome o) {
    switch (o) {
        case LadderOutcome::Holds: return "Holds";
        case LadderOutcome::Fails: return "Fails";
        case LadderOutcome::OutOfDomain: return "OutOfDomain";
    }
    return "?";
}

struct LadderCheck {
    LadderOutcome outcome = LadderOutcome::OutOfDomain;
    RadicalScalar factor;  // k-, k+ or the commutator eigenvalue that was checked
};

/// N_n K- psi_n = sqrt(n(v-n)) N_{n-1} psi_{n-1}. At n = 0 the check is K- psi_0 = 0.
inline LadderCheck verify_lowering(long n, long v) {
    if (n < 0 || v < 0) return {};
    const MorseState state = make_state(n, v);
    if (!state.normalization) return {};
    const DiffOp lower = k_minus(state.qn.s, Rational(v));  // s >= 1/2 here
    const WeightedFunction lhs = apply(lower, state.normalized());
    if (n == 0) return {lhs.is_zero() ? LadderOutcome::Holds : LadderOutcome::Fails, RadicalScalar{}};

    const MorseState below = make_state(n - 1, v);
    if (!below.normalization) return {};
    const RadicalScalar k = sqrt_of_rational(Rational(n * (v - n)));
    const WeightedFunction rhs = below.normalized().scaled(k);
    return {align_and_compare(lhs, rhs) == Comparison::Equal ? LadderOutcome::Holds : LadderOutcome::Fails, k};
}

/// N_n K+ psi_n = sqrt((n+1)(v-n-1)) N_{n+1} psi_{n+1}.
inline LadderCheck verify_raising(long n, long v) {
    if (n < 0 || v < 0) return {};
    const MorseState state = make_state(n, v);
    const MorseState above = make_state(n + 1, v);
    if (!state.normalization || !above.normalization) return {};
    const DiffOp raise = k_plus(state.qn.s, Rational(v));
    const WeightedFunction lhs = apply(raise, state.normalized());
    const RadicalScalar k = sqrt_of_rational(Rational((n + 1) * (v - n - 1)));
    const WeightedFunction rhs = above.normalized().scaled(k);
    return {align_and_compare(lhs, rhs) == Comparison::Equal ? LadderOutcome::Holds : LadderOutcome::Fails, k};
}

/// The composed commutator K+^{s+1} K-^{s} - K-^{s-1} K+^{s} acts on psi_n^v as 2n - v + 1.
/// Domain: physical cells with s not in {0, 1} and all factor radicands non-negative.
inline LadderCheck verify_commutator_action(long n, long v) {
    if (n < 0 || v < 0) return {};
    const MorseState state = make_state(n, v);
    const Rational& s = state.qn.s;
    if (sgn(s) <= 0 || s == 1 || !composed_radicands_nonnegative(s)) return {};
    const EigenResult r = eigen_of(k0_prime_composed(s, Rational(v)), state.wavefunction);
    const RadicalScalar expected(eigenvalue_three(n, v));
    const bool ok = r.status == EigenStatus::Proper && r.value == expected;
    return {ok ? LadderOutcome::Holds : LadderOutcome::Fails, r.value};
}

}  // namespace morse
