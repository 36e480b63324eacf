#pragma once

// Morse bound states in the y = v*exp(-beta*x) coordinate:
//   psi_n^v(y) = N_n^v exp(-y/2) y^s L_n^{2s}(y),   2s = v - 2n - 1.

#include "morse/exact_scalar.hpp"
#include "morse/laurent_poly.hpp"
#include "morse/weighted_function.hpp"

#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>

namespace morse {

struct QuantumNumbers {
    long n = 0;
    long v = 0;
    Rational s;

    /// Normalizable region v >= 2n + 1.
    [[nodiscard]] bool physical() const { return sgn(s) >= 0; }
};

inline QuantumNumbers make_quantum_numbers(long n, long v) {
    if (n < 0 || v < 0) throw std::invalid_argument("quantum numbers must be non-negative");
    return {n, v, make_rational(v - 2 * n - 1, 2)};
}

inline Integer factorial(unsigned long k) {
    Integer f;
    mpz_fac_ui(f.get_mpz_t(), k);
    return f;
}

/// Generalized Laguerre polynomial
///   L_n^a(y) = sum_k (-1)^k C(n+a, n-k) y^k / k!,  C(n+a, n-k) = prod_{t=k+1}^{n} (a+t) / (n-k)!
/// The product form has no Gamma poles, so negative integer a is fine.
inline LaurentPoly laguerre(long n, const Rational& alpha) {
    if (n < 0) throw std::invalid_argument("laguerre: negative degree");
    LaurentPoly out;
    Rational rising = 1;  // prod_{t=k+1}^{n} (alpha + t)
    for (long k = n; k >= 0; --k) {
        if (k < n) rising *= alpha + (k + 1);
        Rational c = rising / Rational(factorial(static_cast<unsigned long>(n - k)) *
                                       factorial(static_cast<unsigned long>(k)));
        if (k % 2 == 1) c = -c;
        out.add_term(static_cast<int>(k), RadicalScalar(c));
    }
    return out;
}

/// N_n^v = sqrt(beta (v-2n-1) n! / Gamma(v-n)); nullopt where Gamma has a pole
/// (v - n < 1) or the norm is zero or imaginary (v - 2n - 1 <= 0).
inline std::optional<RadicalScalar> normalization(long n, long v, const Rational& beta = Rational(1)) {
    if (n < 0 || v < 0) throw std::invalid_argument("normalization: negative quantum number");
    if (v - n < 1 || v - 2 * n - 1 <= 0) return std::nullopt;
    Rational arg = beta * Rational(v - 2 * n - 1) * Rational(factorial(static_cast<unsigned long>(n))) /
                   Rational(factorial(static_cast<unsigned long>(v - n - 1)));
    return sqrt_of_rational(arg);
}

struct MorseState {
    QuantumNumbers qn;
    WeightedFunction wavefunction;  // unnormalized
    std::optional<RadicalScalar> normalization;

    /// N * psi; requires a defined normalization.
    [[nodiscard]] WeightedFunction normalized() const {
        if (!normalization) throw std::domain_error("state is not normalizable");
        return wavefunction.scaled(*normalization);
    }
};

inline MorseState make_state(long n, long v, const Rational& beta = Rational(1)) {
    QuantumNumbers qn = make_quantum_numbers(n, v);
    WeightedFunction psi{qn.s, laguerre(n, 2 * qn.s)};
    return {qn, std::move(psi), normalization(n, v, beta)};
}

class NonBound : public std::domain_error {
public:
    explicit NonBound(const std::string& what) : std::domain_error(what) {}
};

struct PhysicalParams {
    double V0 = 1.0;
    double beta = 1.0;
    double mass = 1.0;
    double hbar = 1.0;
};

struct PhysicalLevel {
    double v;
    double s;
    double E;
};

/// v = sqrt(8 m V0) / (beta hbar), s = (v - 2n - 1)/2, E = -beta^2 hbar^2 s^2 / (2m).
inline PhysicalLevel physical_map(const PhysicalParams& p, long n) {
    if (!(p.V0 > 0) || !(p.beta > 0) || !(p.mass > 0) || !(p.hbar > 0))
        throw std::invalid_argument("physical_map: V0, beta, mass and hbar must be positive");
    if (n < 0) throw std::invalid_argument("physical_map: negative level index");
    const double v = std::sqrt(8.0 * p.mass * p.V0) / (p.beta * p.hbar);
    const double s = (v - 2.0 * static_cast<double>(n) - 1.0) / 2.0;
    if (s < 0) throw NonBound("level " + std::to_string(n) + " is not bound (s < 0)");
    const double E = s == 0.0 ? 0.0 : -p.beta * p.beta * p.hbar * p.hbar * s * s / (2.0 * p.mass);
    return {v, s, E};
}

}  // namespace morse
