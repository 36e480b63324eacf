#pragma once

#include "morse/exact_scalar.hpp"
#include "morse/laurent_poly.hpp"

#include <cmath>
#include <complex>
#include <optional>
#include <stdexcept>
#include <string>

namespace morse {

/// exp(-y/2) * y^s * poly(y) on y in (0, inf). The weight is never expanded;
/// every Morse operator maps this family into itself.
struct WeightedFunction {
    Rational s;
    LaurentPoly poly;

    [[nodiscard]] bool is_zero() const { return poly.is_zero(); }

    [[nodiscard]] WeightedFunction scaled(const RadicalScalar& a) const { return {s, poly.scaled(a)}; }

    /// Same function re-expressed with weight exponent `target`; target - s must be an integer.
    [[nodiscard]] WeightedFunction reweighted(const Rational& target) const {
        Rational d = s - target;
        if (!is_integer(d)) throw std::invalid_argument("reweighted: non-integer weight shift");
        return {target, poly.shifted(static_cast<int>(d.get_num().get_si()))};
    }

    [[nodiscard]] std::complex<double> evaluate(double y) const {
        return std::exp(-y / 2.0) * std::pow(y, s.get_d()) * poly.evaluate(y);
    }

    [[nodiscard]] std::string str() const {
        return "exp(-y/2) * y^(" + to_string(s) + ") * (" + poly.str() + ")";
    }
};

/// d/dy[e^(-y/2) y^s P] = e^(-y/2) y^s (P' + (s/y) P - P/2).
inline WeightedFunction weighted_derivative(const WeightedFunction& f) {
    LaurentPoly out = derivative(f.poly);
    if (sgn(f.s) != 0) out += f.poly.shifted(-1).scaled(RadicalScalar(f.s));
    out -= f.poly.scaled(RadicalScalar(make_rational(1, 2)));
    return {f.s, std::move(out)};
}

enum class Comparison { Equal, Unequal, Incomparable };

inline const char* to_string(Comparison c) {
    switch (c) {
        case Comparison::Equal: return "Equal";
        case Comparison::Unequal: return "Unequal";
        case Comparison::Incomparable: return "Incomparable";
    }
    return "?";
}

inline Comparison align_and_compare(const WeightedFunction& f, const WeightedFunction& g) {
    if (f.is_zero() || g.is_zero()) return f.is_zero() == g.is_zero() ? Comparison::Equal : Comparison::Unequal;
    if (!is_integer(f.s - g.s)) return Comparison::Incomparable;
    const Rational& low = f.s < g.s ? f.s : g.s;
    return f.reweighted(low).poly == g.reweighted(low).poly ? Comparison::Equal : Comparison::Unequal;
}

/// Sum of two functions whose weights differ by an integer; the result carries the smaller weight.
inline WeightedFunction operator+(const WeightedFunction& f, const WeightedFunction& g) {
    if (f.is_zero()) return g;
    if (g.is_zero()) return f;
    if (!is_integer(f.s - g.s)) throw std::invalid_argument("WeightedFunction sum: incomparable weights");
    const Rational& low = f.s < g.s ? f.s : g.s;
    return {low, f.reweighted(low).poly + g.reweighted(low).poly};
}

inline WeightedFunction operator-(const WeightedFunction& f, const WeightedFunction& g) {
    return f + g.scaled(RadicalScalar(-1));
}

}  // namespace morse
