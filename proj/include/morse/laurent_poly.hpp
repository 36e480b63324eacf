#pragma once

#include "morse/exact_scalar.hpp"

#include <cmath>
#include <complex>
#include <map>
#include <ostream>
#include <string>

namespace morse {

/// Finite sum of c_k * y^k, k any integer, with exact coefficients.
class LaurentPoly {
public:
    using Map = std::map<int, RadicalScalar>;

    LaurentPoly() = default;
    LaurentPoly(const RadicalScalar& c) { add_term(0, c); }  // NOLINT(google-explicit-constructor)
    LaurentPoly(const Rational& c) { add_term(0, RadicalScalar(c)); }  // NOLINT(google-explicit-constructor)
    LaurentPoly(long c) : LaurentPoly(Rational(c)) {}  // NOLINT(google-explicit-constructor)
    LaurentPoly(int c) : LaurentPoly(Rational(c)) {}   // NOLINT(google-explicit-constructor)

    static LaurentPoly monomial(const RadicalScalar& c, int exponent) {
        LaurentPoly p;
        p.add_term(exponent, c);
        return p;
    }
    static LaurentPoly y(int exponent = 1) { return monomial(RadicalScalar(1), exponent); }

    [[nodiscard]] bool is_zero() const { return coeffs_.empty(); }
    [[nodiscard]] const Map& terms() const { return coeffs_; }
    [[nodiscard]] std::size_t size() const { return coeffs_.size(); }

    [[nodiscard]] RadicalScalar coeff(int exponent) const {
        auto it = coeffs_.find(exponent);
        return it == coeffs_.end() ? RadicalScalar{} : it->second;
    }

    /// Lowest and highest exponents; the polynomial must be non-zero.
    [[nodiscard]] int min_exponent() const { return coeffs_.begin()->first; }
    [[nodiscard]] int max_exponent() const { return coeffs_.rbegin()->first; }

    void add_term(int exponent, const RadicalScalar& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = coeffs_.try_emplace(exponent, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) coeffs_.erase(it);
        }
    }

    /// Multiplies by y^d.
    [[nodiscard]] LaurentPoly shifted(int d) const {
        if (d == 0) return *this;
        LaurentPoly out;
        for (const auto& [k, c] : coeffs_) out.coeffs_.emplace_hint(out.coeffs_.end(), k + d, c);
        return out;
    }

    [[nodiscard]] LaurentPoly scaled(const RadicalScalar& a) const {
        LaurentPoly out;
        if (a.is_zero()) return out;
        for (const auto& [k, c] : coeffs_) out.coeffs_.emplace_hint(out.coeffs_.end(), k, c * a);
        return out;
    }

    [[nodiscard]] std::complex<double> evaluate(double y) const {
        std::complex<double> acc{0.0, 0.0};
        for (const auto& [k, c] : coeffs_) acc += c.to_complex() * std::pow(y, k);
        return acc;
    }

    LaurentPoly& operator+=(const LaurentPoly& b) {
        for (const auto& [k, c] : b.coeffs_) add_term(k, c);
        return *this;
    }
    LaurentPoly& operator-=(const LaurentPoly& b) {
        for (const auto& [k, c] : b.coeffs_) add_term(k, -c);
        return *this;
    }

    LaurentPoly operator-() const { return scaled(RadicalScalar(-1)); }

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly out;
        for (const auto& [i, x] : a.coeffs_)
            for (const auto& [j, y] : b.coeffs_) out.add_term(i + j, x * y);
        return out;
    }
    LaurentPoly& operator*=(const LaurentPoly& b) { return *this = *this * b; }

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.coeffs_ == b.coeffs_; }

    /// Ascending exponents, e.g. "2*y^-1 + -1"; radical coefficients are parenthesized.
    [[nodiscard]] std::string str() const {
        if (coeffs_.empty()) return "0";
        std::string out;
        bool first = true;
        for (const auto& [k, c] : coeffs_) {
            if (!first) out += " + ";
            first = false;
            std::string cs = c.str();
            const bool compound = cs.find_first_of("+*") != std::string::npos;
            if (k == 0) {
                out += cs;
                continue;
            }
            if (cs == "1") {
                out += "y";
            } else if (cs == "-1") {
                out += "-y";
            } else {
                out += compound ? "(" + cs + ")*y" : cs + "*y";
            }
            if (k != 1) out += "^" + std::to_string(k);
        }
        return out;
    }

    friend std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << p.str(); }

private:
    Map coeffs_;
};

/// Termwise d/dy, including negative exponents.
inline LaurentPoly derivative(const LaurentPoly& p) {
    LaurentPoly out;
    for (const auto& [k, c] : p.terms()) {
        if (k == 0) continue;
        out.add_term(k - 1, c * RadicalScalar(static_cast<long>(k)));
    }
    return out;
}

}  // namespace morse
