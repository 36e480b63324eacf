#pragma once

// Linear differential operators sum_k a_k(y) d^k/dy^k with Laurent coefficients,
// and the Morse ladder-operator family built from them.

#include "morse/exact_scalar.hpp"
#include "morse/laurent_poly.hpp"
#include "morse/weighted_function.hpp"

#include <map>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace morse {

class UndefinedOperator : public std::domain_error {
public:
    explicit UndefinedOperator(const std::string& what) : std::domain_error(what) {}
};

class DiffOp {
public:
    using Map = std::map<int, LaurentPoly>;

    DiffOp() = default;

    static DiffOp identity() { return multiplication(LaurentPoly(1)); }
    static DiffOp multiplication(const LaurentPoly& a) {
        DiffOp op;
        op.add_term(0, a);
        return op;
    }
    /// d^order/dy^order
    static DiffOp d(int order = 1) {
        DiffOp op;
        op.add_term(order, LaurentPoly(1));
        return op;
    }

    [[nodiscard]] bool is_zero() const { return terms_.empty(); }
    [[nodiscard]] const Map& terms() const { return terms_; }
    [[nodiscard]] int max_order() const { return terms_.empty() ? -1 : terms_.rbegin()->first; }

    [[nodiscard]] LaurentPoly coeff(int order) const {
        auto it = terms_.find(order);
        return it == terms_.end() ? LaurentPoly{} : it->second;
    }

    /// True when only the order-0 term is present (or the operator is zero).
    [[nodiscard]] bool is_multiplication() const { return terms_.empty() || (terms_.size() == 1 && terms_.count(0)); }

    void add_term(int order, const LaurentPoly& a) {
        if (order < 0) throw std::invalid_argument("DiffOp: negative derivative order");
        if (a.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(order, a);
        if (!inserted) {
            it->second += a;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    [[nodiscard]] DiffOp scaled(const RadicalScalar& c) const {
        DiffOp out;
        for (const auto& [k, a] : terms_) out.add_term(k, a.scaled(c));
        return out;
    }

    DiffOp& operator+=(const DiffOp& b) {
        for (const auto& [k, a] : b.terms_) add_term(k, a);
        return *this;
    }
    DiffOp& operator-=(const DiffOp& b) {
        for (const auto& [k, a] : b.terms_) add_term(k, -a);
        return *this;
    }
    friend DiffOp operator+(DiffOp a, const DiffOp& b) { return a += b; }
    friend DiffOp operator-(DiffOp a, const DiffOp& b) { return a -= b; }

    friend bool operator==(const DiffOp& a, const DiffOp& b) { return a.terms_ == b.terms_; }

    /// e.g. "(-4*y^-1)*d/dy + (-4)*d2/dy2 + (1*y^-2)"
    [[nodiscard]] std::string str() const {
        if (terms_.empty()) return "0";
        std::string out;
        for (const auto& [k, a] : terms_) {
            if (!out.empty()) out += " + ";
            out += "(" + a.str() + ")";
            if (k == 1) out += "*d/dy";
            if (k > 1) out += "*d" + std::to_string(k) + "/dy" + std::to_string(k);
        }
        return out;
    }

    friend std::ostream& operator<<(std::ostream& os, const DiffOp& op) { return os << op.str(); }

private:
    Map terms_;
};

inline WeightedFunction apply(const DiffOp& op, const WeightedFunction& f) {
    WeightedFunction out{f.s, {}};
    WeightedFunction deriv = f;
    int order = 0;
    for (const auto& [k, a] : op.terms()) {
        while (order < k) {
            deriv = weighted_derivative(deriv);
            ++order;
        }
        out.poly += a * deriv.poly;
    }
    return out;
}

/// a o b by Leibniz: (a_j D^j)(b_k D^k) = sum_i C(j,i) a_j b_k^(i) D^(j-i+k).
inline DiffOp compose(const DiffOp& a, const DiffOp& b) {
    DiffOp out;
    for (const auto& [j, aj] : a.terms()) {
        for (const auto& [k, bk] : b.terms()) {
            LaurentPoly bderiv = bk;
            long binom = 1;
            for (int i = 0; i <= j; ++i) {
                if (i > 0) {
                    bderiv = derivative(bderiv);
                    binom = binom * (j - i + 1) / i;
                }
                if (bderiv.is_zero()) break;
                out.add_term(j - i + k, (aj * bderiv).scaled(RadicalScalar(binom)));
            }
        }
    }
    return out;
}

inline DiffOp commutator(const DiffOp& a, const DiffOp& b) { return compose(a, b) - compose(b, a); }

namespace detail {
inline DiffOp first_order(const Rational& d_coeff, const Rational& inv_y_coeff, const Rational& constant) {
    DiffOp op;
    op.add_term(1, LaurentPoly(d_coeff));
    LaurentPoly zeroth = LaurentPoly::monomial(RadicalScalar(inv_y_coeff), -1);
    zeroth += LaurentPoly(constant);
    op.add_term(0, zeroth);
    return op;
}
}  // namespace detail

/// Lowering operator K- = -[(2s+1) D - s(2s+1)/y + v/2] sqrt((s+1)/s).
inline DiffOp k_minus(const Rational& s, const Rational& v) {
    if (sgn(s) == 0) throw UndefinedOperator("K- is undefined at s = 0");
    DiffOp bracket = detail::first_order(2 * s + 1, -s * (2 * s + 1), v / 2);
    return bracket.scaled(-sqrt_of_rational((s + 1) / s));
}

/// Raising operator K+ = [(2s-1) D + s(2s-1)/y - v/2] sqrt((s-1)/s).
inline DiffOp k_plus(const Rational& s, const Rational& v) {
    if (sgn(s) == 0) throw UndefinedOperator("K+ is undefined at s = 0");
    DiffOp bracket = detail::first_order(2 * s - 1, s * (2 * s - 1), -v / 2);
    return bracket.scaled(sqrt_of_rational((s - 1) / s));
}

namespace detail {
// y D^2 + D - s^2/y - y/4 + constant
inline DiffOp laguerre_type(const Rational& s, const Rational& constant) {
    DiffOp op;
    op.add_term(2, LaurentPoly::y(1));
    op.add_term(1, LaurentPoly(1));
    LaurentPoly zeroth = LaurentPoly::monomial(RadicalScalar(-s * s), -1);
    zeroth += LaurentPoly::monomial(RadicalScalar(make_rational(-1, 4)), 1);
    zeroth += LaurentPoly(constant);
    op.add_term(0, zeroth);
    return op;
}
}  // namespace detail

/// K0 = y D^2 + D - s^2/y - y/4 + n + 1/2
inline DiffOp k0_diff(const Rational& s, const Rational& n) { return detail::laguerre_type(s, n + make_rational(1, 2)); }

/// y D^2 + D - s^2/y - y/4 + v/2; annihilates every psi_n^v.
inline DiffOp schrodinger_diff(const Rational& s, const Rational& v) { return detail::laguerre_type(s, v / 2); }

/// s (-(8/y) D - 8 D^2 + 8 s^2/y^2 - 4v/y); the zero operator at s = 0.
inline DiffOp k0_prime_simplified(const Rational& s, const Rational& v) {
    DiffOp op;
    op.add_term(2, LaurentPoly(-8 * s));
    op.add_term(1, LaurentPoly::monomial(RadicalScalar(-8 * s), -1));
    LaurentPoly zeroth = LaurentPoly::monomial(RadicalScalar(8 * s * s * s), -2);
    zeroth += LaurentPoly::monomial(RadicalScalar(-4 * s * v), -1);
    op.add_term(0, zeroth);
    return op;
}

/// K+^{s+1,v} K-^{s,v} - K-^{s-1,v} K+^{s,v}, with every radical prefactor kept exact.
inline DiffOp k0_prime_composed(const Rational& s, const Rational& v) {
    if (sgn(s) == 0 || s == 1 || s == -1)
        throw UndefinedOperator("parameter-shifted commutator is undefined at s = " + to_string(s));
    return compose(k_plus(s + 1, v), k_minus(s, v)) - compose(k_minus(s - 1, v), k_plus(s, v));
}

/// [K+^{s,v}, K-^{s,v}] with no parameter shift.
inline DiffOp naive_commutator(const Rational& s, const Rational& v) {
    if (sgn(s) == 0) throw UndefinedOperator("K+/K- are undefined at s = 0");
    return commutator(k_plus(s, v), k_minus(s, v));
}

/// Radicands (s+1)/s, s/(s+1), s/(s-1), (s-1)/s of the four factors in
/// k0_prime_composed are all non-negative. Requires s not in {-1, 0, 1}.
inline bool composed_radicands_nonnegative(const Rational& s) {
    const std::vector<Rational> radicands{(s + 1) / s, s / (s + 1), s / (s - 1), (s - 1) / s};
    for (const auto& r : radicands)
        if (sgn(r) < 0) return false;
    return true;
}

enum class OperatorClass { Proper, Zero, Undefined };

inline const char* to_string(OperatorClass c) {
    switch (c) {
        case OperatorClass::Proper: return "Proper";
        case OperatorClass::Zero: return "Zero";
        case OperatorClass::Undefined: return "Undefined";
    }
    return "?";
}

/// Runs an operator constructor and classifies its outcome.
template <class Build>
OperatorClass is_zero_or_undefined(Build&& build) {
    try {
        DiffOp op = std::forward<Build>(build)();
        return op.is_zero() ? OperatorClass::Zero : OperatorClass::Proper;
    } catch (const UndefinedOperator&) {
        return OperatorClass::Undefined;
    }
}

}  // namespace morse
