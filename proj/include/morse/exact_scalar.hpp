#pragma once

// Exact scalars: GMP rationals plus a radical extension q * i^m * sqrt(r)
// closed under the sums and products the ladder-operator algebra produces.

#include <gmpxx.h>

#include <algorithm>
#include <complex>
#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace morse {

using Integer = mpz_class;
using Rational = mpq_class;

class NotRational : public std::domain_error {
public:
    explicit NotRational(const std::string& what) : std::domain_error(what) {}
};

inline Rational make_rational(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("make_rational: zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

/// "p/q", or "p" when the denominator is 1.
inline std::string to_string(const Rational& q) { return q.get_str(); }

inline Rational parse_rational(std::string_view text) {
    std::string s(text);
    if (s.empty()) throw std::invalid_argument("parse_rational: empty string");
    Rational q;
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("parse_rational: bad rational '" + s + "'");
    if (q.get_den() == 0) throw std::invalid_argument("parse_rational: zero denominator");
    q.canonicalize();
    return q;
}

/// Writes x = outer^2 * core with core squarefree. x must be positive.
/// Trial division; radicands met by the Morse algebra are smooth and small.
inline std::pair<Integer, Integer> split_square(const Integer& x) {
    if (sgn(x) <= 0) throw std::invalid_argument("split_square: non-positive argument");
    Integer rem = x;
    Integer outer = 1;
    Integer core = 1;
    for (unsigned long p = 2; Integer(p) * p <= rem; p += (p == 2 ? 1 : 2)) {
        int e = 0;
        while (mpz_divisible_ui_p(rem.get_mpz_t(), p) != 0) {
            mpz_divexact_ui(rem.get_mpz_t(), rem.get_mpz_t(), p);
            ++e;
        }
        for (int k = 0; k < e / 2; ++k) outer *= p;
        if (e % 2 == 1) core *= p;
    }
    core *= rem;
    return {outer, core};
}

struct RadicalTerm {
    Integer radicand;  // squarefree, >= 1
    int i_power = 0;   // 0 or 1
    Rational coeff;    // never zero

    friend bool operator==(const RadicalTerm& a, const RadicalTerm& b) {
        return a.radicand == b.radicand && a.i_power == b.i_power && a.coeff == b.coeff;
    }
};

namespace detail {
inline int key_cmp(const RadicalTerm& a, const RadicalTerm& b) {
    int c = cmp(a.radicand, b.radicand);
    if (c != 0) return c;
    return a.i_power - b.i_power;
}
}  // namespace detail

/// Finite sum of q * i^m * sqrt(r) over distinct keys (r, m), r squarefree.
/// The normal form is unique, so equality is term-list equality.
class RadicalScalar {
public:
    RadicalScalar() = default;
    RadicalScalar(const Rational& q) {  // NOLINT(google-explicit-constructor)
        if (sgn(q) != 0) terms_.push_back({Integer(1), 0, q});
    }
    RadicalScalar(long q) : RadicalScalar(Rational(q)) {}  // NOLINT(google-explicit-constructor)
    RadicalScalar(int q) : RadicalScalar(Rational(q)) {}   // NOLINT(google-explicit-constructor)

    /// q * i^m * sqrt(r) for any positive integer r; square factors of r move into q.
    static RadicalScalar term(const Rational& q, const Integer& r, int i_power = 0) {
        if (i_power < 0 || i_power > 1) throw std::invalid_argument("RadicalScalar::term: i_power must be 0 or 1");
        RadicalScalar out;
        if (sgn(q) == 0) return out;
        auto [outer, core] = split_square(r);
        out.terms_.push_back({core, i_power, q * Rational(outer)});
        return out;
    }

    static RadicalScalar imaginary_unit() { return term(Rational(1), Integer(1), 1); }

    [[nodiscard]] bool is_zero() const { return terms_.empty(); }
    [[nodiscard]] const std::vector<RadicalTerm>& terms() const { return terms_; }

    [[nodiscard]] std::optional<Rational> try_rational() const {
        if (terms_.empty()) return Rational(0);
        if (terms_.size() == 1 && terms_[0].radicand == 1 && terms_[0].i_power == 0) return terms_[0].coeff;
        return std::nullopt;
    }

    [[nodiscard]] Rational as_rational() const {
        auto q = try_rational();
        if (!q) throw NotRational("not a rational: " + str());
        return *q;
    }

    [[nodiscard]] bool is_rational() const { return try_rational().has_value(); }

    [[nodiscard]] std::complex<double> to_complex() const {
        std::complex<double> z{0.0, 0.0};
        for (const auto& t : terms_) {
            double mag = t.coeff.get_d() * std::sqrt(t.radicand.get_d());
            z += t.i_power == 0 ? std::complex<double>{mag, 0.0} : std::complex<double>{0.0, mag};
        }
        return z;
    }

    /// Terms "q*sqrt(r)" joined by "+", "i*" prefix on imaginary terms; "*sqrt(1)" is omitted.
    [[nodiscard]] std::string str() const {
        if (terms_.empty()) return "0";
        std::string out;
        for (std::size_t k = 0; k < terms_.size(); ++k) {
            const auto& t = terms_[k];
            if (k > 0) out += '+';
            if (t.i_power == 1) out += "i*";
            out += to_string(t.coeff);
            if (t.radicand != 1) out += "*sqrt(" + t.radicand.get_str() + ")";
        }
        return out;
    }

    RadicalScalar operator-() const {
        RadicalScalar out = *this;
        for (auto& t : out.terms_) t.coeff = -t.coeff;
        return out;
    }

    RadicalScalar& operator+=(const RadicalScalar& b) {
        if (b.terms_.empty()) return *this;
        if (terms_.empty()) return *this = b;
        // fast path: both purely rational
        if (terms_.size() == 1 && b.terms_.size() == 1 && detail::key_cmp(terms_[0], b.terms_[0]) == 0) {
            terms_[0].coeff += b.terms_[0].coeff;
            if (sgn(terms_[0].coeff) == 0) terms_.clear();
            return *this;
        }
        std::vector<RadicalTerm> merged;
        merged.reserve(terms_.size() + b.terms_.size());
        std::size_t i = 0, j = 0;
        while (i < terms_.size() || j < b.terms_.size()) {
            if (j == b.terms_.size() || (i < terms_.size() && detail::key_cmp(terms_[i], b.terms_[j]) < 0)) {
                merged.push_back(std::move(terms_[i++]));
            } else if (i == terms_.size() || detail::key_cmp(terms_[i], b.terms_[j]) > 0) {
                merged.push_back(b.terms_[j++]);
            } else {
                Rational c = terms_[i].coeff + b.terms_[j].coeff;
                if (sgn(c) != 0) merged.push_back({terms_[i].radicand, terms_[i].i_power, c});
                ++i;
                ++j;
            }
        }
        terms_ = std::move(merged);
        return *this;
    }

    RadicalScalar& operator-=(const RadicalScalar& b) { return *this += -b; }

    RadicalScalar& operator*=(const RadicalScalar& b) { return *this = *this * b; }

    friend RadicalScalar operator+(RadicalScalar a, const RadicalScalar& b) { return a += b; }
    friend RadicalScalar operator-(RadicalScalar a, const RadicalScalar& b) { return a -= b; }

    friend RadicalScalar operator*(const RadicalScalar& a, const RadicalScalar& b) {
        RadicalScalar out;
        if (a.terms_.empty() || b.terms_.empty()) return out;
        if (a.terms_.size() == 1 && b.terms_.size() == 1 && a.terms_[0].radicand == 1 && b.terms_[0].radicand == 1 &&
            a.terms_[0].i_power == 0 && b.terms_[0].i_power == 0) {
            out.terms_.push_back({Integer(1), 0, a.terms_[0].coeff * b.terms_[0].coeff});
            return out;
        }
        for (const auto& x : a.terms_) {
            for (const auto& y : b.terms_) {
                // r1, r2 squarefree: r1*r2 = g^2 * (r1/g)*(r2/g), the latter squarefree
                Integer g = gcd(x.radicand, y.radicand);
                Integer core = (x.radicand / g) * (y.radicand / g);
                Rational c = x.coeff * y.coeff * Rational(g);
                int m = x.i_power + y.i_power;
                if (m == 2) {
                    c = -c;
                    m = 0;
                }
                RadicalScalar t;
                t.terms_.push_back({core, m, c});
                out += t;
            }
        }
        return out;
    }

    friend bool operator==(const RadicalScalar& a, const RadicalScalar& b) { return a.terms_ == b.terms_; }

    friend std::ostream& operator<<(std::ostream& os, const RadicalScalar& x) { return os << x.str(); }

private:
    std::vector<RadicalTerm> terms_;  // sorted by (radicand, i_power)
};

/// Principal square root: q * i^m * sqrt(r) with m = 1 iff x < 0.
inline RadicalScalar sqrt_of_rational(const Rational& x) {
    if (sgn(x) == 0) return {};
    const int m = sgn(x) < 0 ? 1 : 0;
    // sqrt(p/q) = sqrt(p*q) / q
    Integer p = abs(x.get_num());
    const Integer& q = x.get_den();
    return RadicalScalar::term(Rational(1) / Rational(q), p * q, m);
}

/// Inverse of RadicalScalar::str().
inline RadicalScalar parse_radical(std::string_view text) {
    if (text.empty()) throw std::invalid_argument("parse_radical: empty string");
    RadicalScalar out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('+', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view tok = text.substr(pos, end - pos);
        if (tok.empty()) throw std::invalid_argument("parse_radical: empty term in '" + std::string(text) + "'");
        int m = 0;
        if (tok.starts_with("i*")) {
            m = 1;
            tok.remove_prefix(2);
        }
        Integer r = 1;
        if (auto star = tok.find("*sqrt("); star != std::string_view::npos) {
            if (!tok.ends_with(")")) throw std::invalid_argument("parse_radical: unterminated sqrt");
            std::string_view rad = tok.substr(star + 6, tok.size() - star - 7);
            if (r.set_str(std::string(rad), 10) != 0 || sgn(r) <= 0)
                throw std::invalid_argument("parse_radical: bad radicand");
            tok = tok.substr(0, star);
        }
        out += RadicalScalar::term(parse_rational(tok), r, m);
        pos = end + 1;
    }
    return out;
}

}  // namespace morse
