#ifndef DIFFALG_RATIONAL_HPP
#define DIFFALG_RATIONAL_HPP

#include <compare>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "diffalg/error.hpp"

namespace diffalg {

/// Exact rational number. Always stored in lowest terms with a positive
/// denominator; zero is 0/1. Backed by GMP.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}
    Rational(long num, long den) {
        if (den == 0) throw ParameterError("rational with zero denominator");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }
    explicit Rational(const mpq_class& v) : v_(v) { v_.canonicalize(); }

    /// Accepts "p" or "p/q" with optional leading '-'.
    static Rational parse(std::string_view text);

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    int sign() const { return sgn(v_); }

    Rational inverse() const {
        if (is_zero()) throw DomainError("inverse of zero");
        return Rational(mpq_class(1) / v_);
    }
    Rational abs() const { return Rational(::abs(v_)); }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw DomainError("division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.v_ == b.v_;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = cmp(a.v_, b.v_);
        if (c < 0) return std::strong_ordering::less;
        if (c > 0) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    /// Canonical text: "p" when the denominator is 1, else "p/q".
    std::string str() const { return v_.get_str(); }

    const mpq_class& raw() const { return v_; }

private:
    mpq_class v_;
};

inline Rational Rational::parse(std::string_view text) {
    if (text.empty()) throw ParameterError("empty rational literal");
    try {
        mpq_class v(std::string(text), 10);
        if (v.get_den() == 0) throw ParameterError("rational with zero denominator");
        v.canonicalize();
        return Rational(v);
    } catch (const std::invalid_argument&) {
        throw ParameterError("malformed rational literal '" + std::string(text) + "'");
    }
}

}  // namespace diffalg

#endif
