#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>

#include <gmpxx.h>

namespace pilegame {

using BigInt = mpz_class;

/*
 * Exact rational number, always stored in lowest terms with a positive
 * denominator.  Thin value wrapper over GMP's mpq_class that re-establishes
 * canonical form after every construction.
 */
class Rational {
public:
    Rational() = default;
    Rational(long v) : q_(v) {}                  // NOLINT(implicit)
    Rational(const BigInt& v) : q_(v) {}         // NOLINT(implicit)
    Rational(const BigInt& num, const BigInt& den);
    Rational(long num, long den) : Rational(BigInt(num), BigInt(den)) {}

    BigInt num() const { return q_.get_num(); }
    BigInt den() const { return q_.get_den(); }

    int sign() const { return sgn(q_); }
    bool is_zero() const { return sign() == 0; }

    Rational abs() const;
    Rational reciprocal() const;

    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a);

    friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) == 0; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        return cmp(a.q_, b.q_) <=> 0;
    }

    /// Nearest double, ties to even (subnormals handled).
    double to_double() const;

    /// "num/den", or just "num" when den == 1.
    std::string to_string() const;

    const mpq_class& raw() const { return q_; }

private:
    explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

    mpq_class q_{0};
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// A Rational constrained to the closed interval [0, 1].
class ExactProb {
public:
    ExactProb() = default;
    explicit ExactProb(Rational v);

    const Rational& value() const { return v_; }
    ExactProb complement() const { return ExactProb(Rational(1) - v_); }
    double to_double() const { return v_.to_double(); }

    friend bool operator==(const ExactProb&, const ExactProb&) = default;

private:
    Rational v_;
};

std::ostream& operator<<(std::ostream& os, const ExactProb& p);

BigInt factorial(unsigned n);

}  // namespace pilegame
