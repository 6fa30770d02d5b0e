#include "pilegame/rational.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>

namespace pilegame {

Rational::Rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

Rational Rational::abs() const { return Rational(mpq_class(::abs(q_))); }

Rational Rational::reciprocal() const {
    if (is_zero()) throw std::domain_error("reciprocal of zero");
    return Rational(den(), num());
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("division by zero");
    q_ /= o.q_;
    return *this;
}

Rational operator-(const Rational& a) { return Rational(mpq_class(-a.q_)); }

namespace {

long bit_length(const BigInt& v) { return static_cast<long>(mpz_sizeinbase(v.get_mpz_t(), 2)); }

// a * 2^s for possibly negative s, exact as a (num, den) pair scale.
void scale_pow2(BigInt& num, BigInt& den, long s) {
    if (s >= 0)
        mpz_mul_2exp(num.get_mpz_t(), num.get_mpz_t(), static_cast<mp_bitcnt_t>(s));
    else
        mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), static_cast<mp_bitcnt_t>(-s));
}

}  // namespace

double Rational::to_double() const {
    if (is_zero()) return 0.0;
    BigInt a = ::abs(q_.get_num());
    const BigInt b = q_.get_den();

    // e2 = floor(log2(a/b))
    long e2 = bit_length(a) - bit_length(b);
    {
        BigInt lhs = a, rhs = b;
        scale_pow2(rhs, lhs, e2);  // compare a with b * 2^e2
        if (lhs < rhs) --e2;
    }
    if (e2 > 1023) return sign() > 0 ? HUGE_VAL : -HUGE_VAL;

    constexpr long kMantBits = 53;
    constexpr long kMinExp = -1022;
    long prec = e2 >= kMinExp ? kMantBits : kMantBits - (kMinExp - e2);
    long shift = prec - 1 - e2;

    BigInt num = a, den = b;
    scale_pow2(num, den, shift);
    BigInt quot, rem;
    mpz_tdiv_qr(quot.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    BigInt twice = rem * 2;
    int c = cmp(twice, den);
    if (c > 0 || (c == 0 && mpz_odd_p(quot.get_mpz_t()))) quot += 1;

    double mant = quot.get_d();  // at most 54 bits, exact
    double out = std::ldexp(mant, static_cast<int>(-shift));
    return sign() > 0 ? out : -out;
}

std::string Rational::to_string() const {
    if (q_.get_den() == 1) return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

ExactProb::ExactProb(Rational v) : v_(std::move(v)) {
    if (v_.sign() < 0 || v_ > Rational(1))
        throw std::domain_error("probability outside [0,1]: " + v_.to_string());
}

std::ostream& operator<<(std::ostream& os, const ExactProb& p) { return os << p.value(); }

BigInt factorial(unsigned n) {
    BigInt f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return f;
}

}  // namespace pilegame
