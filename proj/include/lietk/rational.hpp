#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace lietk {

/// Exact rational number in lowest terms with a positive denominator.
///
/// Values whose numerator and denominator fit in a signed 64-bit word are
/// stored inline; anything larger spills to a shared, immutable GMP rational.
/// The representation is an implementation detail: two equal values always
/// compare equal and print identically regardless of which form they use.
class Rational {
  public:
    Rational() = default;
    Rational(int v) : num_(v) {}
    Rational(long v);
    Rational(long long v) : Rational(static_cast<long>(v)) {}
    Rational(unsigned long v);
    Rational(long num, long den);
    explicit Rational(const mpq_class &q);
    explicit Rational(const mpz_class &z);

    /// Parses "p" or "p/q" (optional leading '-'); the result is normalised.
    static Rational parse(std::string_view text);

    std::string str() const;

    bool is_zero() const { return !big_ && num_ == 0; }
    bool is_one() const { return !big_ && num_ == 1 && den_ == 1; }
    bool is_integer() const;
    int sign() const;

    mpz_class numerator() const;
    mpz_class denominator() const;
    mpq_class to_mpq() const;

    Rational operator-() const;
    Rational inverse() const;

    Rational &operator+=(const Rational &o) { return *this = *this + o; }
    Rational &operator-=(const Rational &o) { return *this = *this - o; }
    Rational &operator*=(const Rational &o) { return *this = *this * o; }
    Rational &operator/=(const Rational &o) { return *this = *this / o; }

    friend Rational operator+(const Rational &a, const Rational &b);
    friend Rational operator-(const Rational &a, const Rational &b);
    friend Rational operator*(const Rational &a, const Rational &b);
    friend Rational operator/(const Rational &a, const Rational &b);

    friend bool operator==(const Rational &a, const Rational &b);
    friend std::strong_ordering operator<=>(const Rational &a, const Rational &b);

    friend std::ostream &operator<<(std::ostream &os, const Rational &r);

  private:
    static Rational from_wide(__int128 num, __int128 den);
    static Rational from_big(mpq_class q);

    // Inline form when big_ is null: num_/den_, den_ > 0, gcd 1,
    // and num_ != INT64_MIN so negation never overflows.
    long num_ = 0;
    long den_ = 1;
    std::shared_ptr<const mpq_class> big_;
};

} // namespace lietk
