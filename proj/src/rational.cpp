#include "lietk/rational.hpp"

#include "lietk/error.hpp"

#include <climits>
#include <numeric>
#include <ostream>

namespace lietk {

const char *to_string(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::InvalidArgument: return "invalid argument";
    case ErrorKind::DimensionMismatch: return "dimension mismatch";
    case ErrorKind::DivisionByZero: return "division by zero";
    case ErrorKind::NotIdeal: return "not an ideal";
    case ErrorKind::NotClosed: return "not closed";
    case ErrorKind::NotFiniteType: return "not finite type";
    case ErrorKind::NotNilpotent: return "not nilpotent";
    case ErrorKind::NonSplit: return "non-split";
    case ErrorKind::NotSemisimple: return "not semisimple";
    case ErrorKind::Parse: return "parse error";
    case ErrorKind::InternalDefect: return "internal defect";
    }
    return "unknown";
}

namespace {

using i128 = __int128;
using u128 = unsigned __int128;

constexpr long kMax = LONG_MAX;

bool fits(i128 v) { return v >= -static_cast<i128>(kMax) && v <= kMax; }

u128 uabs(i128 v) { return v < 0 ? static_cast<u128>(-v) : static_cast<u128>(v); }

u128 gcd128(u128 a, u128 b) {
    if (a <= ULONG_MAX && b <= ULONG_MAX)
        return std::gcd(static_cast<unsigned long>(a), static_cast<unsigned long>(b));
    while (b != 0) {
        u128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

mpz_class to_mpz(i128 v) {
    bool neg = v < 0;
    u128 u = uabs(v);
    mpz_class hi(static_cast<unsigned long>(u >> 64));
    mpz_class lo(static_cast<unsigned long>(u));
    mpz_class z = (hi << 64) + lo;
    return neg ? mpz_class(-z) : z;
}

bool mpz_small(const mpz_class &z) {
    return mpz_fits_slong_p(z.get_mpz_t()) && z != LONG_MIN;
}

} // namespace

Rational::Rational(long v) {
    if (v == LONG_MIN)
        *this = from_big(mpq_class(mpz_class(v)));
    else
        num_ = v;
}

Rational::Rational(unsigned long v) {
    if (v > static_cast<unsigned long>(kMax))
        *this = from_big(mpq_class(mpz_class(v)));
    else
        num_ = static_cast<long>(v);
}

Rational::Rational(long num, long den) {
    if (den == 0)
        fail(ErrorKind::DivisionByZero, "rational with zero denominator");
    *this = from_wide(num, den);
}

Rational::Rational(const mpq_class &q) { *this = from_big(q); }

Rational::Rational(const mpz_class &z) { *this = from_big(mpq_class(z)); }

Rational Rational::from_wide(i128 num, i128 den) {
    if (den < 0) {
        num = -num;
        den = -den;
    }
    if (num == 0)
        return Rational();
    u128 g = gcd128(uabs(num), static_cast<u128>(den));
    if (g > 1) {
        num /= static_cast<i128>(g);
        den /= static_cast<i128>(g);
    }
    Rational r;
    if (fits(num) && fits(den)) {
        r.num_ = static_cast<long>(num);
        r.den_ = static_cast<long>(den);
        return r;
    }
    mpq_class q(to_mpz(num), to_mpz(den));
    r.big_ = std::make_shared<const mpq_class>(std::move(q));
    return r;
}

Rational Rational::from_big(mpq_class q) {
    q.canonicalize();
    Rational r;
    if (mpz_small(q.get_num()) && mpz_small(q.get_den())) {
        r.num_ = q.get_num().get_si();
        r.den_ = q.get_den().get_si();
        return r;
    }
    r.big_ = std::make_shared<const mpq_class>(std::move(q));
    return r;
}

Rational Rational::parse(std::string_view text) {
    auto bad = [&]() -> Rational {
        fail(ErrorKind::Parse, "malformed rational \"" + std::string(text) + "\"");
    };
    if (text.empty())
        return bad();
    auto slash = text.find('/');
    std::string_view num_part = text.substr(0, slash);
    std::string_view den_part =
        slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
    auto digits_ok = [](std::string_view s, bool allow_sign) {
        if (allow_sign && !s.empty() && s.front() == '-')
            s.remove_prefix(1);
        if (s.empty())
            return false;
        for (char c : s)
            if (c < '0' || c > '9')
                return false;
        return true;
    };
    if (!digits_ok(num_part, true) || !digits_ok(den_part, false))
        return bad();
    mpz_class n{std::string(num_part)};
    mpz_class d{std::string(den_part)};
    if (d == 0)
        fail(ErrorKind::DivisionByZero, "rational \"" + std::string(text) + "\" has zero denominator");
    return from_big(mpq_class(n, d));
}

std::string Rational::str() const {
    if (big_) {
        if (big_->get_den() == 1)
            return big_->get_num().get_str();
        return big_->get_num().get_str() + "/" + big_->get_den().get_str();
    }
    if (den_ == 1)
        return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

bool Rational::is_integer() const { return big_ ? big_->get_den() == 1 : den_ == 1; }

int Rational::sign() const {
    if (big_)
        return sgn(*big_);
    return (num_ > 0) - (num_ < 0);
}

mpz_class Rational::numerator() const { return big_ ? big_->get_num() : mpz_class(num_); }

mpz_class Rational::denominator() const { return big_ ? big_->get_den() : mpz_class(den_); }

mpq_class Rational::to_mpq() const {
    if (big_)
        return *big_;
    return mpq_class(mpz_class(num_), mpz_class(den_));
}

Rational Rational::operator-() const {
    if (big_)
        return from_big(-*big_);
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

Rational Rational::inverse() const {
    if (is_zero())
        fail(ErrorKind::DivisionByZero, "inverse of zero");
    if (big_)
        return from_big(1 / *big_);
    Rational r;
    r.num_ = num_ < 0 ? -den_ : den_;
    r.den_ = num_ < 0 ? -num_ : num_;
    return r;
}

Rational operator+(const Rational &a, const Rational &b) {
    if (!a.big_ && !b.big_) {
        if (a.num_ == 0)
            return b;
        if (b.num_ == 0)
            return a;
        if (a.den_ == 1 && b.den_ == 1) {
            long s;
            if (!__builtin_add_overflow(a.num_, b.num_, &s) && s != LONG_MIN) {
                Rational r;
                r.num_ = s;
                return r;
            }
        }
        i128 n = static_cast<i128>(a.num_) * b.den_ + static_cast<i128>(b.num_) * a.den_;
        i128 d = static_cast<i128>(a.den_) * b.den_;
        return Rational::from_wide(n, d);
    }
    return Rational::from_big(a.to_mpq() + b.to_mpq());
}

Rational operator-(const Rational &a, const Rational &b) { return a + (-b); }

Rational operator*(const Rational &a, const Rational &b) {
    if (!a.big_ && !b.big_) {
        if (a.num_ == 0 || b.num_ == 0)
            return Rational();
        if (a.den_ == 1 && b.den_ == 1) {
            long p;
            if (!__builtin_mul_overflow(a.num_, b.num_, &p) && p != LONG_MIN) {
                Rational r;
                r.num_ = p;
                return r;
            }
        }
        i128 n = static_cast<i128>(a.num_) * b.num_;
        i128 d = static_cast<i128>(a.den_) * b.den_;
        return Rational::from_wide(n, d);
    }
    return Rational::from_big(a.to_mpq() * b.to_mpq());
}

Rational operator/(const Rational &a, const Rational &b) {
    if (b.is_zero())
        fail(ErrorKind::DivisionByZero, "division by zero");
    return a * b.inverse();
}

bool operator==(const Rational &a, const Rational &b) {
    if (!a.big_ && !b.big_)
        return a.num_ == b.num_ && a.den_ == b.den_;
    if (static_cast<bool>(a.big_) != static_cast<bool>(b.big_))
        return false; // canonical storage: a value has exactly one form
    return *a.big_ == *b.big_;
}

std::strong_ordering operator<=>(const Rational &a, const Rational &b) {
    if (!a.big_ && !b.big_) {
        i128 l = static_cast<i128>(a.num_) * b.den_;
        i128 r = static_cast<i128>(b.num_) * a.den_;
        return l <=> r;
    }
    int c = cmp(a.to_mpq(), b.to_mpq());
    return c <=> 0;
}

std::ostream &operator<<(std::ostream &os, const Rational &r) { return os << r.str(); }

} // namespace lietk
