#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace gsig {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational number in canonical form: denominator > 0 and
/// gcd(|numerator|, denominator) = 1, enforced on construction so that
/// equality is structural. Values are immutable once built and safe to
/// share between threads.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(int n) : num_(n), den_(1) {}
    Rational(std::int64_t n) : num_(n), den_(1) {}
    Rational(BigInt n) : num_(std::move(n)), den_(1) {}

    // Throws std::domain_error when d == 0. Sign is carried by the numerator.
    Rational(BigInt n, BigInt d);
    Rational(std::int64_t n, std::int64_t d) : Rational(BigInt(n), BigInt(d)) {}

    const BigInt& numerator() const { return num_; }
    const BigInt& denominator() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }
    bool is_negative() const { return num_ < 0; }
    int sign() const { return num_ < 0 ? -1 : num_ > 0 ? 1 : 0; }

    // Greatest integer <= value; exact for negative values.
    BigInt floor() const;
    // Least integer >= value.
    BigInt ceil() const;

    Rational operator-() const;
    Rational operator+(const Rational& o) const;
    Rational operator-(const Rational& o) const;
    Rational operator*(const Rational& o) const;
    Rational operator/(const Rational& o) const;  // throws on division by zero

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    bool operator==(const Rational& o) const {
        return num_ == o.num_ && den_ == o.den_;
    }
    std::strong_ordering operator<=>(const Rational& o) const;

    // "n/d", the "/d" part omitted when the denominator is 1.
    std::string str() const;

    // Rounded decimal rendering with the given number of fractional digits.
    // Display only; never feeds back into arithmetic.
    std::string decimal(unsigned digits) const;

    // Parses "n" or "n/d" with optional sign; throws std::invalid_argument
    // on malformed input and std::domain_error on a zero denominator.
    static Rational parse(std::string_view text);

private:
    void normalize();

    BigInt num_;
    BigInt den_;
};

inline Rational abs(const Rational& x) { return x.is_negative() ? -x : x; }

// Free-function spellings of construction and floor.
inline Rational rat(BigInt n, BigInt d) { return Rational(std::move(n), std::move(d)); }
inline BigInt floor_of(const Rational& x) { return x.floor(); }

std::ostream& operator<<(std::ostream& os, const Rational& x);

}  // namespace gsig
