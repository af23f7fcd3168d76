#include "gsig/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>
#include <utility>

namespace gsig {

using boost::multiprecision::gcd;

Rational::Rational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) {
    if (den_ == 0)
        throw std::domain_error("Rational: zero denominator");
    normalize();
}

void Rational::normalize() {
    if (num_ == 0) {
        den_ = 1;
        return;
    }
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    BigInt g = gcd(BigInt(boost::multiprecision::abs(num_)), den_);
    if (g != 1) {
        num_ /= g;
        den_ /= g;
    }
}

BigInt Rational::floor() const {
    BigInt q, r;
    divide_qr(num_, den_, q, r);
    if (r < 0)  // divide_qr truncates toward zero; den_ > 0
        --q;
    return q;
}

BigInt Rational::ceil() const {
    BigInt q, r;
    divide_qr(num_, den_, q, r);
    if (r > 0)
        ++q;
    return q;
}

Rational Rational::operator-() const {
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

Rational Rational::operator+(const Rational& o) const {
    return Rational(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

Rational Rational::operator-(const Rational& o) const {
    return Rational(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

Rational Rational::operator*(const Rational& o) const {
    return Rational(num_ * o.num_, den_ * o.den_);
}

Rational Rational::operator/(const Rational& o) const {
    if (o.num_ == 0)
        throw std::domain_error("Rational: division by zero");
    return Rational(num_ * o.den_, den_ * o.num_);
}

std::strong_ordering Rational::operator<=>(const Rational& o) const {
    BigInt lhs = num_ * o.den_;
    BigInt rhs = o.num_ * den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::string Rational::str() const {
    std::string s = num_.str();
    if (den_ != 1) {
        s += '/';
        s += den_.str();
    }
    return s;
}

std::string Rational::decimal(unsigned digits) const {
    BigInt scale = 1;
    for (unsigned i = 0; i < digits; ++i)
        scale *= 10;
    BigInt t = boost::multiprecision::abs(num_) * scale;
    BigInt q, r;
    divide_qr(t, den_, q, r);
    if (2 * r >= den_)  // round half away from zero
        ++q;
    std::string body = q.str();
    if (digits > 0) {
        if (body.size() <= digits)
            body.insert(0, digits + 1 - body.size(), '0');
        body.insert(body.size() - digits, 1, '.');
    }
    if (num_ < 0 && q != 0)
        body.insert(0, 1, '-');
    return body;
}

Rational Rational::parse(std::string_view text) {
    auto parse_int = [](std::string_view s) -> BigInt {
        if (s.empty())
            throw std::invalid_argument("Rational: empty integer in input");
        std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
        if (i == s.size())
            throw std::invalid_argument("Rational: sign without digits");
        for (std::size_t j = i; j < s.size(); ++j)
            if (!std::isdigit(static_cast<unsigned char>(s[j])))
                throw std::invalid_argument("Rational: invalid character in '" +
                                            std::string(s) + "'");
        // cpp_int does not accept a leading '+'
        BigInt value(std::string(s.substr(i)));
        return s[0] == '-' ? -value : value;
    };
    auto slash = text.find('/');
    if (slash == std::string_view::npos)
        return Rational(parse_int(text));
    return Rational(parse_int(text.substr(0, slash)),
                    parse_int(text.substr(slash + 1)));
}

std::ostream& operator<<(std::ostream& os, const Rational& x) {
    return os << x.str();
}

}  // namespace gsig
