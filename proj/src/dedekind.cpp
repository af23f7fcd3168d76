#include "gsig/dedekind.hpp"

#include <stdexcept>
#include <string>

namespace gsig {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(
        static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    std::uint64_t r = 1;
    base %= m;
    while (exp) {
        if (exp & 1)
            r = mulmod(r, base, m);
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    return r;
}

}  // namespace

// Deterministic Miller-Rabin for 64-bit inputs.
bool is_prime(std::int64_t n) {
    if (n < 2)
        return false;
    for (std::int64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n == p)
            return true;
        if (n % p == 0)
            return false;
    }
    std::uint64_t u = static_cast<std::uint64_t>(n);
    std::uint64_t d = u - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL,
                            19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        std::uint64_t x = powmod(a, d, u);
        if (x == 1 || x == u - 1)
            continue;
        bool composite = true;
        for (int i = 0; i < s - 1; ++i) {
            x = mulmod(x, x, u);
            if (x == u - 1) {
                composite = false;
                break;
            }
        }
        if (composite)
            return false;
    }
    return true;
}

std::vector<std::int64_t> primes_up_to(std::int64_t n) {
    std::vector<std::int64_t> out;
    if (n < 2)
        return out;
    std::vector<bool> composite(static_cast<std::size_t>(n) + 1, false);
    for (std::int64_t i = 2; i <= n; ++i) {
        if (composite[static_cast<std::size_t>(i)])
            continue;
        out.push_back(i);
        for (std::int64_t j = i * i; j <= n; j += i)
            composite[static_cast<std::size_t>(j)] = true;
    }
    return out;
}

PrimeOrder::PrimeOrder(std::int64_t p) : p_(p) {
    if (!is_prime(p))
        throw std::domain_error("PrimeOrder: " + std::to_string(p) +
                                " is not a prime >= 2");
}

RotationNumber::RotationNumber(std::int64_t q, const PrimeOrder& p)
    : q_(q), p_(p.value()) {
    if (q < 1 || q > p_ - 1)
        throw std::domain_error("RotationNumber: q = " + std::to_string(q) +
                                " outside 1.." + std::to_string(p_ - 1));
}

namespace {

void check_pair(const RotationNumber& q, const PrimeOrder& p) {
    if (q.order() != p.value())
        throw std::invalid_argument(
            "rotation number was built for p = " + std::to_string(q.order()) +
            ", not p = " + std::to_string(p.value()));
}

}  // namespace

Rational sawtooth(const Rational& z) {
    if (z.is_integer())
        return Rational(0);
    return z - Rational(z.floor()) - Rational(1, 2);
}

Rational dedekind_sum_direct(const RotationNumber& q, const PrimeOrder& p) {
    check_pair(q, p);
    const std::int64_t P = p.value();
    const BigInt Q = q.value();
    Rational sum;
    for (std::int64_t k = 1; k < P; ++k)
        sum += sawtooth(Rational(BigInt(k), BigInt(P))) *
               sawtooth(Rational(Q * k, BigInt(P)));
    return sum;
}

Rational dedekind_sum_fast(const RotationNumber& q, const PrimeOrder& p) {
    check_pair(q, p);
    BigInt h = q.value();
    BigInt k = p.value();
    Rational sum;
    int sign = 1;
    while (h > 0) {
        // s(h,k) = (h^2 + k^2 + 1 - 3hk) / (12hk) - s(k mod h, h)
        Rational term(h * h + k * k + 1 - 3 * h * k, 12 * h * k);
        sum += sign > 0 ? term : -term;
        sign = -sign;
        BigInt next = k % h;
        k = h;
        h = next;
    }
    return sum;
}

Rational dedekind_symbol(const RotationNumber& q, const PrimeOrder& p) {
    return Rational(6 * BigInt(p.value())) * dedekind_sum_fast(q, p);
}

Rational defect(const PrimeOrder& p, const RotationNumber& q) {
    return Rational(-4 * BigInt(p.value())) * dedekind_sum_fast(q, p);
}

Rational defect_extremal(const PrimeOrder& p) {
    BigInt P = p.value();
    return Rational((P - 1) * (P - 2), 3);
}

}  // namespace gsig
