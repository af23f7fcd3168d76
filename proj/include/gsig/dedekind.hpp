#pragma once

#include "gsig/rational.hpp"

#include <cstdint>
#include <vector>

namespace gsig {

bool is_prime(std::int64_t n);

// All primes <= n, ascending.
std::vector<std::int64_t> primes_up_to(std::int64_t n);

/// Order of the acting cyclic group; validated prime >= 2.
class PrimeOrder {
public:
    explicit PrimeOrder(std::int64_t p);
    std::int64_t value() const { return p_; }

    bool operator==(const PrimeOrder&) const = default;

private:
    std::int64_t p_;
};

/// Local rotation parameter at an isolated fixed point, reduced to
/// 1 <= q <= p-1 (hence coprime to p). Values outside that range are
/// rejected rather than silently reduced.
class RotationNumber {
public:
    RotationNumber(std::int64_t q, const PrimeOrder& p);
    std::int64_t value() const { return q_; }
    std::int64_t order() const { return p_; }

private:
    std::int64_t q_;
    std::int64_t p_;
};

// Rademacher sawtooth ((z)): z - floor(z) - 1/2 off the integers, 0 on them.
Rational sawtooth(const Rational& z);

// Dedekind sum s(q,p) = sum_{k=0}^{p-1} ((k/p))((qk/p)) by direct summation.
// O(p) terms; this is the reference oracle for the fast path.
Rational dedekind_sum_direct(const RotationNumber& q, const PrimeOrder& p);

// Same value as dedekind_sum_direct, computed in O(log p) steps via the
// reciprocity law s(h,k) + s(k,h) = -1/4 + (h^2 + k^2 + 1)/(12hk).
Rational dedekind_sum_fast(const RotationNumber& q, const PrimeOrder& p);

// Dedekind symbol (q,p) = 6p * s(q,p); always an integer value.
Rational dedekind_symbol(const RotationNumber& q, const PrimeOrder& p);

// Signature defect of an isolated fixed point with local rotation type
// (1, q): def(p;q,1) = -4p * s(q,p) = -(2/3)(q,p).
Rational defect(const PrimeOrder& p, const RotationNumber& q);

// (p-1)(p-2)/3, the maximum of |def(p;q,1)| over all q; attained at q = 1.
Rational defect_extremal(const PrimeOrder& p);

}  // namespace gsig
