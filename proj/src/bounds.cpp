#include "gsig/bounds.hpp"

#include <algorithm>

namespace gsig {

namespace {

std::int64_t bound_denominator(std::int64_t p, std::int64_t s) {
    return p * (2 - s) - (4 + s);
}

void check_cap(std::int64_t s) {
    if (s >= 0)
        throw std::domain_error("sphere-square cap s must be negative, got " +
                                std::to_string(s));
}

}  // namespace

Rational sphere_bound(const PrimeOrder& p, const ManifoldInvariants& m,
                      std::int64_t s) {
    check_cap(s);
    m.validate();
    const std::int64_t P = p.value();
    const std::int64_t den = bound_denominator(P, s);
    if (den <= 0)
        throw std::logic_error("sphere_bound: nonpositive denominator");
    return Rational(P * m.chi - c1_squared(m), den);
}

Rational universal_bound(const PrimeOrder& p, const ManifoldInvariants& m,
                         std::int64_t s) {
    check_cap(s);
    m.validate();
    const std::int64_t P = p.value();
    const std::int64_t den = bound_denominator(P, s);
    if (den <= 0)
        throw std::logic_error("universal_bound: nonpositive denominator");
    return Rational(m.chi, 2 - s) * (Rational(1) + Rational(6, den));
}

std::int64_t involution_signature_identity(
    std::span<const std::int64_t> spheres) {
    std::int64_t sum = 0;
    for (std::int64_t sq : spheres)
        sum += sq;
    return sum;
}

std::string_view to_string(Verdict v) {
    switch (v) {
        case Verdict::NoAction: return "NoAction";
        case Verdict::Pseudofree: return "Pseudofree";
        case Verdict::SphereBound: return "SphereBound";
    }
    return "?";
}

Classification classify(const PrimeOrder& p, const ManifoldInvariants& m) {
    m.validate();
    StarDerivation star = derive_star(m.star, m);
    if (!star.satisfied)
        throw HypothesesNotMet(
            "manifold '" + m.name +
            "': no evidence that embedded spheres have negative "
            "self-intersection; refusing to classify");

    const std::int64_t P = p.value();
    const std::int64_t s = m.minimal ? -2 : -1;

    Classification out;
    out.s_used = s;
    out.bound = sphere_bound(p, m, s);
    out.universal = universal_bound(p, m, s);

    if (P == 2 && m.sigma > 0) {
        out.verdict = Verdict::NoAction;
        out.basis = "involution-positive-signature";
        return out;
    }
    if (P == 2 && m.minimal && m.sigma == -1) {
        out.verdict = Verdict::NoAction;
        out.basis = "involution-minimal-sigma-minus-one";
        return out;
    }
    if (P == 2 && m.spin && m.sigma != 0) {
        out.verdict = Verdict::NoAction;
        out.basis = "ruberman-spin-involution";
        return out;
    }
    if (P == 2 && m.sigma == 0) {
        out.verdict = Verdict::Pseudofree;
        out.basis = "involution-sigma-zero-pseudofree";
        return out;
    }
    if (P == 3) {
        const std::int64_t l = l_invariant(m);
        if (l >= 0 && l <= (m.minimal ? 8 : 4)) {
            out.verdict = Verdict::Pseudofree;
            out.basis = "z3-near-bmy-pseudofree";
            return out;
        }
    }

    // n <= bound (non-strict) and n < universal (strict); take the sharper.
    BigInt cap = std::min(out.bound.floor(), out.universal.ceil() - 1);
    if (cap < 0) {
        out.verdict = Verdict::NoAction;
        out.basis = "negative-sphere-bound";
    } else if (cap == 0) {
        out.verdict = Verdict::Pseudofree;
        out.basis = "sphere-bound-below-one";
    } else {
        out.verdict = Verdict::SphereBound;
        out.n_max = cap.convert_to<std::int64_t>();
        out.basis = "sphere-bound";
    }
    return out;
}

}  // namespace gsig
