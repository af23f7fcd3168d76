#pragma once

#include "gsig/dedekind.hpp"
#include "gsig/manifold.hpp"
#include "gsig/rational.hpp"

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>

namespace gsig {

/// Thrown when a classification is requested without enough evidence for
/// its hypotheses; never degraded to a silent default.
struct HypothesesNotMet : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Exact value of (p*chi - c1^2) / (p(2-s) - (4+s)), an upper bound on the
// number of fixed spheres when every fixed sphere S satisfies [S]^2 <= s.
// Requires s <= -1 (the denominator is then provably positive); throws
// std::domain_error for s >= 0.
Rational sphere_bound(const PrimeOrder& p, const ManifoldInvariants& m,
                      std::int64_t s);

// Exact value of (chi/(2-s)) * (1 + 6/(p(2-s) - (4+s))), a strict upper
// bound on n valid for every possible c1^2 (uses sigma > -chi).
Rational universal_bound(const PrimeOrder& p, const ManifoldInvariants& m,
                         std::int64_t s);

// Sum of sphere self-intersections. For involutions every admissible
// fixed-point dataset satisfies sum = sigma, since point defects vanish.
std::int64_t involution_signature_identity(std::span<const std::int64_t> spheres);

enum class Verdict {
    NoAction,     // no homologically trivial smooth action exists
    Pseudofree,   // any such action has isolated fixed points only
    SphereBound,  // any such action has at most n_max fixed spheres
};

std::string_view to_string(Verdict v);

struct Classification {
    Verdict verdict = Verdict::SphereBound;
    std::int64_t n_max = 0;  // meaningful iff verdict == SphereBound
    std::string basis;       // tag of the rule or bound that decided
    std::int64_t s_used = -1;
    Rational bound;      // sphere_bound at s_used
    Rational universal;  // universal_bound at s_used
};

// Classifies the possible homologically trivial smooth Z_p-actions on m.
// Requires star evidence (throws HypothesesNotMet otherwise); uses
// s = -2 when m is minimal, s = -1 otherwise. Knowledge rules checked
// before the generic bound, first match reported in `basis`:
//   involution-positive-signature        p = 2, sigma > 0        -> NoAction
//   involution-minimal-sigma-minus-one   p = 2, minimal, sigma=-1 -> NoAction
//   ruberman-spin-involution             p = 2, spin, sigma != 0 -> NoAction
//   involution-sigma-zero-pseudofree     p = 2, sigma = 0        -> Pseudofree
//   z3-near-bmy-pseudofree               p = 3, 0 <= l <= 4
//                                        (<= 8 when minimal)     -> Pseudofree
// Otherwise the sharper of floor(sphere_bound) and ceil(universal)-1
// decides: negative-sphere-bound / sphere-bound-below-one / sphere-bound.
Classification classify(const PrimeOrder& p, const ManifoldInvariants& m);

}  // namespace gsig
