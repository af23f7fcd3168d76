#pragma once

#include "gsig/dedekind.hpp"

#include <cstdint>
#include <vector>

namespace gsig {

/// Multiplicities of the trivial (rank 1), cyclotomic (rank p-1) and
/// regular (rank p) integral summands in the induced action on second
/// cohomology: b2 = t + c(p-1) + r*p.
struct HomologyDecomposition {
    std::int64_t t = 0;
    std::int64_t c = 0;
    std::int64_t r = 0;

    bool operator==(const HomologyDecomposition&) const = default;
};

// All decompositions of b2, ordered lexicographically by (r, c).
// Requires b2 >= 1.
std::vector<HomologyDecomposition> decompositions(const PrimeOrder& p,
                                                  std::int64_t b2);

// True when the action on homology is forced trivial: either (b2, 0, 0)
// is the only decomposition (in particular whenever p > b2 + 1), or
// b2 = 2 with p >= 3, where triviality holds for the rank-2 intersection
// forms even though a nontrivial decomposition exists numerically.
bool forces_trivial(const PrimeOrder& p, std::int64_t b2);

/// Shape of the fixed set of a homologically trivial action: m isolated
/// points and n spheres with m + 2n = chi.
struct FixedSetShape {
    std::int64_t points = 0;   // m
    std::int64_t spheres = 0;  // n

    bool operator==(const FixedSetShape&) const = default;
};

// All (m, n) with m + 2n = chi, ordered by n ascending. Requires chi >= 3.
std::vector<FixedSetShape> fixed_set_shapes(std::int64_t chi);

/// Z_p-Betti constraints on the fixed set of a non-free action:
/// b1(F) = c and b0(F) + b2(F) = t + 2.
struct BettiConstraints {
    std::int64_t b1_fixed = 0;
    std::int64_t b0_plus_b2_fixed = 0;

    bool operator==(const BettiConstraints&) const = default;
};

BettiConstraints betti_constraints(std::int64_t t, std::int64_t c);

}  // namespace gsig
