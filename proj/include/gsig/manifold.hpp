#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace gsig {

/// Evidence flags from which the negative-self-intersection property of
/// embedded spheres ("property star") may be derived. Stored facts, never
/// computed from first principles.
struct StarEvidence {
    bool b2plus_zero = false;
    bool sw_nonvanishing = false;
    bool symplectic = false;
    bool rational_surface = false;
    bool b1_zero = false;

    bool operator==(const StarEvidence&) const = default;
};

// Canonical flag-name order used by the catalog schema and reports.
std::vector<std::string> star_flag_names(const StarEvidence& e);
StarEvidence star_evidence_from_names(const std::vector<std::string>& names);

/// Topological invariants of a closed simply-connected (or H1 = 0)
/// 4-manifold, plus the smooth-structure facts the bounds need.
struct ManifoldInvariants {
    std::string name;
    std::int64_t chi = 0;    // Euler characteristic
    std::int64_t sigma = 0;  // signature
    bool spin = false;
    bool minimal = false;    // no smoothly embedded (-1)-spheres
    bool h1_zero = true;     // simply-connected or integral H1 = 0
    StarEvidence star;

    std::int64_t b2() const { return chi - 2; }
    std::int64_t b2_plus() const { return (b2() + sigma) / 2; }
    std::int64_t b2_minus() const { return (b2() - sigma) / 2; }

    // Throws std::domain_error naming the violated invariant:
    // chi >= 3, |sigma| <= b2, chi + sigma even.
    void validate() const;
};

// c1^2 = 2*chi + 3*sigma.
std::int64_t c1_squared(const ManifoldInvariants& m);

// l = 3*chi - c1^2 = chi - 3*sigma; always even under the parity invariant.
std::int64_t l_invariant(const ManifoldInvariants& m);

/// Result of the star-evidence rules.
struct StarDerivation {
    bool satisfied = false;
    std::string rule;  // "b2plus-zero", "sw-adjunction",
                       // "symplectic-small-bminus" or "no-evidence"
};

// First matching rule wins:
//   E1: b2+ = 0
//   E2: b2+ > 1 and nonvanishing Seiberg-Witten invariants
//   E3: b2+ = 1, b2- <= 9, b1 = 0, symplectic, not a rational surface
// Throws std::domain_error when a stored flag contradicts the derived
// numbers (e.g. b2plus_zero claimed while (chi, sigma) give b2+ != 0).
StarDerivation derive_star(const StarEvidence& e, const ManifoldInvariants& m);

}  // namespace gsig
