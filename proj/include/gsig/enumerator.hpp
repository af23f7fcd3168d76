#pragma once

#include "gsig/dedekind.hpp"
#include "gsig/rational.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace gsig {

/// One exact solution of the signature equation
///   (p-1)*sigma = sum_x def(p;q_x,1) + ((p^2-1)/3) * sum_i [S_i]^2
/// with m + 2n = chi. Point and sphere lists are kept sorted ascending;
/// solutions are multisets, so order carries no meaning.
struct FixedPointData {
    std::vector<std::int64_t> points;   // rotation numbers q, 1..p-1
    std::vector<std::int64_t> spheres;  // self-intersections [S_i]^2

    std::int64_t isolated_count() const {
        return static_cast<std::int64_t>(points.size());
    }
    std::int64_t sphere_count() const {
        return static_cast<std::int64_t>(spheres.size());
    }

    bool operator==(const FixedPointData&) const = default;
};

/// Inclusive range of allowed sphere self-intersections, with optional caps:
/// require_star clamps the top to -1, require_minimal to -2, and zero squares
/// are excluded unless allow_zero_square is set.
struct SearchWindow {
    std::int64_t s_min = 0;
    std::int64_t s_max = 0;
    bool require_star = false;
    bool require_minimal = false;
    bool allow_zero_square = false;
};

struct EmptyWindow : std::domain_error {
    using std::domain_error::domain_error;
};

// The sphere squares the window admits after applying its caps, ascending.
// Throws EmptyWindow when nothing remains.
std::vector<std::int64_t> admissible_squares(const SearchWindow& w);

// Complete, duplicate-free list of solutions, in canonical order: ascending
// sphere count, then lexicographic on the sorted sphere list, then on the
// sorted point list. Requires chi >= 3, |sigma| <= chi - 2, chi + sigma even.
std::vector<FixedPointData> enumerate_fixed_points(const PrimeOrder& p,
                                                   std::int64_t chi,
                                                   std::int64_t sigma,
                                                   const SearchWindow& w);

// Maximum sphere count over all solutions; nullopt when none exist.
std::optional<std::int64_t> max_spheres(const PrimeOrder& p, std::int64_t chi,
                                        std::int64_t sigma,
                                        const SearchWindow& w);

// Independent soundness check: re-derives both defining identities with
// exact rationals, using the direct-summation Dedekind oracle rather than
// anything the search itself relies on.
bool verify_solution(const PrimeOrder& p, std::int64_t chi, std::int64_t sigma,
                     const FixedPointData& data);

}  // namespace gsig
