#include "gsig/enumerator.hpp"

#include <algorithm>
#include <string>

namespace gsig {

std::vector<std::int64_t> admissible_squares(const SearchWindow& w) {
    std::int64_t hi = w.s_max;
    if (w.require_star)
        hi = std::min<std::int64_t>(hi, -1);
    if (w.require_minimal)
        hi = std::min<std::int64_t>(hi, -2);
    std::vector<std::int64_t> vals;
    for (std::int64_t v = w.s_min; v <= hi; ++v)
        if (v != 0 || w.allow_zero_square)
            vals.push_back(v);
    if (vals.empty())
        throw EmptyWindow("search window [" + std::to_string(w.s_min) + ", " +
                          std::to_string(w.s_max) +
                          "] is empty after applying its caps");
    return vals;
}

namespace {

// chi + sigma parity is deliberately not enforced: odd combinations are not
// realized by manifolds but the search is still well-defined, and running it
// is the quickest way to see such data admits no solutions.
void check_preconditions(std::int64_t chi, std::int64_t sigma) {
    if (chi < 3)
        throw std::domain_error("enumerate: chi = " + std::to_string(chi) +
                                " below 3");
    const std::int64_t b2 = chi - 2;
    if (sigma > b2 || sigma < -b2)
        throw std::domain_error("enumerate: |sigma| exceeds b2 = " +
                                std::to_string(b2));
}

// The search works with triple the defect values so every quantity in the
// signature equation is an integer: 3*def(p;q,1) = -2*(q,p).
struct Search {
    std::int64_t prime = 0;
    std::vector<std::int64_t> defect3;  // defect3[q], q = 1..p-1
    std::vector<std::int64_t> suffix_min;
    std::vector<std::int64_t> suffix_max;
    std::vector<std::int64_t> squares;
    std::int64_t sphere_coeff = 0;  // p^2 - 1
    std::int64_t target_total = 0;  // 3*(p-1)*sigma

    std::vector<std::int64_t> point_buf;
    std::vector<std::int64_t> sphere_buf;
    std::vector<FixedPointData>* out = nullptr;

    void points(std::int64_t q_from, std::int64_t slots, std::int64_t target) {
        if (slots == 0) {
            if (target == 0)
                out->push_back({point_buf, sphere_buf});
            return;
        }
        if (q_from >= prime)
            return;
        if (target < slots * suffix_min[q_from] ||
            target > slots * suffix_max[q_from])
            return;
        for (std::int64_t q = q_from; q < prime; ++q) {
            point_buf.push_back(q);
            points(q, slots - 1, target - defect3[q]);
            point_buf.pop_back();
        }
    }

    void spheres(std::size_t idx_from, std::int64_t remaining,
                 std::int64_t partial, std::int64_t m) {
        if (remaining == 0) {
            points(1, m, target_total - sphere_coeff * partial);
            return;
        }
        for (std::size_t i = idx_from; i < squares.size(); ++i) {
            // Remaining squares are >= squares[i]; prune when even the
            // extreme sphere sums leave the point target unreachable.
            const std::int64_t lo = partial + remaining * squares[i];
            const std::int64_t hi = partial + remaining * squares.back();
            const std::int64_t t_hi = target_total - sphere_coeff * lo;
            const std::int64_t t_lo = target_total - sphere_coeff * hi;
            if (t_hi < m * suffix_min[1] || t_lo > m * suffix_max[1])
                continue;
            sphere_buf.push_back(squares[i]);
            spheres(i, remaining - 1, partial + squares[i], m);
            sphere_buf.pop_back();
        }
    }
};

}  // namespace

std::vector<FixedPointData> enumerate_fixed_points(const PrimeOrder& p,
                                                   std::int64_t chi,
                                                   std::int64_t sigma,
                                                   const SearchWindow& w) {
    check_preconditions(chi, sigma);
    Search search;
    search.squares = admissible_squares(w);

    const std::int64_t P = p.value();
    search.prime = P;
    search.defect3.assign(P, 0);
    search.suffix_min.assign(P, 0);
    search.suffix_max.assign(P, 0);
    for (std::int64_t q = 1; q < P; ++q) {
        Rational d3 = defect(p, RotationNumber(q, p)) * Rational(3);
        if (!d3.is_integer())
            throw std::logic_error("3*def(p;q,1) is not an integer");
        search.defect3[q] = d3.numerator().convert_to<std::int64_t>();
    }
    for (std::int64_t q = P - 1; q >= 1; --q) {
        bool last = q == P - 1;
        search.suffix_min[q] = last ? search.defect3[q]
                                    : std::min(search.defect3[q],
                                               search.suffix_min[q + 1]);
        search.suffix_max[q] = last ? search.defect3[q]
                                    : std::max(search.defect3[q],
                                               search.suffix_max[q + 1]);
    }

    search.sphere_coeff = P * P - 1;
    search.target_total = 3 * (P - 1) * sigma;

    std::vector<FixedPointData> out;
    search.out = &out;
    for (std::int64_t n = 0; 2 * n <= chi; ++n)
        search.spheres(0, n, 0, chi - 2 * n);
    return out;
}

std::optional<std::int64_t> max_spheres(const PrimeOrder& p, std::int64_t chi,
                                        std::int64_t sigma,
                                        const SearchWindow& w) {
    auto solutions = enumerate_fixed_points(p, chi, sigma, w);
    if (solutions.empty())
        return std::nullopt;
    // Canonical order is ascending in sphere count.
    return solutions.back().sphere_count();
}

bool verify_solution(const PrimeOrder& p, std::int64_t chi, std::int64_t sigma,
                     const FixedPointData& data) {
    const std::int64_t P = p.value();
    if (data.isolated_count() + 2 * data.sphere_count() != chi)
        return false;
    Rational rhs;
    for (std::int64_t q : data.points) {
        if (q < 1 || q > P - 1)
            return false;
        rhs += Rational(-4 * P) * dedekind_sum_direct(RotationNumber(q, p), p);
    }
    Rational sphere_sum;
    for (std::int64_t sq : data.spheres)
        sphere_sum += Rational(sq);
    rhs += Rational(P * P - 1, 3) * sphere_sum;
    return Rational((P - 1) * sigma) == rhs;
}

}  // namespace gsig
