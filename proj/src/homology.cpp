#include "gsig/homology.hpp"

#include <stdexcept>
#include <string>

namespace gsig {

std::vector<HomologyDecomposition> decompositions(const PrimeOrder& p,
                                                  std::int64_t b2) {
    if (b2 < 1)
        throw std::domain_error("decompositions: b2 must be >= 1");
    const std::int64_t P = p.value();
    std::vector<HomologyDecomposition> out;
    for (std::int64_t r = 0; r * P <= b2; ++r)
        for (std::int64_t c = 0; c * (P - 1) + r * P <= b2; ++c)
            out.push_back({b2 - c * (P - 1) - r * P, c, r});
    return out;
}

bool forces_trivial(const PrimeOrder& p, std::int64_t b2) {
    if (decompositions(p, b2).size() == 1)
        return true;
    return b2 == 2 && p.value() >= 3;
}

std::vector<FixedSetShape> fixed_set_shapes(std::int64_t chi) {
    if (chi < 3)
        throw std::domain_error("fixed_set_shapes: chi = " +
                                std::to_string(chi) + " below 3");
    std::vector<FixedSetShape> out;
    for (std::int64_t n = 0; 2 * n <= chi; ++n)
        out.push_back({chi - 2 * n, n});
    return out;
}

BettiConstraints betti_constraints(std::int64_t t, std::int64_t c) {
    if (t < 0 || c < 0)
        throw std::domain_error("betti_constraints: t and c must be >= 0");
    return {c, t + 2};
}

}  // namespace gsig
