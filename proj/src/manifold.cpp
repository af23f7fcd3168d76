#include "gsig/manifold.hpp"

#include <stdexcept>

namespace gsig {

std::vector<std::string> star_flag_names(const StarEvidence& e) {
    std::vector<std::string> names;
    if (e.b2plus_zero) names.emplace_back("b2plus_zero");
    if (e.sw_nonvanishing) names.emplace_back("sw_nonvanishing");
    if (e.symplectic) names.emplace_back("symplectic");
    if (e.rational_surface) names.emplace_back("rational_surface");
    if (e.b1_zero) names.emplace_back("b1_zero");
    return names;
}

StarEvidence star_evidence_from_names(const std::vector<std::string>& names) {
    StarEvidence e;
    for (const auto& n : names) {
        if (n == "b2plus_zero") e.b2plus_zero = true;
        else if (n == "sw_nonvanishing") e.sw_nonvanishing = true;
        else if (n == "symplectic") e.symplectic = true;
        else if (n == "rational_surface") e.rational_surface = true;
        else if (n == "b1_zero") e.b1_zero = true;
        else throw std::domain_error("unknown star-evidence flag '" + n + "'");
    }
    return e;
}

void ManifoldInvariants::validate() const {
    if (chi < 3)
        throw std::domain_error("manifold '" + name + "': chi = " +
                                std::to_string(chi) +
                                " violates chi >= 3 (b2 >= 1)");
    if (sigma > b2() || sigma < -b2())
        throw std::domain_error("manifold '" + name + "': |sigma| = " +
                                std::to_string(sigma > 0 ? sigma : -sigma) +
                                " exceeds b2 = " + std::to_string(b2()));
    if ((chi + sigma) % 2 != 0)
        throw std::domain_error("manifold '" + name +
                                "': chi + sigma must be even");
}

std::int64_t c1_squared(const ManifoldInvariants& m) {
    return 2 * m.chi + 3 * m.sigma;
}

std::int64_t l_invariant(const ManifoldInvariants& m) {
    return m.chi - 3 * m.sigma;
}

StarDerivation derive_star(const StarEvidence& e, const ManifoldInvariants& m) {
    m.validate();
    const std::int64_t bp = m.b2_plus();
    if (e.b2plus_zero && bp != 0)
        throw std::domain_error("manifold '" + m.name +
                                "': flag b2plus_zero contradicts derived b2+ = " +
                                std::to_string(bp));
    if (bp == 0)
        return {true, "b2plus-zero"};
    if (bp > 1 && e.sw_nonvanishing)
        return {true, "sw-adjunction"};
    if (bp == 1 && m.b2_minus() <= 9 && (m.h1_zero || e.b1_zero) &&
        e.symplectic && !e.rational_surface)
        return {true, "symplectic-small-bminus"};
    return {false, "no-evidence"};
}

}  // namespace gsig
