#pragma once

#include "gsig/rational.hpp"

#include <string_view>
#include <vector>

namespace gsig {

/// Vector in a basis diagonalizing an intersection form of signature (1, k):
/// coordinate 0 is the timelike one. Forward means a0 > 0 by convention.
class LorentzVector {
public:
    explicit LorentzVector(std::vector<Rational> coords);

    std::size_t size() const { return coords_.size(); }
    const Rational& operator[](std::size_t i) const { return coords_[i]; }
    const std::vector<Rational>& coords() const { return coords_; }

    LorentzVector operator-() const;
    LorentzVector operator+(const LorentzVector& o) const;

    // Parses "a0,a1,...,ak" with rational entries.
    static LorentzVector parse(std::string_view text);

    std::string str() const;

private:
    std::vector<Rational> coords_;
};

// a0*b0 - sum_{i>=1} a_i*b_i; throws std::invalid_argument on length mismatch.
Rational pairing(const LorentzVector& a, const LorentzVector& b);

enum class ConePosition {
    Forward,           // a.a > 0, a0 > 0
    ForwardBoundary,   // a.a = 0, a != 0, a0 > 0
    Zero,              // all coordinates vanish
    Backward,          // a.a > 0, a0 < 0
    BackwardBoundary,  // a.a = 0, a != 0, a0 < 0
    Spacelike,         // a.a < 0
};

std::string_view to_string(ConePosition pos);

ConePosition cone_position(const LorentzVector& a);

// Closure of the forward cone: Forward, ForwardBoundary or Zero.
bool in_forward_closure(ConePosition pos);

// Evaluates the three cone clauses on (a, b); each holds whenever its
// hypotheses apply:
//   (a) a forward, b in the closure and nonzero      => a.b > 0
//   (b) a and b both in the closure                  => a.b >= 0
//   (c) a forward, b.b >= 0 and a.b >= 0             => b in the closure
// A false return indicates an implementation bug, not a property of the
// input: the clauses are theorems for signature (1, k).
bool check_cone_lemma(const LorentzVector& a, const LorentzVector& b);

}  // namespace gsig
