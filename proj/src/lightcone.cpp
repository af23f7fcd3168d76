#include "gsig/lightcone.hpp"

#include <stdexcept>

namespace gsig {

LorentzVector::LorentzVector(std::vector<Rational> coords)
    : coords_(std::move(coords)) {
    if (coords_.empty())
        throw std::invalid_argument("LorentzVector: needs at least one coordinate");
}

LorentzVector LorentzVector::operator-() const {
    std::vector<Rational> c;
    c.reserve(coords_.size());
    for (const auto& x : coords_)
        c.push_back(-x);
    return LorentzVector(std::move(c));
}

LorentzVector LorentzVector::operator+(const LorentzVector& o) const {
    if (coords_.size() != o.coords_.size())
        throw std::invalid_argument("LorentzVector: length mismatch");
    std::vector<Rational> c;
    c.reserve(coords_.size());
    for (std::size_t i = 0; i < coords_.size(); ++i)
        c.push_back(coords_[i] + o.coords_[i]);
    return LorentzVector(std::move(c));
}

LorentzVector LorentzVector::parse(std::string_view text) {
    std::vector<Rational> coords;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t comma = text.find(',', start);
        std::string_view piece = comma == std::string_view::npos
                                     ? text.substr(start)
                                     : text.substr(start, comma - start);
        coords.push_back(Rational::parse(piece));
        if (comma == std::string_view::npos)
            break;
        start = comma + 1;
    }
    return LorentzVector(std::move(coords));
}

std::string LorentzVector::str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        if (i)
            s += ", ";
        s += coords_[i].str();
    }
    s += ")";
    return s;
}

Rational pairing(const LorentzVector& a, const LorentzVector& b) {
    if (a.size() != b.size())
        throw std::invalid_argument("pairing: vectors of different length");
    Rational acc = a[0] * b[0];
    for (std::size_t i = 1; i < a.size(); ++i)
        acc -= a[i] * b[i];
    return acc;
}

std::string_view to_string(ConePosition pos) {
    switch (pos) {
        case ConePosition::Forward: return "Forward";
        case ConePosition::ForwardBoundary: return "ForwardBoundary";
        case ConePosition::Zero: return "Zero";
        case ConePosition::Backward: return "Backward";
        case ConePosition::BackwardBoundary: return "BackwardBoundary";
        case ConePosition::Spacelike: return "Spacelike";
    }
    return "?";
}

ConePosition cone_position(const LorentzVector& a) {
    Rational square = pairing(a, a);
    if (square.sign() < 0)
        return ConePosition::Spacelike;
    if (square.sign() > 0)
        return a[0].sign() > 0 ? ConePosition::Forward : ConePosition::Backward;
    // Null vector: a0 = 0 forces every coordinate to vanish.
    if (a[0].sign() > 0)
        return ConePosition::ForwardBoundary;
    if (a[0].sign() < 0)
        return ConePosition::BackwardBoundary;
    return ConePosition::Zero;
}

bool in_forward_closure(ConePosition pos) {
    return pos == ConePosition::Forward || pos == ConePosition::ForwardBoundary ||
           pos == ConePosition::Zero;
}

bool check_cone_lemma(const LorentzVector& a, const LorentzVector& b) {
    ConePosition pa = cone_position(a);
    ConePosition pb = cone_position(b);
    Rational ab = pairing(a, b);

    if (pa == ConePosition::Forward && in_forward_closure(pb) &&
        pb != ConePosition::Zero && !(ab.sign() > 0))
        return false;

    if (in_forward_closure(pa) && in_forward_closure(pb) && ab.sign() < 0)
        return false;

    if (pa == ConePosition::Forward && pairing(b, b).sign() >= 0 &&
        ab.sign() >= 0 && !in_forward_closure(pb))
        return false;

    return true;
}

}  // namespace gsig
