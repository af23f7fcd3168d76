#include "gsig/catalog.hpp"

namespace gsig {

// Built-in seed catalog; data/seed_catalog.json in the repository holds the
// same document as a user-editable starting point, kept in sync by a test.
const std::string& seed_catalog_text() {
    static const std::string text = R"json([
  {
    "name": "K3",
    "chi": 24,
    "sigma": -16,
    "spin": true,
    "minimal": true,
    "h1_zero": true,
    "flags": [
      "sw_nonvanishing"
    ],
    "note": "K3 surface, the elliptic surface E(2); sigma = -16 is forced by c1^2 = 0."
  },
  {
    "name": "E1_23",
    "chi": 12,
    "sigma": -8,
    "spin": false,
    "minimal": true,
    "h1_zero": true,
    "flags": [
      "symplectic",
      "b1_zero"
    ],
    "note": "Dolgachev surface E(1)_{2,3}: minimal irrational elliptic surface with multiple fibres of indices 2 and 3."
  },
  {
    "name": "E3",
    "chi": 36,
    "sigma": -24,
    "spin": false,
    "minimal": true,
    "h1_zero": true,
    "flags": [
      "sw_nonvanishing"
    ],
    "note": "Minimal elliptic surface E(3) without multiple fibres."
  },
  {
    "name": "S2xS2",
    "chi": 4,
    "sigma": 0,
    "spin": true,
    "minimal": true,
    "h1_zero": true,
    "flags": [
      "rational_surface"
    ],
    "note": "Standard S2 x S2; a rational surface, so no negative-sphere evidence applies."
  },
  {
    "name": "S2xS2_exotic",
    "chi": 4,
    "sigma": 0,
    "spin": true,
    "minimal": true,
    "h1_zero": true,
    "flags": [
      "symplectic",
      "b1_zero"
    ],
    "note": "Hypothetical exotic smooth structure on S2 x S2, assumed symplectic; minimal because the intersection form is even. None are currently known."
  },
  {
    "name": "CP2_CP2bar",
    "chi": 4,
    "sigma": 0,
    "spin": false,
    "minimal": false,
    "h1_zero": true,
    "flags": [
      "rational_surface"
    ],
    "note": "Standard CP2 # CP2bar, the one-point blow-up of CP2; rational and non-minimal."
  },
  {
    "name": "CP2_CP2bar_exotic",
    "chi": 4,
    "sigma": 0,
    "spin": false,
    "minimal": true,
    "h1_zero": true,
    "flags": [
      "symplectic",
      "b1_zero"
    ],
    "note": "Hypothetical exotic symplectic CP2 # CP2bar, assumed minimal. None are currently known."
  },
  {
    "name": "CP2_2CP2bar_exotic",
    "chi": 5,
    "sigma": -1,
    "spin": false,
    "minimal": true,
    "h1_zero": true,
    "flags": [
      "symplectic",
      "b1_zero"
    ],
    "note": "Exotic symplectic CP2 # 2 CP2bar of Akhmedov-Park type: minimal with b2+ = 1 and b2- = 2."
  },
  {
    "name": "GenType_sigma2",
    "chi": 100,
    "sigma": 2,
    "spin": false,
    "minimal": true,
    "h1_zero": true,
    "flags": [
      "sw_nonvanishing"
    ],
    "note": "Schematic surface of general type with positive signature; known constructions have larger invariants."
  }
]
)json";
    return text;
}

}  // namespace gsig
