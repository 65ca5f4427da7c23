#pragma once

// Frozen bases of the Leech and odd Leech lattices in the ambient frame of
// the Golay Construction-A lattice. Generated by tools/derive_frozen; do not
// edit by hand. Basis rows are numerators over the stated denominator.

namespace latkit::data {

inline constexpr bool kFrozenDataAvailable = true;

inline constexpr int kLeechBasisNum[24][24] = {
    {1, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, -1, 1, 1, 2, 0, 1, 1, 0, 0, 2, 0},
    {-1, 1, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 2, 1, -1, -1, -1, 1, -1, 0, 0, -1, -1},
    {-1, 1, 1, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -2, -1, 1, 1, -1, 1, 1, -1, -1},
    {-1, 1, 0, 0, 1, 1, 0, 0, 0, 0, 0, 0, -1, 1, 0, 0, 0, 0, 0, -2, 2, 0, -1, -1},
    {-1, 1, 0, 0, 1, -1, 0, 0, 0, 0, 0, 0, -1, 1, 0, -2, -1, -1, 0, 0, 2, 0, 0, 0},
    {-1, 1, 0, 0, 0, 0, 1, 1, 0, 0, 0, 0, 0, 2, -1, -1, -1, 1, 1, -1, 1, -1, 0, 0},
    {-1, 1, 0, 0, 0, 0, 1, -1, 0, 0, 0, 0, 1, 1, -1, -1, -1, -1, 0, -2, 1, 1, 0, 0},
    {-1, 1, 0, 0, 0, 0, 0, 0, 1, 1, 0, 0, 1, 1, 0, 0, -2, 0, 0, 0, 2, 0, -1, -1},
    {-1, 0, 0, 1, 0, 1, 0, 1, 0, 1, 1, 0, 0, 3, 0, 1, 0, 1, -1, 0, 0, -1, -2, -1},
    {-1, 0, 0, 1, 0, 1, 0, 1, 0, -1, 1, 0, -1, 2, 1, 0, 0, 1, -1, -2, -1, -2, -1, 0},
    {0, 1, 0, 1, 0, 1, 0, 1, -1, 0, 0, 1, -2, 3, 0, 1, 0, 1, 0, -1, -1, 0, -1, 0},
    {0, 1, 0, -1, 0, -1, -1, 0, -1, 0, 0, -1, 0, 1, -1, -2, -1, 0, 0, 1, 0, 1, -1, 0},
    {-1, 0, 0, 1, 0, -1, 0, 1, 0, 1, 1, 0, 0, -1, 0, -1, -1, 0, -1, 2, 0, -1, -1, 0},
    {-1, 0, 0, -1, -1, 0, 1, 0, 0, 1, 1, 0, 0, -1, 0, 1, -1, 2, -1, 0, 0, 1, -1, 0},
    {0, 0, 0, 0, -1, 1, 1, 1, 0, 2, 0, 0, 0, 0, 0, 0, 0, 2, 1, 1, 0, 0, -1, -1},
    {0, 0, 0, 0, -1, 1, 0, 0, 1, 1, 0, 0, 0, -2, -2, 0, -1, 1, 0, 0, 0, 0, -1, -1},
    {0, 0, 0, 0, -1, -1, 1, -1, 0, 0, 0, 0, 0, -2, -1, -1, 1, 1, 0, 0, -1, 1, 1, 1},
    {0, 0, 0, 0, -1, -1, 0, 0, 1, 1, 0, 0, 0, -2, 0, 0, 0, -2, 0, 2, 0, 0, 0, 0},
    {0, -1, 0, -1, 0, 1, 1, 0, 0, -1, 0, 1, 0, -1, -1, 0, 1, 2, 1, 0, -1, 0, 0, 1},
    {0, -1, 0, 1, 1, 0, 0, -1, 0, 1, 0, 1, 0, 1, 0, 1, 1, -2, 0, -1, 0, 1, -1, 0},
    {0, -2, 1, 1, 0, 0, -1, 1, 0, 0, 0, 0, 0, -2, 0, 0, 0, 0, 0, 0, -2, 0, 0, 0},
    {1, 0, 1, 0, -1, 0, 0, 1, 0, -1, 0, 1, -1, -2, -1, 0, -1, 0, -1, 0, -1, 0, -1, 0},
    {0, -1, 1, 2, 0, 1, -1, 0, -1, 0, 0, 1, -1, 0, 0, 1, 0, -1, 1, 0, -1, 0, -1, 0},
    {0, 0, 1, 1, 0, 0, 0, 0, 0, 0, 1, -1, -1, 1, 0, 0, -1, -1, 0, 0, -2, 0, -2, 0},
};
inline constexpr int kLeechBasisDen = 2;

inline constexpr int kOddLeechBasisNum[24][24] = {
    {1, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, -1, 1, 1, 2, 0, 1, 1, 0, 0, 2, 0},
    {-1, 1, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 2, 1, -1, -1, -1, 1, -1, 0, 0, -1, -1},
    {-1, 1, 1, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -2, -1, 1, 1, -1, 1, 1, -1, -1},
    {-1, 1, 0, 0, 1, 1, 0, 0, 0, 0, 0, 0, -1, 1, 0, 0, 0, 0, 0, -2, 2, 0, -1, -1},
    {0, -1, 0, -1, 0, -1, 1, 0, -1, 0, 0, -1, 0, -1, -1, 0, 1, 0, 0, 1, -1, 0, 0, 1},
    {-1, 1, 0, 0, 1, -1, 0, 0, 0, 0, 0, 0, -1, 1, 0, -2, -1, -1, 0, 0, 2, 0, 0, 0},
    {-1, 1, 0, 0, 0, 0, 1, 1, 0, 0, 0, 0, 0, 2, -1, -1, -1, 1, 1, -1, 1, -1, 0, 0},
    {0, 1, 0, 1, 0, -1, -1, 0, -1, 0, 0, -1, -2, 1, 0, -1, -1, -2, 0, 1, -1, 0, -1, 0},
    {0, -1, 0, -1, -1, 0, 0, -1, 1, 0, 0, -1, 0, -1, -1, 0, -1, 0, -1, 0, -1, 0, -1, 0},
    {-1, 0, 0, 1, -1, 0, 1, 0, 0, 1, 1, 0, 0, 1, -1, 0, -1, 0, -1, 0, -1, 0, -1, 0},
    {0, 1, 0, 1, -1, 0, 0, -1, -1, 0, 0, -1, 0, 1, -1, 0, -1, -2, 0, -1, -2, 1, -1, 0},
    {-1, 1, 0, 0, 0, 0, 0, 0, 1, 1, 0, 0, 1, 1, 0, 0, -2, 0, 0, 0, 2, 0, -1, -1},
    {0, 1, -1, 0, 0, 1, 1, 0, 0, 1, -1, 0, 0, 1, -1, 0, -1, 0, 0, -1, 1, 0, -1, 0},
    {-1, 1, 0, 0, -1, -1, 0, 0, 0, 0, 1, -1, -1, -1, 0, -2, -2, 0, 0, 0, 0, 0, 0, 0},
    {0, 1, -1, 0, 0, -1, 0, -1, 1, 0, -1, 0, 0, -1, -1, 0, -1, 0, -1, 0, 1, 0, 0, 1},
    {0, -1, -1, 0, 0, 1, 0, -1, 0, -1, 1, 0, 0, -1, 0, 1, 1, 0, -1, 0, -1, 0, 0, 1},
    {0, 0, -1, -1, -1, 1, 0, 0, 0, 0, 1, -1, -1, 1, -1, 1, 0, 2, -1, -1, 0, 0, 0, 0},
    {-1, 1, 0, 0, -1, -1, 1, 1, 0, 0, 0, 0, 0, 2, 0, 0, -1, -1, 0, 0, -1, -1, -1, 1},
    {0, -1, 0, 1, 0, 1, -1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, -1, 0, 0, -1, 0, -1},
    {0, -1, 0, 1, 0, -1, -1, 0, 0, 1, 1, 0, 0, 1, 1, 0, 0, -1, 0, 1, -1, 0, -1, 0},
    {1, 1, 0, 0, 0, 0, -1, 1, 0, 0, 0, 0, 0, 0, -1, 1, 1, 1, -1, 1, 2, 0, 1, 1},
    {1, 0, -1, 0, 0, -1, 0, 1, -1, 0, -1, 0, 1, 0, 1, 0, -1, 0, 1, 0, 0, 1, 1, 0},
    {1, -1, -1, -1, 0, 0, 0, 0, -1, 1, -1, -1, 0, 0, -1, 1, 0, 0, 0, 0, -2, 0, 1, 1},
    {-1, 1, -1, 1, 0, 0, 0, 0, 0, 0, -1, 1, 0, 2, 0, 0, -1, -1, -1, -1, 1, -1, 0, 0},
};
inline constexpr int kOddLeechBasisDen = 2;

}  // namespace latkit::data
