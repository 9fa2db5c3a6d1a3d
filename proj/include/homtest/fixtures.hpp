#pragma once

#include <string>
#include <vector>

#include "homtest/z2.hpp"

namespace homtest {

/// A hand-built chain complex together with a cellular involution, used
/// to exercise the homology engine on spaces that do not arise as
/// multihomomorphism complexes.
struct FixtureComplex {
    std::string name;
    ChainComplexZ2 complex;
    CellInvolution involution;
};

/**
 * Two fixtures whose first nonvanishing reduced homology sits strictly
 * below the dimension the free involution "uses":
 *  - "two-points-and-circle": two swapped points plus a circle with the
 *    antipodal action; reduced Betti (2,1).
 *  - "sphere-with-ears": an antipodal 2-sphere with a circle attached at
 *    each of two antipodal vertices, the involution swapping the circles;
 *    reduced Betti (0,2,1).
 */
std::vector<FixtureComplex> fixture_complexes();

} // namespace homtest
