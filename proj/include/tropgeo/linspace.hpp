#pragma once

// Valuated matroids and the tropical linear spaces they cut out, plus the
// order-complex fan built from the lattice of flats.

#include <vector>

#include "tropgeo/cycle.hpp"
#include "tropgeo/geometry.hpp"
#include "tropgeo/matroid.hpp"
#include "tropgeo/rational.hpp"

namespace tropgeo {

struct ValuatedMatroid {
  Matroid matroid;
  QVec valuation;  // one entry per basis, in basis order
};

// True iff every maximal cell, read off through the per-point basis labels,
// satisfies the exchange axiom. Points must be the indicator vectors of
// their labels.
bool is_matroidal(const RegularSubdivision& s,
                  const std::vector<std::vector<int>>& point_bases);

// Validates that the valuation induces a matroidal subdivision of the
// basis polytope.
ValuatedMatroid valuated_matroid(Matroid m, QVec valuation);

ValuatedMatroid trivial_valuation(const Matroid& m);

// Regular subdivision of the basis polytope under the valuation heights.
RegularSubdivision basis_subdivision(const ValuatedMatroid& vm);

// The tropical linear space: cells dual to the loopfree faces of the basis
// subdivision, all weights one, in the torus chart (ambient n-1). A point w
// lies in it iff the bases minimizing v(B) - sum_{i in B} w_i have no
// common missing element.
TropicalCycle linear_space(const ValuatedMatroid& vm);

// Fan of the lattice of flats: one ray per proper nonempty flat (indicator
// vector modulo all-ones), one maximal cone per maximal chain, weights one.
// Same support as linear_space of the trivial valuation.
TropicalCycle bergman_fan_from_flats(const Matroid& m);

}  // namespace tropgeo
