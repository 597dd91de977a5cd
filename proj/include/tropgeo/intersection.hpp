#pragma once

// Stable intersection of weighted balanced complexes and the degree it
// induces. Supports are cut down by the local criterion (the Minkowski sum
// of the two star fans must span the ambient space); multiplicities come
// from the fan displacement rule.

#include "tropgeo/cycle.hpp"
#include "tropgeo/linalg.hpp"

namespace tropgeo {

// Index [Z^n : L1 + L2] of the lattice spanned by the union of two integer
// generating sets, via the product of elementary divisors of the stack.
// The union must span the ambient space.
Integer lattice_index(const IMat& basis1, const IMat& basis2, int n);

// X . Y in dimension k + l - n, the empty cycle when k + l < n. Weight of a
// cell around a generic point p sums m_sigma * m_tau * [Z^n : L_sigma + L_tau]
// over the star cone pairs that a generic displacement keeps in contact.
// The displacement is drawn from the seed and revalidated until every meet
// is transversal; any generic draw produces the same cycle.
TropicalCycle stable_intersection(const TropicalCycle& x,
                                  const TropicalCycle& y,
                                  unsigned long seed = 0);

// Total weight of the stable intersection with a standard linear space of
// complementary dimension; for a zero-dimensional cycle the sum of its
// weights. The input must be balanced.
Integer degree(const TropicalCycle& x);

}  // namespace tropgeo
