#pragma once

// Weighted pure polyhedral complexes in R^n and the balancing check. A cycle
// that came from a homogeneous construction has the quotient chart (last
// coordinate pinned to zero) applied before it gets here.

#include <vector>

#include "tropgeo/cone.hpp"
#include "tropgeo/geometry.hpp"
#include "tropgeo/rational.hpp"

namespace tropgeo {

struct TropicalCycle {
  int n = 0;                     // ambient dimension
  PolyhedralComplex complex;     // pure of dimension k
  std::vector<Integer> weights;  // nonzero, one per maximal cell
};

// Sizes must agree, weights be nonzero, cells be nonempty and pure.
void check_cycle(const TropicalCycle& x);

// Common dimension of the maximal cells; PreconditionError unless pure.
int cycle_dim(const TropicalCycle& x);

// One maximal cell as a polyhedron: vertex rows split into points and rays,
// the shared lineality attached.
VRep cell_vrep(const PolyhedralComplex& c, const std::vector<int>& cell);

bool cycle_contains(const TropicalCycle& x, const QVec& p);

// At every codimension-one face the weighted primitive normals of the
// adjacent cells must sum into the face's own span.
bool is_balanced(const TropicalCycle& x);

struct LocalFan {
  QVec base;
  std::vector<Cone> cones;  // tangent cones of the maximal cells through base
  std::vector<Integer> weights;
};

LocalFan star_fan(const TropicalCycle& x, const QVec& p);

// Every face of every cell as a vertex-index set, deduplicated and closed
// under intersection.
std::vector<std::vector<int>> complex_faces(const PolyhedralComplex& c);

// Subcomplex of the faces without ray vertices; cells are the inclusion-
// maximal bounded faces. Vertex rows and numbering are kept verbatim.
PolyhedralComplex bounded_complex(const PolyhedralComplex& c);
PolyhedralComplex bounded_complex(const TropicalCycle& x);

}  // namespace tropgeo
