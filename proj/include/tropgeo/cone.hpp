#pragma once

// Exact polyhedral cone machinery built on the double description method.
// One engine serves both directions: rays from inequalities, and (by
// polarity) facets from rays. Lineality is carried separately; equations are
// eliminated by substitution into their nullspace.

#include <vector>

#include "tropgeo/linalg.hpp"
#include "tropgeo/rational.hpp"

namespace tropgeo {

struct GeneratorSide {
  QMat rays;       // primitive integer entries, reduced mod lineality, sorted
  QMat lineality;  // canonical basis (rref-derived, primitive, sign-normalized)
};

// Rays and lineality of {x in R^dim : ineqs*x >= 0, eqs*x = 0}.
GeneratorSide dd_rays(const QMat& ineqs, const QMat& eqs, int dim);

// Facets and span equations of cone(rays) + span(lineality) via polarity:
// the facet normals are the rays of the polar cone.
struct InequalitySide {
  QMat facets;     // irredundant, primitive integer, sorted
  QMat equations;  // canonical basis of the annihilator of the cone's span
};
InequalitySide dd_facets(const QMat& rays, const QMat& lineality, int dim);

// A cone with both descriptions, each canonical.
struct Cone {
  int ambient = 0;
  QMat rays;
  QMat lineality;
  QMat facets;
  QMat equations;

  int dim() const;
};

Cone cone_from_inequalities(const QMat& ineqs, const QMat& eqs, int dim);
Cone cone_from_generators(const QMat& rays, const QMat& lineality, int dim);

enum class Position { Interior, Boundary, Outside };

struct ConeMembership {
  Position where;
  QVec facet_products;       // one per facet, in facet order
  QVec equation_residuals;   // one per equation
};

// Position of v relative to the cone; Interior means relative interior.
ConeMembership cone_membership(const Cone& c, const QVec& v);

// Polyhedra {x : a*x + b >= 0, e*x + c = 0} with constraint rows stored as
// [b, a...] resp. [c, e...]; vertex/ray form via homogenization.
struct HRep {
  QMat ineqs;
  QMat eqs;
};

struct VRep {
  QMat vertices;   // affine points
  QMat rays;       // primitive integer directions
  QMat lineality;  // canonical basis
  bool empty() const { return vertices.empty(); }
};

VRep polyhedron_vertices(const HRep& h, int dim);
// Requires a nonempty polyhedron; drops the trivial homogenization facet.
HRep polyhedron_inequalities(const VRep& v, int dim);

bool hrep_contains(const HRep& h, const QVec& x);

// Dimension of conv(vertices) + cone(rays) + span(lineality).
int polyhedron_dim(const VRep& v);

// A point in the relative interior (vertex barycenter plus the ray sum).
QVec relative_interior_point(const VRep& v);

}  // namespace tropgeo
