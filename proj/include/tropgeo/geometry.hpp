#pragma once

// Point configurations, regular subdivisions of their lifts, and the duality
// machinery: normal complexes, tight spans, secondary cones, lattice volumes.

#include <map>
#include <vector>

#include "tropgeo/cone.hpp"
#include "tropgeo/rational.hpp"

namespace tropgeo {

struct PointConfiguration {
  int dim = 0;
  QMat points;  // one row per point

  std::size_t size() const { return points.size(); }
};

// Cells are the full tight point sets of the lower facets of the lift, so
// non-vertex points on a lower face belong to the cell.
struct RegularSubdivision {
  PointConfiguration config;
  QVec heights;
  std::vector<std::vector<int>> maximal_cells;  // sorted sets, sorted lex
};

RegularSubdivision regular_subdivision(const PointConfiguration& p, const QVec& heights);

// All faces of the subdivision as point-index sets: the maximal cells, their
// facets, and everything below, deduplicated across cells.
std::vector<std::vector<int>> subdivision_faces(const RegularSubdivision& s);

// Dual cell of a face S: closure of {x : argmin_i(h_i + p_i*x) contains S},
// intersected with the optional chart equations (rows [c, e...]).
VRep dual_cell(const PointConfiguration& p, const QVec& heights,
               const std::vector<int>& face, const QMat& chart_eqs = {});

// When every point has the same coordinate sum the argmin regions are
// invariant along (1,...,1); the chart pins the last coordinate to 0.
QMat homogeneity_chart(const PointConfiguration& p);
bool is_homogeneous_configuration(const PointConfiguration& p);

// Remove the pinned last coordinate from every row; each must end in zero.
VRep drop_last_coordinate(const VRep& cell);

// Polyhedral complexes with homogeneous vertex rows: [1, x...] for ordinary
// vertices, [0, d...] (d primitive) for rays. Every cell shares the one
// lineality space; vertex and ray coordinates are reduced modulo it.
struct PolyhedralComplex {
  int ambient = 0;
  QMat vertices;
  QMat lineality;
  std::vector<std::vector<int>> cells;  // vertex-index sets, sorted
};

// Deduplicating assembler for complexes built cell by cell.
class ComplexBuilder {
 public:
  explicit ComplexBuilder(int ambient) : ambient_(ambient) {}

  int add_vertex(const QVec& point);
  int add_ray(const QVec& direction);
  std::vector<int> add_cell(const VRep& cell);  // cells must agree on lineality

  PolyhedralComplex finish() &&;

  int ambient() const { return ambient_; }

 private:
  int ambient_;
  QMat vertices_;
  QMat lineality_;
  bool lineality_set_ = false;
  std::map<QVec, int> index_;
  std::vector<std::vector<int>> cells_;
};

// Maximal cells are the argmin regions of the points used by the subdivision;
// for homogeneous configurations the chart is applied and the pinned last
// coordinate dropped.
PolyhedralComplex normal_complex(const PointConfiguration& p, const QVec& heights);

// Bounded part of the dual complex: one vertex per maximal cell (in cell
// order), faces given as vertex-index sets, maximal ones listed as cells.
PolyhedralComplex tight_span(const RegularSubdivision& s);

// Secondary cone of the subdivision inside R^(#points): closure of the set
// of height vectors inducing it.
Cone secondary_cone(const RegularSubdivision& s);

// The coarsest subdivision induced by a single secondary ray used as heights.
inline RegularSubdivision coarsest_subdivision_of_ray(const PointConfiguration& p,
                                                      const QVec& ray) {
  return regular_subdivision(p, ray);
}

// All k-subsets of {0..n-1} in lexicographic order; this order is frozen
// because valuations on hypersimplex vertices are indexed by it.
std::vector<std::vector<int>> k_subsets_lex(int n, int k);

// Vertices of the hypersimplex: indicator vectors of the k-subsets, in the
// frozen lexicographic order.
PointConfiguration hypersimplex(int k, int n);

// Volume normalized to the lattice of the affine hull (a unimodular simplex
// has volume 1); integral coordinates required.
Integer normalized_volume(const QMat& points);

// Every maximal cell is a simplex of normalized volume 1.
bool is_unimodular(const RegularSubdivision& s);

}  // namespace tropgeo
