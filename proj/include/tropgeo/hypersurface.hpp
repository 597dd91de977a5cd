#pragma once

// Tropical hypersurfaces: the weighted codimension-one skeleton dual to the
// regular subdivision of the support, plus plane-curve analytics.

#include <optional>
#include <vector>

#include "tropgeo/cycle.hpp"
#include "tropgeo/geometry.hpp"
#include "tropgeo/polynomial.hpp"

namespace tropgeo {

struct Hypersurface {
  TropicalPolynomial polynomial;
  RegularSubdivision dual_subdivision;
  TropicalCycle cycle;       // duals of the one-dimensional subdivision faces
  bool homogeneous = false;  // all exponent sums agree, degree is defined
  Integer degree = 0;
};

// Maximal cells are dual to the subdivision's edges and weighted by their
// lattice lengths; homogeneous polynomials are charted by pinning the last
// coordinate to zero, so the cycle lives one dimension down.
Hypersurface hypersurface(const TropicalPolynomial& f);

Integer hypersurface_degree(const Hypersurface& h);

// True iff the dual subdivision is unimodular.
bool is_smooth(const Hypersurface& h);

// Lengths in cell order: bounded segments measure rational lattice lengths,
// unbounded cells report no value.
std::vector<std::optional<Rational>> curve_edge_lengths(const Hypersurface& h);

// Cycle rank of the graph of finite vertices and bounded edges.
int genus(const Hypersurface& h);

struct MetricEdge {
  int a = 0;
  int b = 0;
  Rational length;
};

struct MetricGraph {
  QMat nodes;  // positions of the surviving curve vertices
  std::vector<MetricEdge> edges;
  int genus = 0;
};

int metric_graph_genus(const MetricGraph& g);

// Bounded edges left after deleting rays and dangling trees.
MetricGraph essential_subgraph(const Hypersurface& h);

// Smooth out nodes with exactly two distinct incident edges, adding lengths.
MetricGraph suppress_degree_two_nodes(const MetricGraph& g);

// Essential subgraph with degree-two nodes suppressed; the resulting edge
// lengths are the moduli of the curve. Needs genus at least two.
MetricGraph skeleton(const Hypersurface& h);

}  // namespace tropgeo
