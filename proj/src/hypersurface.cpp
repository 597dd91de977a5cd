#include "tropgeo/hypersurface.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "tropgeo/errors.hpp"
#include "tropgeo/linalg.hpp"

namespace tropgeo {

namespace {

int face_affine_rank(const PointConfiguration& p, const std::vector<int>& face) {
  QMat diffs;
  for (std::size_t i = 1; i < face.size(); ++i) {
    QVec d(p.dim);
    for (int j = 0; j < p.dim; ++j)
      d[j] = p.points[face[i]][j] - p.points[face[0]][j];
    diffs.push_back(std::move(d));
  }
  return rank(diffs);
}

// Lattice length of an edge face: content of the difference of its extreme
// points. All support points are integral.
Integer segment_lattice_length(const PointConfiguration& p, const std::vector<int>& face) {
  int coord = -1;
  for (std::size_t i = 1; i < face.size() && coord < 0; ++i)
    for (int j = 0; j < p.dim && coord < 0; ++j)
      if (p.points[face[i]][j] != p.points[face[0]][j]) coord = j;
  ensure(coord >= 0, "edge face has no extent");
  int lo = face[0], hi = face[0];
  for (int idx : face) {
    if (p.points[idx][coord] < p.points[lo][coord]) lo = idx;
    if (p.points[idx][coord] > p.points[hi][coord]) hi = idx;
  }
  Integer g(0);
  for (int j = 0; j < p.dim; ++j) {
    Rational d = p.points[hi][j] - p.points[lo][j];
    ensure(is_integral(d), "support points must be integral");
    g = gcd(g, numerator(d));
  }
  ensure(g > 0, "edge of zero lattice length");
  return g;
}

}  // namespace

Hypersurface hypersurface(const TropicalPolynomial& f) {
  check_polynomial(f);
  require(!f.terms.empty(), "polynomial has no terms");
  Hypersurface out;
  out.polynomial = f;
  out.homogeneous = is_homogeneous(f);
  if (out.homogeneous) out.degree = homogeneous_degree(f);

  PointConfiguration p;
  p.dim = f.n_vars;
  QVec heights;
  for (const auto& t : f.terms) {
    p.points.push_back(to_rational(t.exponent));
    heights.push_back(t.coeff);
  }
  out.dual_subdivision = regular_subdivision(p, heights);

  const QMat chart = homogeneity_chart(p);
  const bool charted = !chart.empty();
  const int ambient = charted ? f.n_vars - 1 : f.n_vars;
  out.cycle.n = ambient;
  out.cycle.complex.ambient = ambient;
  if (f.terms.size() < 2) return out;

  ComplexBuilder builder(ambient);
  std::map<std::vector<int>, Integer> weight_of;
  for (const auto& face : subdivision_faces(out.dual_subdivision)) {
    if (face_affine_rank(p, face) != 1) continue;  // walls are dual to edges
    VRep d = dual_cell(p, heights, face, chart);
    if (charted) d = drop_last_coordinate(d);
    auto ids = builder.add_cell(d);
    Integer len = segment_lattice_length(p, face);
    auto [it, fresh] = weight_of.emplace(std::move(ids), len);
    ensure(fresh && it->second == len, "two subdivision edges share a dual wall");
  }
  out.cycle.complex = std::move(builder).finish();
  for (const auto& cell : out.cycle.complex.cells)
    out.cycle.weights.push_back(weight_of.at(cell));
  return out;
}

Integer hypersurface_degree(const Hypersurface& h) {
  require(h.homogeneous, "inhomogeneous polynomial has no degree");
  return h.degree;
}

bool is_smooth(const Hypersurface& h) { return is_unimodular(h.dual_subdivision); }

namespace {

void require_plane_curve(const Hypersurface& h) {
  require(h.cycle.n == 2, "hypersurface is not a plane curve");
}

struct CurveGraph {
  std::vector<int> finite;                  // complex vertex indices
  std::vector<std::array<int, 2>> edges;    // positions into finite
  std::vector<Rational> lengths;
};

int position_of(const std::vector<int>& finite, int idx) {
  auto it = std::lower_bound(finite.begin(), finite.end(), idx);
  ensure(it != finite.end() && *it == idx, "endpoint is not a finite vertex");
  return static_cast<int>(it - finite.begin());
}

// Finite vertices with the bounded edges between them.
CurveGraph curve_graph(const Hypersurface& h) {
  const auto& c = h.cycle.complex;
  CurveGraph g;
  for (std::size_t i = 0; i < c.vertices.size(); ++i)
    if (c.vertices[i][0] == 1) g.finite.push_back(static_cast<int>(i));
  auto lengths = curve_edge_lengths(h);
  for (std::size_t ci = 0; ci < c.cells.size(); ++ci) {
    if (!lengths[ci].has_value()) continue;
    const auto& cell = c.cells[ci];
    ensure(cell.size() == 2, "bounded curve edge must have two endpoints");
    g.edges.push_back({position_of(g.finite, cell[0]), position_of(g.finite, cell[1])});
    g.lengths.push_back(*lengths[ci]);
  }
  return g;
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int a) { return parent[a] == a ? a : parent[a] = find(parent[a]); }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

// First Betti number |E| - |V| + #components of a multigraph.
int betti_one(int n_nodes, const std::vector<std::array<int, 2>>& edges) {
  if (n_nodes == 0) return 0;
  UnionFind uf(n_nodes);
  for (const auto& e : edges) uf.unite(e[0], e[1]);
  std::set<int> roots;
  for (int v = 0; v < n_nodes; ++v) roots.insert(uf.find(v));
  return static_cast<int>(edges.size()) - n_nodes + static_cast<int>(roots.size());
}

}  // namespace

std::vector<std::optional<Rational>> curve_edge_lengths(const Hypersurface& h) {
  require_plane_curve(h);
  const auto& c = h.cycle.complex;
  std::vector<std::optional<Rational>> out;
  for (const auto& cell : c.cells) {
    std::vector<int> finite;
    bool unbounded = !c.lineality.empty();
    for (int idx : cell) {
      if (c.vertices[idx][0] == 1)
        finite.push_back(idx);
      else
        unbounded = true;
    }
    if (unbounded) {
      out.push_back(std::nullopt);
      continue;
    }
    ensure(finite.size() == 2, "bounded curve edge must have two endpoints");
    QVec d(c.ambient);
    for (int j = 0; j < c.ambient; ++j)
      d[j] = c.vertices[finite[1]][j + 1] - c.vertices[finite[0]][j + 1];
    IVec u = primitive(d);
    int coord = 0;
    while (u[coord] == 0) ++coord;
    Rational lambda = d[coord] / u[coord];
    ensure(lambda > 0, "primitive direction must be positively oriented");
    out.push_back(lambda);
  }
  return out;
}

int genus(const Hypersurface& h) {
  CurveGraph g = curve_graph(h);
  return betti_one(static_cast<int>(g.finite.size()), g.edges);
}

int metric_graph_genus(const MetricGraph& g) {
  std::vector<std::array<int, 2>> edges;
  for (const auto& e : g.edges) edges.push_back({e.a, e.b});
  return betti_one(static_cast<int>(g.nodes.size()), edges);
}

MetricGraph essential_subgraph(const Hypersurface& h) {
  CurveGraph g = curve_graph(h);
  const int n = static_cast<int>(g.finite.size());
  std::vector<bool> node_alive(n, true);
  std::vector<bool> edge_alive(g.edges.size(), true);
  std::vector<std::vector<int>> incident(n);
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    incident[g.edges[e][0]].push_back(static_cast<int>(e));
    incident[g.edges[e][1]].push_back(static_cast<int>(e));
  }

  // rays are already absent; peel leaves and isolated vertices
  bool changed = true;
  while (changed) {
    changed = false;
    for (int v = 0; v < n; ++v) {
      if (!node_alive[v]) continue;
      std::vector<int> live;
      for (int e : incident[v])
        if (edge_alive[e]) live.push_back(e);
      int degree = 0;
      for (int e : live)
        degree += (g.edges[e][0] == v) + (g.edges[e][1] == v);
      if (degree > 1) continue;
      node_alive[v] = false;
      for (int e : live) edge_alive[e] = false;
      changed = true;
    }
  }

  MetricGraph out;
  std::vector<int> remap(n, -1);
  const auto& verts = h.cycle.complex.vertices;
  for (int v = 0; v < n; ++v) {
    if (!node_alive[v]) continue;
    remap[v] = static_cast<int>(out.nodes.size());
    const QVec& row = verts[g.finite[v]];
    out.nodes.push_back(QVec(row.begin() + 1, row.end()));
  }
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    if (!edge_alive[e]) continue;
    out.edges.push_back({remap[g.edges[e][0]], remap[g.edges[e][1]], g.lengths[e]});
  }
  out.genus = metric_graph_genus(out);
  return out;
}

MetricGraph suppress_degree_two_nodes(const MetricGraph& g) {
  const int n = static_cast<int>(g.nodes.size());
  std::vector<bool> node_alive(n, true);
  std::vector<MetricEdge> edges = g.edges;
  std::vector<bool> edge_alive(edges.size(), true);

  bool changed = true;
  while (changed) {
    changed = false;
    for (int v = 0; v < n && !changed; ++v) {
      if (!node_alive[v]) continue;
      std::vector<int> live;
      int degree = 0;
      for (std::size_t e = 0; e < edges.size(); ++e) {
        if (!edge_alive[e]) continue;
        int hits = (edges[e].a == v) + (edges[e].b == v);
        if (hits == 0) continue;
        degree += hits;
        live.push_back(static_cast<int>(e));
      }
      // two distinct non-loop edges through v merge into one
      if (degree != 2 || live.size() != 2) continue;
      const MetricEdge& e1 = edges[live[0]];
      const MetricEdge& e2 = edges[live[1]];
      int a = e1.a == v ? e1.b : e1.a;
      int b = e2.a == v ? e2.b : e2.a;
      edges.push_back({a, b, e1.length + e2.length});
      edge_alive[live[0]] = edge_alive[live[1]] = false;
      edge_alive.push_back(true);
      node_alive[v] = false;
      changed = true;
    }
  }

  MetricGraph out;
  std::vector<int> remap(n, -1);
  for (int v = 0; v < n; ++v) {
    if (!node_alive[v]) continue;
    remap[v] = static_cast<int>(out.nodes.size());
    out.nodes.push_back(g.nodes[v]);
  }
  for (std::size_t e = 0; e < edges.size(); ++e) {
    if (!edge_alive[e]) continue;
    out.edges.push_back({remap[edges[e].a], remap[edges[e].b], edges[e].length});
  }
  out.genus = metric_graph_genus(out);
  return out;
}

MetricGraph skeleton(const Hypersurface& h) {
  const int g = genus(h);
  require(g >= 2, "skeleton needs genus at least two");
  MetricGraph s = suppress_degree_two_nodes(essential_subgraph(h));
  ensure(s.genus == g, "pruning must preserve the cycle rank");
  return s;
}

}  // namespace tropgeo
