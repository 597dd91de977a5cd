#include "tropgeo/geometry.hpp"

#include <algorithm>
#include <set>

#include "tropgeo/errors.hpp"

namespace tropgeo {

namespace {

void check_config(const PointConfiguration& p) {
  require(p.dim >= 0, "negative dimension");
  for (const auto& row : p.points)
    require(static_cast<int>(row.size()) == p.dim, "point of wrong dimension");
}

}  // namespace

RegularSubdivision regular_subdivision(const PointConfiguration& p, const QVec& heights) {
  check_config(p);
  require(heights.size() == p.size(), "one height per point required");
  require(!p.points.empty(), "empty configuration has no subdivision");

  // cone over the lifted points plus the upward direction; lower facets are
  // the facets with positive weight on the lift coordinate
  const int hdim = p.dim + 2;
  QMat gens;
  for (std::size_t i = 0; i < p.size(); ++i) {
    QVec g(hdim);
    g[0] = 1;
    for (int j = 0; j < p.dim; ++j) g[j + 1] = p.points[i][j];
    g[hdim - 1] = heights[i];
    gens.push_back(std::move(g));
  }
  QVec up(hdim, Rational(0));
  up[hdim - 1] = 1;
  gens.push_back(up);

  InequalitySide f = dd_facets(gens, {}, hdim);
  for (const auto& e : f.equations)
    ensure(e[hdim - 1] == 0, "lift equation involves the height coordinate");

  RegularSubdivision out;
  out.config = p;
  out.heights = heights;
  for (const auto& facet : f.facets) {
    if (facet[hdim - 1] <= 0) continue;  // vertical or upper facet
    std::vector<int> cell;
    for (std::size_t i = 0; i < p.size(); ++i)
      if (dot(facet, gens[i]) == 0) cell.push_back(static_cast<int>(i));
    ensure(!cell.empty(), "lower facet with no incident points");
    out.maximal_cells.push_back(std::move(cell));
  }
  std::sort(out.maximal_cells.begin(), out.maximal_cells.end());
  ensure(!out.maximal_cells.empty(), "subdivision needs at least one cell");
  return out;
}

namespace {

// The stored heights must induce the stored cells, up to reordering.
void require_induced(const RegularSubdivision& s) {
  auto canonical = s.maximal_cells;
  for (auto& cell : canonical) std::sort(cell.begin(), cell.end());
  std::sort(canonical.begin(), canonical.end());
  RegularSubdivision fresh = regular_subdivision(s.config, s.heights);
  require(fresh.maximal_cells == canonical,
          "cells are not the subdivision induced by the heights");
}

}  // namespace

std::vector<std::vector<int>> subdivision_faces(const RegularSubdivision& s) {
  std::set<std::vector<int>> faces;
  for (const auto& cell : s.maximal_cells) {
    faces.insert(cell);
    if (cell.size() == 1) continue;
    VRep v;
    for (int i : cell) v.vertices.push_back(s.config.points[i]);
    HRep h = polyhedron_inequalities(v, s.config.dim);
    for (const auto& row : h.ineqs) {
      std::vector<int> tightset;
      for (int i : cell) {
        Rational val = row[0];
        for (int j = 0; j < s.config.dim; ++j)
          val += row[j + 1] * s.config.points[i][j];
        if (val == 0) tightset.push_back(i);
      }
      if (!tightset.empty()) faces.insert(std::move(tightset));
    }
  }
  // meet closure: the intersection of two faces is a face
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<std::vector<int>> snapshot(faces.begin(), faces.end());
    for (std::size_t a = 0; a < snapshot.size(); ++a)
      for (std::size_t b = a + 1; b < snapshot.size(); ++b) {
        std::vector<int> meet;
        std::set_intersection(snapshot[a].begin(), snapshot[a].end(),
                              snapshot[b].begin(), snapshot[b].end(),
                              std::back_inserter(meet));
        if (!meet.empty() && faces.insert(meet).second) changed = true;
      }
  }
  return {faces.begin(), faces.end()};
}

VRep dual_cell(const PointConfiguration& p, const QVec& heights,
               const std::vector<int>& face, const QMat& chart_eqs) {
  check_config(p);
  require(!face.empty(), "dual cell of the empty face is undefined");
  for (int i : face)
    require(i >= 0 && i < static_cast<int>(p.size()), "face index out of range");
  const int base = face.front();
  HRep h;
  std::vector<bool> in_face(p.size(), false);
  for (int i : face) in_face[i] = true;
  for (std::size_t j = 0; j < p.size(); ++j) {
    QVec row(p.dim + 1);
    row[0] = heights[j] - heights[base];
    for (int k = 0; k < p.dim; ++k) row[k + 1] = p.points[j][k] - p.points[base][k];
    if (in_face[j]) {
      if (static_cast<int>(j) != base) h.eqs.push_back(std::move(row));
    } else {
      h.ineqs.push_back(std::move(row));
    }
  }
  for (const auto& e : chart_eqs) h.eqs.push_back(e);
  return polyhedron_vertices(h, p.dim);
}

bool is_homogeneous_configuration(const PointConfiguration& p) {
  if (p.points.empty() || p.dim < 2) return false;
  Rational s(0);
  for (const auto& x : p.points[0]) s += x;
  for (const auto& row : p.points) {
    Rational t(0);
    for (const auto& x : row) t += x;
    if (t != s) return false;
  }
  return true;
}

QMat homogeneity_chart(const PointConfiguration& p) {
  if (!is_homogeneous_configuration(p)) return {};
  QVec row(p.dim + 1, Rational(0));
  row[p.dim] = 1;  // pin the last coordinate to 0
  return {row};
}

int ComplexBuilder::add_vertex(const QVec& point) {
  require(static_cast<int>(point.size()) == ambient_, "vertex of wrong dimension");
  QVec row(ambient_ + 1, Rational(1));
  std::copy(point.begin(), point.end(), row.begin() + 1);
  auto it = index_.find(row);
  if (it != index_.end()) return it->second;
  const int id = static_cast<int>(vertices_.size());
  vertices_.push_back(row);
  index_[row] = id;
  return id;
}

int ComplexBuilder::add_ray(const QVec& direction) {
  require(static_cast<int>(direction.size()) == ambient_, "ray of wrong dimension");
  QVec row(ambient_ + 1, Rational(0));
  IVec prim = primitive(direction);
  for (int i = 0; i < ambient_; ++i) row[i + 1] = Rational(prim[i]);
  auto it = index_.find(row);
  if (it != index_.end()) return it->second;
  const int id = static_cast<int>(vertices_.size());
  vertices_.push_back(row);
  index_[row] = id;
  return id;
}

std::vector<int> ComplexBuilder::add_cell(const VRep& cell) {
  require(!cell.vertices.empty(), "complex cells must be nonempty");
  if (!lineality_set_) {
    lineality_ = cell.lineality;
    lineality_set_ = true;
  } else {
    require(cell.lineality == lineality_, "cells must share one lineality space");
  }
  std::vector<int> ids;
  for (const auto& v : cell.vertices) ids.push_back(add_vertex(v));
  for (const auto& r : cell.rays) ids.push_back(add_ray(r));
  std::sort(ids.begin(), ids.end());
  cells_.push_back(ids);
  return ids;
}

PolyhedralComplex ComplexBuilder::finish() && {
  PolyhedralComplex out;
  out.ambient = ambient_;
  out.vertices = std::move(vertices_);
  out.lineality = std::move(lineality_);
  std::sort(cells_.begin(), cells_.end());
  cells_.erase(std::unique(cells_.begin(), cells_.end()), cells_.end());
  out.cells = std::move(cells_);
  return out;
}

namespace {

// Apply the homogeneity chart and drop the pinned coordinate when present.
VRep chartify(const VRep& cell, bool charted) {
  return charted ? drop_last_coordinate(cell) : cell;
}

}  // namespace

VRep drop_last_coordinate(const VRep& cell) {
  VRep out;
  auto drop = [](const QVec& v) { return QVec(v.begin(), v.end() - 1); };
  for (const auto& v : cell.vertices) {
    ensure(v.back() == 0, "charted vertex has nonzero pinned coordinate");
    out.vertices.push_back(drop(v));
  }
  for (const auto& r : cell.rays) {
    ensure(r.back() == 0, "charted ray has nonzero pinned coordinate");
    out.rays.push_back(drop(r));
  }
  for (const auto& l : cell.lineality) {
    ensure(l.back() == 0, "charted lineality has nonzero pinned coordinate");
    out.lineality.push_back(drop(l));
  }
  return out;
}

PolyhedralComplex normal_complex(const PointConfiguration& p, const QVec& heights) {
  RegularSubdivision s = regular_subdivision(p, heights);
  // maximal dual cells correspond to the inclusion-minimal subdivision faces;
  // no quotient is taken here, homogeneous inputs yield global lineality
  auto faces = subdivision_faces(s);
  ComplexBuilder builder(p.dim);
  for (const auto& f : faces) {
    bool minimal = true;
    for (const auto& g : faces)
      if (f != g && std::includes(f.begin(), f.end(), g.begin(), g.end())) {
        minimal = false;
        break;
      }
    if (minimal) builder.add_cell(dual_cell(p, heights, f));
  }
  return std::move(builder).finish();
}

PolyhedralComplex tight_span(const RegularSubdivision& s) {
  require_induced(s);
  const QMat chart = homogeneity_chart(s.config);
  const bool charted = !chart.empty();
  PolyhedralComplex out;
  out.ambient = charted ? s.config.dim - 1 : s.config.dim;

  // one vertex per maximal cell, in cell order
  for (const auto& cell : s.maximal_cells) {
    VRep dv = chartify(dual_cell(s.config, s.heights, cell, chart), charted);
    require(dv.vertices.size() == 1 && dv.rays.empty() && dv.lineality.empty(),
            "dual of a maximal cell must be a single point");
    QVec row(out.ambient + 1, Rational(1));
    std::copy(dv.vertices[0].begin(), dv.vertices[0].end(), row.begin() + 1);
    out.vertices.push_back(std::move(row));
  }

  // bounded dual faces, named by the maximal cells containing them
  std::set<std::vector<int>> bounded;
  for (const auto& face : subdivision_faces(s)) {
    VRep dv = dual_cell(s.config, s.heights, face, chart);
    if (!dv.rays.empty() || !dv.lineality.empty() || dv.vertices.empty()) continue;
    std::vector<int> names;
    for (std::size_t c = 0; c < s.maximal_cells.size(); ++c)
      if (std::includes(s.maximal_cells[c].begin(), s.maximal_cells[c].end(),
                        face.begin(), face.end()))
        names.push_back(static_cast<int>(c));
    ensure(names.size() == dv.vertices.size(),
           "bounded dual face must be spanned by cell duals");
    bounded.insert(std::move(names));
  }
  // keep the inclusion-maximal ones
  for (const auto& f : bounded) {
    bool maximal = true;
    for (const auto& g : bounded)
      if (f != g && std::includes(g.begin(), g.end(), f.begin(), f.end())) {
        maximal = false;
        break;
      }
    if (maximal) out.cells.push_back(f);
  }
  std::sort(out.cells.begin(), out.cells.end());
  return out;
}

Cone secondary_cone(const RegularSubdivision& s) {
  const PointConfiguration& p = s.config;
  check_config(p);
  require_induced(s);
  const std::size_t m = p.size();

  // Rows are built fraction-free: the barycentric row of each point gets
  // scaled by the Cramer determinant of the cell basis, taken over the raw
  // coordinates when they already span the homogeneous row space and over
  // the homogeneous ones otherwise. Facets keep this scaling.
  QMat homog;
  for (std::size_t i = 0; i < m; ++i) {
    QVec row(p.dim + 1, Rational(1));
    std::copy(p.points[i].begin(), p.points[i].end(), row.begin() + 1);
    homog.push_back(std::move(row));
  }
  const int r = rank(homog);
  const bool use_raw = rank(p.points) == r;
  const QMat& work = use_raw ? p.points : homog;
  std::vector<int> work_cols;
  rref(work, &work_cols);
  auto work_row = [&](int i) {
    QVec out;
    for (int c : work_cols) out.push_back(work[i][c]);
    return out;
  };

  std::set<QVec> ineqs, eqs;
  for (const auto& cell : s.maximal_cells) {
    // affine basis of the cell: independent rows (1, p_i)
    QMat lifted;
    std::vector<int> basis;
    for (int i : cell) {
      QMat probe = lifted;
      probe.push_back(homog[i]);
      if (rank(probe) > static_cast<int>(lifted.size())) {
        lifted.push_back(homog[i]);
        basis.push_back(i);
      }
    }
    QMat square;
    for (int b : basis) square.push_back(work_row(b));
    Rational scale = determinant(square);
    require(scale != 0, "maximal cell does not affinely span the configuration");
    if (scale < 0) scale = -scale;

    std::vector<bool> in_cell(m, false), in_basis(m, false);
    for (int i : cell) in_cell[i] = true;
    for (int i : basis) in_basis[i] = true;
    for (std::size_t j = 0; j < m; ++j) {
      if (in_basis[j]) continue;
      auto lambda = solve_row_combination(lifted, homog[j]);
      require(lambda.has_value(), "maximal cell does not affinely span the configuration");
      QVec row(m, Rational(0));
      row[j] = scale;
      for (std::size_t b = 0; b < basis.size(); ++b) row[basis[b]] -= scale * (*lambda)[b];
      if (in_cell[j])
        eqs.insert(to_rational(primitive_sign_normalized(row)));
      else
        ineqs.insert(row);
    }
  }
  Cone c = cone_from_inequalities(QMat(ineqs.begin(), ineqs.end()),
                                  QMat(eqs.begin(), eqs.end()),
                                  static_cast<int>(m));

  // swap each canonical facet for the first constructed row with the same
  // direction modulo the span equations, restoring the Cramer scaling
  std::vector<int> eq_pivots;
  for (const auto& e : c.equations) {
    int piv = 0;
    while (e[piv] == 0) ++piv;
    eq_pivots.push_back(piv);
  }
  auto reduced_direction = [&](QVec v) {
    for (std::size_t i = 0; i < c.equations.size(); ++i) {
      const Rational f = v[eq_pivots[i]] / c.equations[i][eq_pivots[i]];
      if (f == 0) continue;
      for (std::size_t j = 0; j < v.size(); ++j) v[j] -= f * c.equations[i][j];
    }
    return to_rational(primitive(v));
  };
  for (auto& facet : c.facets) {
    bool found = false;
    for (const auto& row : ineqs)
      if (reduced_direction(row) == facet) {
        facet = row;
        found = true;
        break;
      }
    ensure(found, "facet direction missing from the constructed rows");
  }
  return c;
}

std::vector<std::vector<int>> k_subsets_lex(int n, int k) {
  require(0 <= k && k <= n, "need 0 <= k <= n");
  std::vector<std::vector<int>> out;
  std::vector<int> cur(k);
  for (int i = 0; i < k; ++i) cur[i] = i;
  while (true) {
    out.push_back(cur);
    int i = k - 1;
    while (i >= 0 && cur[i] == n - k + i) --i;
    if (i < 0) break;
    ++cur[i];
    for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  if (k == 0) out = {{}};
  return out;
}

PointConfiguration hypersimplex(int k, int n) {
  require(0 < k && k <= n, "hypersimplex needs 0 < k <= n");
  PointConfiguration p;
  p.dim = n;
  for (const auto& subset : k_subsets_lex(n, k)) {
    QVec v(n, Rational(0));
    for (int i : subset) v[i] = 1;
    p.points.push_back(std::move(v));
  }
  return p;
}

namespace {

Integer simplex_normalized_volume(const QMat& pts) {
  IMat edges;
  for (std::size_t i = 1; i < pts.size(); ++i) {
    IVec e(pts[i].size());
    for (std::size_t j = 0; j < e.size(); ++j) {
      Rational d = pts[i][j] - pts[0][j];
      require(is_integral(d), "lattice volume needs integral points");
      e[j] = Integer(numerator(d));
    }
    edges.push_back(std::move(e));
  }
  auto diag = integer_diagonalize(edges, static_cast<int>(pts[0].size())).diag;
  ensure(diag.size() == pts.size() - 1, "degenerate simplex in triangulation");
  Integer v(1);
  for (const auto& d : diag) v *= d;
  return v;
}

// Pulling triangulation: cone the lexicographically smallest point over the
// recursively triangulated facets avoiding it.
std::vector<QMat> pulling_triangulation(const QMat& pts, int dim) {
  QMat dirs;
  for (std::size_t i = 1; i < pts.size(); ++i) {
    QVec d(pts[i].size());
    for (std::size_t j = 0; j < d.size(); ++j) d[j] = pts[i][j] - pts[0][j];
    dirs.push_back(std::move(d));
  }
  const int affdim = rank(dirs);
  if (static_cast<int>(pts.size()) == affdim + 1) return {pts};

  QVec v0 = *std::min_element(pts.begin(), pts.end());
  VRep v;
  v.vertices = pts;
  HRep h = polyhedron_inequalities(v, dim);
  std::vector<QMat> out;
  for (const auto& row : h.ineqs) {
    Rational at0 = row[0];
    for (int j = 0; j < dim; ++j) at0 += row[j + 1] * v0[j];
    if (at0 == 0) continue;  // facet contains the apex
    QMat facet_pts;
    for (const auto& q : pts) {
      Rational val = row[0];
      for (int j = 0; j < dim; ++j) val += row[j + 1] * q[j];
      if (val == 0) facet_pts.push_back(q);
    }
    for (QMat simplex : pulling_triangulation(facet_pts, dim)) {
      simplex.push_back(v0);
      out.push_back(std::move(simplex));
    }
  }
  ensure(!out.empty(), "pulling triangulation produced no simplices");
  return out;
}

}  // namespace

Integer normalized_volume(const QMat& points) {
  require(!points.empty(), "volume of the empty set is undefined");
  const int dim = static_cast<int>(points[0].size());
  QMat distinct = points;
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  if (distinct.size() == 1) return Integer(1);  // a point has volume 1 (empty product)
  Integer total(0);
  for (const auto& simplex : pulling_triangulation(distinct, dim))
    total += simplex_normalized_volume(simplex);
  return total;
}

bool is_unimodular(const RegularSubdivision& s) {
  for (const auto& cell : s.maximal_cells) {
    QMat pts;
    for (int i : cell) pts.push_back(s.config.points[i]);
    QMat dirs;
    for (std::size_t i = 1; i < pts.size(); ++i) {
      QVec d(pts[i].size());
      for (std::size_t j = 0; j < d.size(); ++j) d[j] = pts[i][j] - pts[0][j];
      dirs.push_back(std::move(d));
    }
    if (static_cast<int>(pts.size()) != rank(dirs) + 1) return false;
    if (simplex_normalized_volume(pts) != 1) return false;
  }
  return true;
}

}  // namespace tropgeo
