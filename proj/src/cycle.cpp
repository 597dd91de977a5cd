#include "tropgeo/cycle.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "tropgeo/errors.hpp"
#include "tropgeo/linalg.hpp"

namespace tropgeo {

void check_cycle(const TropicalCycle& x) {
  require(x.complex.ambient == x.n, "complex ambient differs from the cycle dimension");
  require(x.weights.size() == x.complex.cells.size(), "one weight per maximal cell");
  for (const auto& w : x.weights) require(w != 0, "weights must be nonzero");
  cycle_dim(x);
}

VRep cell_vrep(const PolyhedralComplex& c, const std::vector<int>& cell) {
  VRep v;
  for (int idx : cell) {
    require(idx >= 0 && idx < static_cast<int>(c.vertices.size()),
            "cell vertex index out of range");
    const QVec& row = c.vertices[idx];
    require(static_cast<int>(row.size()) == c.ambient + 1,
            "vertex row of wrong dimension");
    if (row[0] == 1)
      v.vertices.emplace_back(row.begin() + 1, row.end());
    else if (row[0] == 0)
      v.rays.emplace_back(row.begin() + 1, row.end());
    else
      require(false, "vertex rows must lead with 1 (point) or 0 (ray)");
  }
  v.lineality = c.lineality;
  require(!v.vertices.empty(), "cell must contain a finite vertex");
  return v;
}

int cycle_dim(const TropicalCycle& x) {
  int dim = -1;
  for (const auto& cell : x.complex.cells) {
    int d = polyhedron_dim(cell_vrep(x.complex, cell));
    if (dim < 0) dim = d;
    require(d == dim, "cycle complex is not pure");
  }
  return dim;
}

bool cycle_contains(const TropicalCycle& x, const QVec& p) {
  require(static_cast<int>(p.size()) == x.n, "point of wrong dimension");
  for (const auto& cell : x.complex.cells) {
    VRep v = cell_vrep(x.complex, cell);
    if (hrep_contains(polyhedron_inequalities(v, x.n), p)) return true;
  }
  return false;
}

namespace {

// Indices of the cell members lying on the hyperplane of an inequality row.
std::vector<int> tight_subset(const PolyhedralComplex& c, const std::vector<int>& cell,
                              const QVec& ineq) {
  std::vector<int> tight;
  for (int idx : cell) {
    const QVec& row = c.vertices[idx];
    Rational v = row[0] * ineq[0];
    for (int j = 1; j < static_cast<int>(ineq.size()); ++j) v += row[j] * ineq[j];
    if (v == 0) tight.push_back(idx);
  }
  return tight;
}

// Saturated lattice basis of the linear span of a face given by vertex rows.
IMat face_lattice(const PolyhedralComplex& c, const std::vector<int>& face) {
  QMat gens;
  const QVec* base = nullptr;
  for (int idx : face) {
    const QVec& row = c.vertices[idx];
    if (row[0] == 1) {
      if (!base) {
        base = &row;
        continue;
      }
      QVec d(c.ambient);
      for (int j = 0; j < c.ambient; ++j) d[j] = row[j + 1] - (*base)[j + 1];
      gens.push_back(std::move(d));
    } else {
      gens.push_back(QVec(row.begin() + 1, row.end()));
    }
  }
  for (const auto& l : c.lineality) gens.push_back(l);
  IMat igens;
  for (const auto& g : gens)
    if (rank(QMat{g}) == 1) igens.push_back(primitive(g));
  return saturation(igens, c.ambient);
}

QVec face_interior_point(const PolyhedralComplex& c, const std::vector<int>& face) {
  VRep v = cell_vrep(c, face);
  return relative_interior_point(v);
}

// Primitive generator of the rank-one quotient of the sigma lattice by the
// tau lattice, oriented from tau toward sigma.
IVec primitive_normal(const IMat& sigma_lat, const IMat& tau_lat, const QVec& toward,
                      int n) {
  const int k = static_cast<int>(sigma_lat.size());
  QMat sigma_q;
  for (const auto& r : sigma_lat) sigma_q.push_back(to_rational(r));

  IMat coords;  // tau basis written in sigma coordinates
  for (const auto& t : tau_lat) {
    auto sol = solve_row_combination(sigma_q, to_rational(t));
    ensure(sol.has_value(), "face lattice not contained in the cell lattice");
    IVec crow;
    for (const auto& q : *sol) {
      ensure(is_integral(q), "saturated face lattice has fractional coordinates");
      crow.push_back(numerator(q));
    }
    coords.push_back(std::move(crow));
  }

  IMat kernel = integer_kernel(coords, k);
  ensure(kernel.size() == 1, "cell/face lattice quotient must have rank one");
  IVec phi = kernel[0];

  auto dir = solve_row_combination(sigma_q, toward);
  ensure(dir.has_value(), "direction must lie in the cell span");
  Rational side(0);
  for (int i = 0; i < k; ++i) side += Rational(phi[i]) * (*dir)[i];
  ensure(side != 0, "direction lies in the face span");
  if (side < 0)
    for (auto& e : phi) e = -e;

  // any lattice vector with functional value one generates the quotient
  auto diag = integer_diagonalize(IMat{phi}, k);
  IVec u(k);
  for (int i = 0; i < k; ++i) u[i] = diag.right[i][0];
  Integer val(0);
  for (int i = 0; i < k; ++i) val += phi[i] * u[i];
  ensure(val == 1 || val == -1, "functional is not primitive");
  if (val == -1)
    for (auto& e : u) e = -e;

  IVec out(n, Integer(0));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < n; ++j) out[j] += u[i] * sigma_lat[i][j];
  return out;
}

}  // namespace

bool is_balanced(const TropicalCycle& x) {
  check_cycle(x);
  const int k = cycle_dim(x);
  if (k <= 0) return true;
  const PolyhedralComplex& c = x.complex;

  // codimension-one faces, each with its incident maximal cells
  std::map<std::vector<int>, std::set<int>> incident;
  std::vector<HRep> hreps;
  for (std::size_t ci = 0; ci < c.cells.size(); ++ci) {
    VRep v = cell_vrep(c, c.cells[ci]);
    HRep h = polyhedron_inequalities(v, c.ambient);
    hreps.push_back(h);
    for (const auto& ineq : h.ineqs) {
      auto tight = tight_subset(c, c.cells[ci], ineq);
      if (tight.empty()) continue;
      incident[tight].insert(static_cast<int>(ci));
    }
  }

  for (const auto& [tau, cells] : incident) {
    IMat tau_lat = face_lattice(c, tau);
    if (static_cast<int>(tau_lat.size()) != k - 1) continue;  // lower face of a ridge
    QVec tau_pt = face_interior_point(c, tau);

    QVec sum(c.ambient, Rational(0));
    for (int ci : cells) {
      IMat sigma_lat = face_lattice(c, c.cells[ci]);
      ensure(static_cast<int>(sigma_lat.size()) == k, "maximal cell of wrong rank");
      QVec sigma_pt = face_interior_point(c, c.cells[ci]);
      QVec toward(c.ambient);
      for (int j = 0; j < c.ambient; ++j) toward[j] = sigma_pt[j] - tau_pt[j];
      IVec u = primitive_normal(sigma_lat, tau_lat, toward, c.ambient);
      for (int j = 0; j < c.ambient; ++j) sum[j] += Rational(x.weights[ci] * u[j]);
    }

    QMat span;
    for (const auto& r : tau_lat) span.push_back(to_rational(r));
    const int base_rank = rank(span);
    span.push_back(sum);
    if (rank(span) != base_rank) return false;
  }
  return true;
}

LocalFan star_fan(const TropicalCycle& x, const QVec& p) {
  check_cycle(x);
  require(static_cast<int>(p.size()) == x.n, "point of wrong dimension");
  LocalFan f;
  f.base = p;
  for (std::size_t ci = 0; ci < x.complex.cells.size(); ++ci) {
    VRep v = cell_vrep(x.complex, x.complex.cells[ci]);
    HRep h = polyhedron_inequalities(v, x.n);
    if (!hrep_contains(h, p)) continue;
    QMat ineqs, eqs;
    for (const auto& row : h.ineqs) {
      Rational val = row[0];
      for (int j = 0; j < x.n; ++j) val += row[j + 1] * p[j];
      if (val == 0) ineqs.push_back(QVec(row.begin() + 1, row.end()));
    }
    for (const auto& row : h.eqs) eqs.push_back(QVec(row.begin() + 1, row.end()));
    f.cones.push_back(cone_from_inequalities(ineqs, eqs, x.n));
    f.weights.push_back(x.weights[ci]);
  }
  require(!f.cones.empty(), "point not in the support");
  return f;
}

std::vector<std::vector<int>> complex_faces(const PolyhedralComplex& c) {
  std::set<std::vector<int>> faces;
  for (const auto& cell : c.cells) {
    std::vector<int> sorted = cell;
    std::sort(sorted.begin(), sorted.end());
    VRep v = cell_vrep(c, cell);
    HRep h = polyhedron_inequalities(v, c.ambient);
    for (const auto& ineq : h.ineqs) {
      auto tight = tight_subset(c, sorted, ineq);
      if (!tight.empty() && tight != sorted) faces.insert(tight);
    }
    faces.insert(std::move(sorted));
  }

  // faces are intersections of facets, so close under meets
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<std::vector<int>> snapshot(faces.begin(), faces.end());
    for (std::size_t i = 0; i < snapshot.size(); ++i)
      for (std::size_t j = i + 1; j < snapshot.size(); ++j) {
        std::vector<int> meet;
        std::set_intersection(snapshot[i].begin(), snapshot[i].end(),
                              snapshot[j].begin(), snapshot[j].end(),
                              std::back_inserter(meet));
        if (!meet.empty() && faces.insert(meet).second) grew = true;
      }
  }
  return {faces.begin(), faces.end()};
}

PolyhedralComplex bounded_complex(const PolyhedralComplex& c) {
  PolyhedralComplex out;
  out.ambient = c.ambient;
  out.vertices = c.vertices;
  if (!c.lineality.empty()) return out;  // nothing is bounded

  std::vector<std::vector<int>> bounded;
  for (const auto& face : complex_faces(c)) {
    bool fin = true;
    for (int idx : face)
      if (c.vertices[idx][0] == 0) fin = false;
    if (fin) bounded.push_back(face);
  }
  for (const auto& f : bounded) {
    bool maximal = true;
    for (const auto& g : bounded)
      if (f != g && std::includes(g.begin(), g.end(), f.begin(), f.end()))
        maximal = false;
    if (maximal) out.cells.push_back(f);
  }
  std::sort(out.cells.begin(), out.cells.end());
  return out;
}

PolyhedralComplex bounded_complex(const TropicalCycle& x) {
  check_cycle(x);
  return bounded_complex(x.complex);
}

}  // namespace tropgeo
