#include "tropgeo/intersection.hpp"

#include <cstddef>
#include <map>
#include <random>
#include <set>
#include <tuple>
#include <utility>
#include <vector>

#include "tropgeo/errors.hpp"
#include "tropgeo/geometry.hpp"
#include "tropgeo/linspace.hpp"
#include "tropgeo/matroid.hpp"

namespace tropgeo {

namespace {

// {x : facets x >= 0, equations x = 0} shifted so the apex sits at v.
HRep cone_hrep(const Cone& c, const QVec& v) {
  HRep h;
  auto shifted = [&](const QVec& row) {
    QVec out(row.size() + 1, Rational(0));
    for (std::size_t j = 0; j < row.size(); ++j) {
      out[j + 1] = row[j];
      out[0] -= row[j] * v[j];
    }
    return out;
  };
  for (const auto& row : c.facets) h.ineqs.push_back(shifted(row));
  for (const auto& row : c.equations) h.eqs.push_back(shifted(row));
  return h;
}

VRep intersect_hreps(const HRep& a, const HRep& b, int n) {
  HRep both = a;
  both.ineqs.insert(both.ineqs.end(), b.ineqs.begin(), b.ineqs.end());
  both.eqs.insert(both.eqs.end(), b.eqs.begin(), b.eqs.end());
  return polyhedron_vertices(both, n);
}

// Saturated lattice of the cone's linear span.
IMat span_lattice(const Cone& c, int n) {
  IMat rows;
  for (const auto& r : c.rays) rows.push_back(primitive(r));
  for (const auto& r : c.lineality) rows.push_back(primitive(r));
  return saturation(rows, n);
}

bool spans_ambient(const Cone& a, const Cone& b, int n) {
  QMat span;
  span.insert(span.end(), a.rays.begin(), a.rays.end());
  span.insert(span.end(), a.lineality.begin(), a.lineality.end());
  span.insert(span.end(), b.rays.begin(), b.rays.end());
  span.insert(span.end(), b.lineality.begin(), b.lineality.end());
  return rank(span) == n;
}

QVec draw_displacement(std::mt19937_64& rng, int n) {
  std::uniform_int_distribution<long long> box(-1000000, 1000000);
  QVec v(n);
  for (int i = 0; i < n; ++i) v[i] = Rational(Integer(box(rng)), Integer(1000000));
  return v;
}

// Fan displacement rule at one candidate cell: sum over the star cone pairs
// that still touch after shifting the second star by v. Cones are scale
// invariant, so the size of v does not matter, only its direction class.
// Returns false when the draw is revealed non-generic: a touching pair whose
// spans do not fill the ambient space, or a meet that is not a single
// transversal coset through both relative interiors.
bool cell_multiplicity(const LocalFan& sx, const LocalFan& sy, const QVec& v,
                       int n, int d, Integer* out) {
  const QVec origin(n, Rational(0));
  Integer total = 0;
  for (std::size_t i = 0; i < sx.cones.size(); ++i) {
    const HRep hc = cone_hrep(sx.cones[i], origin);
    for (std::size_t j = 0; j < sy.cones.size(); ++j) {
      const Cone& c = sx.cones[i];
      const Cone& t = sy.cones[j];
      VRep meet = intersect_hreps(hc, cone_hrep(t, v), n);
      if (meet.empty()) continue;
      if (!spans_ambient(c, t, n)) return false;
      if (meet.vertices.size() != 1 || !meet.rays.empty()) return false;
      if (polyhedron_dim(meet) != d) return false;
      const QVec& q = meet.vertices[0];
      if (cone_membership(c, q).where != Position::Interior) return false;
      QVec back = q;
      for (int a = 0; a < n; ++a) back[a] -= v[a];
      if (cone_membership(t, back).where != Position::Interior) return false;
      total += sx.weights[i] * sy.weights[j] *
               lattice_index(span_lattice(c, n), span_lattice(t, n), n);
    }
  }
  *out = total;
  return true;
}

}  // namespace

Integer lattice_index(const IMat& basis1, const IMat& basis2, int n) {
  IMat stacked = basis1;
  stacked.insert(stacked.end(), basis2.begin(), basis2.end());
  return lattice_index(stacked, n);
}

TropicalCycle stable_intersection(const TropicalCycle& x,
                                  const TropicalCycle& y,
                                  unsigned long seed) {
  check_cycle(x);
  check_cycle(y);
  require(x.n == y.n, "cycles live in different ambient spaces");
  const int n = x.n;
  TropicalCycle out;
  out.n = n;
  out.complex.ambient = n;
  if (x.complex.cells.empty() || y.complex.cells.empty()) return out;
  const int d = cycle_dim(x) + cycle_dim(y) - n;
  if (d < 0) return out;

  std::vector<HRep> hx, hy;
  for (const auto& cell : x.complex.cells)
    hx.push_back(polyhedron_inequalities(cell_vrep(x.complex, cell), n));
  for (const auto& cell : y.complex.cells)
    hy.push_back(polyhedron_inequalities(cell_vrep(y.complex, cell), n));

  // Candidate top cells: pairwise cell intersections of the target
  // dimension. These tile the support because distinct intersections of
  // complex cells only meet along shared faces.
  std::vector<VRep> candidates;
  std::set<std::tuple<QMat, QMat, QMat>> seen;
  for (const auto& a : hx)
    for (const auto& b : hy) {
      VRep g = intersect_hreps(a, b, n);
      if (g.empty() || polyhedron_dim(g) != d) continue;
      if (seen.insert({g.vertices, g.rays, g.lineality}).second)
        candidates.push_back(std::move(g));
    }
  if (candidates.empty()) return out;

  std::vector<LocalFan> sx, sy;
  for (const auto& cand : candidates) {
    const QVec p = relative_interior_point(cand);
    sx.push_back(star_fan(x, p));
    sy.push_back(star_fan(y, p));
  }

  std::mt19937_64 rng(seed);
  std::vector<Integer> mult(candidates.size());
  bool generic = false;
  for (int attempt = 0; attempt < 20 && !generic; ++attempt) {
    const QVec v = draw_displacement(rng, n);
    generic = true;
    for (std::size_t c = 0; c < candidates.size() && generic; ++c)
      generic = cell_multiplicity(sx[c], sy[c], v, n, d, &mult[c]);
  }
  ensure(generic, "no generic displacement found");

  ComplexBuilder builder(n);
  std::map<std::vector<int>, Integer> weight_of;
  for (std::size_t c = 0; c < candidates.size(); ++c) {
    if (mult[c] == 0) continue;
    auto ids = builder.add_cell(candidates[c]);
    auto [it, fresh] = weight_of.emplace(std::move(ids), mult[c]);
    ensure(fresh, "two candidate cells coincide");
  }
  out.complex = std::move(builder).finish();
  for (const auto& cell : out.complex.cells)
    out.weights.push_back(weight_of.at(cell));
  return out;
}

Integer degree(const TropicalCycle& x) {
  require(is_balanced(x), "cycle is not balanced");
  Integer total = 0;
  if (x.complex.cells.empty()) return total;
  const int k = cycle_dim(x);
  if (k == 0) {
    for (const auto& w : x.weights) total += w;
    return total;
  }
  const TropicalCycle line =
      bergman_fan_from_flats(uniform_matroid(x.n - k + 1, x.n + 1));
  const TropicalCycle cut = stable_intersection(x, line);
  for (const auto& w : cut.weights) total += w;
  return total;
}

}  // namespace tropgeo
