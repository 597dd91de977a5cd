#include "tropgeo/linspace.hpp"

#include <algorithm>
#include <set>

#include "tropgeo/errors.hpp"

namespace tropgeo {

namespace {

bool covers_ground_set(const std::vector<std::vector<int>>& bases,
                       const std::vector<int>& face, int n) {
  std::vector<char> hit(n, 0);
  for (int idx : face)
    for (int e : bases[idx]) hit[e] = 1;
  return std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; });
}

// The linear space lives at the negated argmin, so every dual cell is
// reflected through the origin.
VRep reflected(VRep cell) {
  for (auto& v : cell.vertices)
    for (auto& x : v) x = -x;
  for (auto& r : cell.rays)
    for (auto& x : r) x = -x;
  return cell;
}

}  // namespace

bool is_matroidal(const RegularSubdivision& s,
                  const std::vector<std::vector<int>>& point_bases) {
  require(point_bases.size() == s.config.size(),
          "every configuration point needs a basis label");
  for (std::size_t i = 0; i < point_bases.size(); ++i) {
    QVec indicator(s.config.dim, Rational(0));
    for (int e : point_bases[i]) {
      require(0 <= e && e < s.config.dim, "basis label out of range");
      indicator[e] = 1;
    }
    require(indicator == s.config.points[i], "point is not its label's indicator");
  }
  for (const auto& cell : s.maximal_cells) {
    std::vector<std::vector<int>> family;
    for (int idx : cell) family.push_back(point_bases[idx]);
    if (!check_basis_exchange_axiom(family)) return false;
  }
  return true;
}

ValuatedMatroid valuated_matroid(Matroid m, QVec valuation) {
  require(valuation.size() == m.bases.size(), "one valuation entry per basis");
  RegularSubdivision s = regular_subdivision(matroid_polytope(m), valuation);
  require(is_matroidal(s, m.bases), "valuation does not induce a matroidal subdivision");
  return {std::move(m), std::move(valuation)};
}

ValuatedMatroid trivial_valuation(const Matroid& m) {
  return valuated_matroid(m, QVec(m.bases.size(), Rational(0)));
}

RegularSubdivision basis_subdivision(const ValuatedMatroid& vm) {
  return regular_subdivision(matroid_polytope(vm.matroid), vm.valuation);
}

TropicalCycle linear_space(const ValuatedMatroid& vm) {
  const Matroid& m = vm.matroid;
  require(m.n >= 1, "empty ground set");
  PointConfiguration p = matroid_polytope(m);
  RegularSubdivision s = regular_subdivision(p, vm.valuation);
  const QMat chart = homogeneity_chart(p);

  TropicalCycle out;
  out.n = m.n - 1;
  out.complex.ambient = out.n;

  std::vector<std::vector<int>> loopfree;
  for (const auto& face : subdivision_faces(s))
    if (covers_ground_set(m.bases, face, m.n)) loopfree.push_back(face);
  if (loopfree.empty()) return out;

  ComplexBuilder builder(out.n);
  for (const auto& face : loopfree) {
    bool minimal = true;
    for (const auto& other : loopfree)
      if (other != face &&
          std::includes(face.begin(), face.end(), other.begin(), other.end()))
        minimal = false;
    if (!minimal) continue;
    VRep cell = reflected(dual_cell(p, vm.valuation, face, chart));
    builder.add_cell(drop_last_coordinate(cell));
  }
  out.complex = std::move(builder).finish();
  out.weights.assign(out.complex.cells.size(), Integer(1));
  return out;
}

TropicalCycle bergman_fan_from_flats(const Matroid& m) {
  require(m.n >= 1, "empty ground set");
  require(is_loopfree(m), "matroid has loops");
  FlatLattice lattice = lattice_of_flats(m);

  ComplexBuilder builder(m.n - 1);
  for (const auto& chain : maximal_proper_chains(lattice)) {
    VRep cell;
    cell.vertices.push_back(QVec(m.n - 1, Rational(0)));
    for (int flat : chain) {
      std::vector<char> in(m.n, 0);
      for (int e : lattice.flats[flat]) in[e] = 1;
      QVec ray(m.n - 1);
      for (int i = 0; i + 1 < m.n; ++i) ray[i] = Rational(in[i] - in[m.n - 1]);
      cell.rays.push_back(std::move(ray));
    }
    builder.add_cell(cell);
  }

  TropicalCycle out;
  out.n = m.n - 1;
  out.complex = std::move(builder).finish();
  out.weights.assign(out.complex.cells.size(), Integer(1));
  return out;
}

}  // namespace tropgeo
