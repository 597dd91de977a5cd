// Python bindings. The envelope-valued operations speak JSON text on both
// sides so the checked loaders stay the single source of validation; scalar
// results cross as exact strings or plain ints.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <utility>
#include <vector>

#include "tropgeo/auction.hpp"
#include "tropgeo/cone.hpp"
#include "tropgeo/cycle.hpp"
#include "tropgeo/errors.hpp"
#include "tropgeo/geometry.hpp"
#include "tropgeo/hypersurface.hpp"
#include "tropgeo/intersection.hpp"
#include "tropgeo/json_io.hpp"
#include "tropgeo/linspace.hpp"
#include "tropgeo/matroid.hpp"
#include "tropgeo/polynomial.hpp"
#include "tropgeo/tropical.hpp"

namespace py = pybind11;
using namespace tropgeo;

namespace {

Json parse_text(const std::string& text, const std::string& what) {
  Json j = Json::parse(text, nullptr, false);
  if (j.is_discarded()) throw ParseError("invalid JSON in " + what);
  return j;
}

// Accepts a matrix envelope or bare row arrays.
TropicalMinMatrix matrix_arg(const std::string& src) {
  Json j = parse_text(src, "matrix");
  if (j.is_array()) return matrix_from_envelope(make_envelope("matrix", std::move(j)));
  return matrix_from_envelope(j);
}

// Accepts a polynomial envelope or polynomial text like "min(x0,x1,0)".
TropicalPolynomial polynomial_arg(const std::string& src) {
  const auto start = src.find_first_not_of(" \t\r\n");
  if (start != std::string::npos && src[start] == '{')
    return polynomial_from_envelope(parse_text(src, "polynomial"));
  return parse_tropical_polynomial(src);
}

RegularSubdivision subdivision_arg(const std::string& src) {
  const auto start = src.find_first_not_of(" \t\r\n");
  if (start == std::string::npos || src[start] != '{')
    return hypersurface(parse_tropical_polynomial(src)).dual_subdivision;
  Json j = parse_text(src, "subdivision");
  const std::string kind = j.value("kind", "");
  if (kind == "polynomial")
    return hypersurface(polynomial_from_envelope(j)).dual_subdivision;
  if (kind == "valuated_matroid") return basis_subdivision(valuated_matroid_from_envelope(j));
  return subdivision_from_envelope(j);
}

long long small_int(const Integer& z) { return z.convert_to<long long>(); }

py::tuple bundle_key(const IVec& b) {
  py::tuple key(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) key[i] = small_int(b[i]);
  return key;
}

std::string envelope_text(const Json& e) { return e.dump(2); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "exact min-plus tropical geometry kernel";

  py::register_exception<InvariantError>(m, "InvariantError", PyExc_RuntimeError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);

  m.def(
      "tdet",
      [](const std::string& matrix) -> py::object {
        const auto d = tdet(matrix_arg(matrix));
        if (d.value.is_infinite()) return py::make_tuple("inf", py::none());
        return py::make_tuple(to_string(d.value.value()), *d.permutation);
      },
      py::arg("matrix"),
      "Tropical determinant of a square matrix: (value, optimal permutation).");

  m.def(
      "kleene_star",
      [](const std::string& matrix) { return envelope_text(matrix_envelope(kleene_star(matrix_arg(matrix)))); },
      py::arg("matrix"), "Min-plus closure I + A + A^2 + ... as a matrix envelope.");

  m.def(
      "hypersurface_cycle",
      [](const std::string& polynomial) {
        return envelope_text(cycle_envelope(hypersurface(polynomial_arg(polynomial)).cycle));
      },
      py::arg("polynomial"), "Weighted hypersurface cycle of a min polynomial.");

  m.def(
      "dual_subdivision",
      [](const std::string& polynomial) {
        return envelope_text(
            subdivision_envelope(hypersurface(polynomial_arg(polynomial)).dual_subdivision));
      },
      py::arg("polynomial"), "Regular subdivision of the support induced by the coefficients.");

  m.def(
      "hypersurface_properties",
      [](const std::string& polynomial) {
        const Hypersurface h = hypersurface(polynomial_arg(polynomial));
        py::dict out;
        out["homogeneous"] = h.homogeneous;
        out["degree"] = h.homogeneous ? py::object(py::int_(small_int(h.degree))) : py::none();
        out["maximal_cells"] = h.dual_subdivision.maximal_cells.size();
        out["smooth"] = is_unimodular(h.dual_subdivision);
        out["genus"] = genus(h);
        return out;
      },
      py::arg("polynomial"), "Degree, smoothness, cell count, and genus of a hypersurface.");

  m.def(
      "secondary_cone",
      [](const std::string& subdivision) {
        return envelope_text(cone_envelope(secondary_cone(subdivision_arg(subdivision))));
      },
      py::arg("subdivision"),
      "Closure of the height vectors inducing the subdivision, as a cone envelope.");

  m.def(
      "cone_membership",
      [](const std::string& cone, const std::vector<std::string>& point) {
        QVec x;
        for (const auto& c : point) x.push_back(parse_rational(c));
        const ConeMembership r =
            cone_membership(cone_from_envelope(parse_text(cone, "cone")), x);
        py::dict out;
        out["position"] = r.where == Position::Interior
                              ? "interior"
                              : r.where == Position::Boundary ? "boundary" : "outside";
        std::vector<std::string> products, residuals;
        for (const auto& q : r.facet_products) products.push_back(to_string(q));
        for (const auto& q : r.equation_residuals) residuals.push_back(to_string(q));
        out["facet_products"] = products;
        out["equation_residuals"] = residuals;
        return out;
      },
      py::arg("cone"), py::arg("point"),
      "Locate a point relative to a cone, with the facet-value certificate.");

  m.def(
      "tight_span",
      [](const std::string& subdivision) { return tight_span(subdivision_arg(subdivision)).cells; },
      py::arg("subdivision"), "Maximal faces of the tight span as dual-vertex index sets.");

  m.def(
      "matroid_properties",
      [](const std::string& matroid) {
        const Matroid g = matroid_from_envelope(parse_text(matroid, "matroid"));
        py::dict out;
        out["n"] = g.n;
        out["rank"] = g.rank;
        out["bases"] = g.bases.size();
        out["loopfree"] = is_loopfree(g);
        return out;
      },
      py::arg("matroid"), "Ground-set size, rank, basis count, and loop-freeness.");

  m.def(
      "tutte_polynomial",
      [](const std::string& matroid) {
        py::dict out;
        for (const auto& [powers, coeff] :
             tutte_polynomial(matroid_from_envelope(parse_text(matroid, "matroid"))).coeffs)
          out[py::make_tuple(powers.first, powers.second)] = small_int(coeff);
        return out;
      },
      py::arg("matroid"), "Tutte polynomial as {(x power, y power): coefficient}.");

  m.def(
      "matroid_flats",
      [](const std::string& matroid) {
        const FlatLattice l = lattice_of_flats(matroid_from_envelope(parse_text(matroid, "matroid")));
        std::vector<std::pair<std::vector<int>, int>> out;
        for (std::size_t i = 0; i < l.flats.size(); ++i) out.emplace_back(l.flats[i], l.ranks[i]);
        return out;
      },
      py::arg("matroid"), "All flats with their ranks.");

  m.def(
      "linear_space",
      [](const std::string& valuated_matroid) {
        return envelope_text(cycle_envelope(
            linear_space(valuated_matroid_from_envelope(parse_text(valuated_matroid, "valuated matroid")))));
      },
      py::arg("valuated_matroid"), "Tropical linear space of a valuated matroid.");

  m.def(
      "bergman_fan",
      [](const std::string& matroid) {
        return envelope_text(
            cycle_envelope(bergman_fan_from_flats(matroid_from_envelope(parse_text(matroid, "matroid")))));
      },
      py::arg("matroid"), "Bergman fan built from the lattice of flats.");

  m.def(
      "stable_intersection",
      [](const std::string& first, const std::string& second, unsigned long seed) {
        return envelope_text(cycle_envelope(
            stable_intersection(cycle_from_envelope(parse_text(first, "first cycle")),
                                cycle_from_envelope(parse_text(second, "second cycle")), seed)));
      },
      py::arg("first"), py::arg("second"), py::arg("seed") = 0,
      "Stable intersection of two cycles; any generic seed gives the same cycle.");

  m.def(
      "degree",
      [](const std::string& cycle) {
        return small_int(degree(cycle_from_envelope(parse_text(cycle, "cycle"))));
      },
      py::arg("cycle"), "Intersection-theoretic degree of a balanced cycle.");

  m.def(
      "competitive_equilibria",
      [](const std::string& auction) {
        py::dict out;
        for (const auto& [b, count] :
             competitive_equilibria(auction_from_envelope(parse_text(auction, "auction"))))
          out[bundle_key(b)] = count;
        return out;
      },
      py::arg("auction"), "Dual-cell count per aggregate bundle; zero marks a failure point.");

  m.def(
      "curve_skeleton",
      [](const std::string& polynomial) {
        return envelope_text(
            metric_graph_envelope(skeleton(hypersurface(polynomial_arg(polynomial)))));
      },
      py::arg("polynomial"), "Metric skeleton of a plane curve of genus at least two.");
}
