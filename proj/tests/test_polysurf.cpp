#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "tropgeo/cycle.hpp"
#include "tropgeo/errors.hpp"
#include "tropgeo/hypersurface.hpp"
#include "tropgeo/polynomial.hpp"

using namespace tropgeo;

namespace {

QVec qv(std::initializer_list<long> v) {
  QVec out;
  for (long x : v) out.push_back(Rational(x));
  return out;
}

IVec iv(std::initializer_list<long> v) {
  IVec out;
  for (long x : v) out.push_back(Integer(x));
  return out;
}

// The running cubic in four unknowns; twenty coefficients on the lattice
// points of the three-fold dilated tetrahedron.
const char* cubic_text() {
  return "min(12+3*x0,-131+2*x0+x1,"
         "-67+2*x0+x2,-9+2*x0+x3,-131+x0+2*x1,-129+x0+x1+x2,"
         "-131+x0+x1+x3,-116+x0+2*x2,-76+x0+x2+x3,-24+x0+2*x3,-95+3*x1,"
         "-108+2*x1+x2,-92+2*x1+x3,-115+x1+2*x2,-117+x1+x2+x3,"
         "-83+x1+2*x3,-119+3*x2,-119+2*x2+x3,-82+x2+2*x3,-36+3*x3)";
}

// The running quartic curve: support 4 times the triangle, fifteen heights.
TropicalPolynomial quartic_polynomial() {
  IMat exps = {iv({0, 0, 4}), iv({1, 0, 3}), iv({0, 1, 3}), iv({2, 0, 2}),
               iv({1, 1, 2}), iv({0, 2, 2}), iv({3, 0, 1}), iv({2, 1, 1}),
               iv({1, 2, 1}), iv({0, 3, 1}), iv({4, 0, 0}), iv({3, 1, 0}),
               iv({2, 2, 0}), iv({1, 3, 0}), iv({0, 4, 0})};
  Rational third = Rational(-1) / 3;
  QVec coeffs = {Rational(6), Rational(0), Rational(3), Rational(1), third,
                 Rational(1), Rational(3), third,       third,       Rational(0),
                 Rational(6), Rational(0), Rational(1), Rational(3), Rational(6)};
  return make_polynomial(3, exps, coeffs);
}

std::vector<std::vector<int>> quartic_triangulation() {
  return {{0, 1, 2},  {1, 2, 5},  {1, 3, 11},  {1, 4, 7},   {1, 4, 9},   {1, 5, 9},
          {1, 7, 11}, {3, 6, 11}, {4, 7, 8},   {4, 8, 9},   {6, 10, 11}, {7, 8, 11},
          {8, 9, 11}, {9, 11, 12}, {9, 12, 13}, {9, 13, 14}};
}

QVec random_point(std::mt19937_64& rng, int dim, long lo = -10, long hi = 10) {
  std::uniform_int_distribution<long> num(lo, hi);
  QVec x;
  for (int i = 0; i < dim; ++i) x.push_back(Rational(num(rng)) / 3);
  return x;
}

std::multiset<Rational> bounded_length_multiset(const std::vector<std::optional<Rational>>& ls) {
  std::multiset<Rational> out;
  for (const auto& l : ls)
    if (l.has_value()) out.insert(*l);
  return out;
}

int node_degree(const MetricGraph& g, int v) {
  int d = 0;
  for (const auto& e : g.edges) d += (e.a == v) + (e.b == v);
  return d;
}

}  // namespace

TEST_CASE("parsing the cubic recovers all twenty terms") {
  TropicalPolynomial f = parse_tropical_polynomial(cubic_text());
  CHECK(f.n_vars == 4);
  CHECK(f.terms.size() == 20);
  CHECK(is_homogeneous(f));
  CHECK(homogeneous_degree(f) == 3);

  CHECK(f.terms[0].exponent == iv({3, 0, 0, 0}));
  CHECK(f.terms[0].coeff == 12);
  CHECK(f.terms[3].exponent == iv({2, 0, 0, 1}));
  CHECK(f.terms[3].coeff == -9);
  CHECK(f.terms[19].exponent == iv({0, 0, 0, 3}));
  CHECK(f.terms[19].coeff == -36);

  // the three cheapest terms at the origin tie at -131
  CHECK(evaluate(f, qv({0, 0, 0, 0})).value() == -131);
  CHECK(argmin_terms(f, qv({0, 0, 0, 0})) == std::vector<int>{1, 4, 6});

  TropicalPolynomial again = parse_tropical_polynomial(to_string(f));
  CHECK(canonicalized(again).terms == canonicalized(f).terms);
}

TEST_CASE("parser corner cases and rejections") {
  TropicalPolynomial c = parse_tropical_polynomial("min(0)");
  CHECK(c.n_vars == 0);
  CHECK(c.terms.size() == 1);
  CHECK(c.terms[0].coeff == 0);

  TropicalPolynomial line = parse_tropical_polynomial("min(x0, x1, 0)");
  CHECK(line.n_vars == 2);
  REQUIRE(line.terms.size() == 3);
  CHECK(line.terms[0].exponent == iv({1, 0}));
  CHECK(line.terms[1].exponent == iv({0, 1}));
  CHECK(line.terms[2].exponent == iv({0, 0}));
  for (const auto& t : line.terms) CHECK(t.coeff == 0);

  TropicalPolynomial frac = parse_tropical_polynomial("min(1/2 + 2*x0, -3/4)");
  CHECK(frac.terms[0].coeff == Rational(1) / 2);
  CHECK(frac.terms[1].coeff == Rational(-3) / 4);

  // repeated exponents collapse tropically, mixed signs accumulate
  CHECK(parse_tropical_polynomial("min(5, 2, 7)").terms.size() == 1);
  CHECK(parse_tropical_polynomial("min(5, 2, 7)").terms[0].coeff == 2);
  TropicalPolynomial acc = parse_tropical_polynomial("min(3*x0-2*x0+1-4)");
  CHECK(acc.terms[0].exponent == iv({1}));
  CHECK(acc.terms[0].coeff == -3);

  TropicalPolynomial padded = parse_tropical_polynomial("min(x0, 0)", 3);
  CHECK(padded.n_vars == 3);
  CHECK(padded.terms[0].exponent == iv({1, 0, 0}));

  CHECK_THROWS_AS(parse_tropical_polynomial("max(x0, 0)"), ParseError);
  CHECK_THROWS_AS(parse_tropical_polynomial("min(x0"), ParseError);
  CHECK_THROWS_AS(parse_tropical_polynomial("min()"), ParseError);
  CHECK_THROWS_AS(parse_tropical_polynomial("hi"), ParseError);
  CHECK_THROWS_AS(parse_tropical_polynomial("min(x0) tail"), ParseError);
  CHECK_THROWS_AS(parse_tropical_polynomial("min(1/2*x0)"), ParseError);
  CHECK_THROWS_AS(parse_tropical_polynomial("min(1/0)"), ParseError);
  CHECK_THROWS_AS(parse_tropical_polynomial("min(x2, 0)", 2), ParseError);
  CHECK_THROWS_AS(parse_tropical_polynomial("min(2**x0)"), ParseError);

  try {
    parse_tropical_polynomial("min(x0, !)");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("position") != std::string::npos);
  }
}

TEST_CASE("products expand the support by Minkowski sums") {
  TropicalPolynomial f = parse_tropical_polynomial("min(x0, 0)");
  TropicalPolynomial sq = polynomial_product(f, f);
  REQUIRE(sq.terms.size() == 3);
  TropicalPolynomial sorted = canonicalized(sq);
  CHECK(sorted.terms[0].exponent == iv({0}));
  CHECK(sorted.terms[0].coeff == 0);
  CHECK(sorted.terms[1].exponent == iv({1}));
  CHECK(sorted.terms[1].coeff == 0);
  CHECK(sorted.terms[2].exponent == iv({2}));
  CHECK(sorted.terms[2].coeff == 0);

  TropicalPolynomial cubic = parse_tropical_polynomial(cubic_text());
  TropicalPolynomial unit = make_polynomial(4, {iv({0, 0, 0, 0})}, {Rational(0)});
  CHECK(canonicalized(polynomial_product(cubic, unit)).terms ==
        canonicalized(cubic).terms);

  CHECK_THROWS_AS(polynomial_product(f, parse_tropical_polynomial("min(x1, 0)")),
                  PreconditionError);

  // the product evaluates to the sum of the factor values everywhere
  TropicalPolynomial g = parse_tropical_polynomial("min(2*x0+x1, -1+x1, 3)");
  TropicalPolynomial h = parse_tropical_polynomial("min(x0, 1+2*x1, -2)");
  TropicalPolynomial gh = polynomial_product(g, h);
  std::mt19937_64 rng(5);
  for (int it = 0; it < 50; ++it) {
    QVec x = random_point(rng, 2);
    CHECK(evaluate(gh, x).value() == evaluate(g, x).value() + evaluate(h, x).value());
  }
}

TEST_CASE("degree bookkeeping") {
  CHECK(homogeneous_degree(parse_tropical_polynomial("min(x0, x1, x2)")) == 1);
  CHECK_FALSE(is_homogeneous(parse_tropical_polynomial("min(x0, 0)")));
  CHECK_THROWS_AS(homogeneous_degree(parse_tropical_polynomial("min(x0, 0)")),
                  PreconditionError);

  Hypersurface v = hypersurface(parse_tropical_polynomial(cubic_text()));
  CHECK(hypersurface_degree(v) == 3);
  CHECK_THROWS_AS(hypersurface_degree(hypersurface(parse_tropical_polynomial("min(x0, 0)"))),
                  PreconditionError);
}

TEST_CASE("the cubic surface is smooth with 27 dual cells") {
  Hypersurface v = hypersurface(parse_tropical_polynomial(cubic_text()));
  CHECK(v.dual_subdivision.maximal_cells.size() == 27);
  CHECK(is_smooth(v));
  CHECK(v.cycle.n == 3);
  CHECK(cycle_dim(v.cycle) == 2);
  for (const auto& w : v.cycle.weights) CHECK(w == 1);
  CHECK(is_balanced(v.cycle));

  // interior points of the walls lie on the surface: the minimum ties there
  const TropicalPolynomial& f = v.polynomial;
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::size_t> pick(0, v.cycle.complex.cells.size() - 1);
  for (int it = 0; it < 20; ++it) {
    VRep cell = cell_vrep(v.cycle.complex, v.cycle.complex.cells[pick(rng)]);
    QVec p = relative_interior_point(cell);
    p.push_back(Rational(0));  // undo the chart
    CHECK(argmin_terms(f, p).size() >= 2);
  }
  // generic points are off the surface and have a unique minimizer
  for (int it = 0; it < 50; ++it) {
    QVec x = random_point(rng, 3, -50, 50);
    QVec lifted = x;
    lifted.push_back(Rational(0));
    CHECK(cycle_contains(v.cycle, x) == (argmin_terms(f, lifted).size() >= 2));
  }
}

TEST_CASE("canonical line and degenerate hypersurfaces") {
  Hypersurface line = hypersurface(parse_tropical_polynomial("min(x0, x1, 0)"));
  CHECK(line.cycle.n == 2);
  REQUIRE(line.cycle.complex.cells.size() == 3);
  std::set<QVec> rays;
  int vertex_count = 0;
  for (const auto& row : line.cycle.complex.vertices) {
    if (row[0] == 1) {
      ++vertex_count;
      CHECK(QVec(row.begin() + 1, row.end()) == qv({0, 0}));
    } else {
      rays.insert(QVec(row.begin() + 1, row.end()));
    }
  }
  CHECK(vertex_count == 1);
  CHECK(rays == std::set<QVec>{qv({-1, -1}), qv({0, 1}), qv({1, 0})});
  for (const auto& w : line.cycle.weights) CHECK(w == 1);
  CHECK(is_balanced(line.cycle));
  CHECK(genus(line) == 0);
  auto lengths = curve_edge_lengths(line);
  CHECK(std::none_of(lengths.begin(), lengths.end(),
                     [](const auto& l) { return l.has_value(); }));
  CHECK_THROWS_AS(skeleton(line), PreconditionError);

  Hypersurface dbl = hypersurface(parse_tropical_polynomial("min(2*x0, 0)"));
  CHECK(dbl.cycle.n == 1);
  REQUIRE(dbl.cycle.complex.cells.size() == 1);
  CHECK(dbl.cycle.complex.vertices == QMat{qv({1, 0})});
  CHECK(dbl.cycle.weights == std::vector<Integer>{Integer(2)});
  CHECK_FALSE(is_smooth(dbl));
  CHECK(is_balanced(dbl.cycle));

  Hypersurface empty = hypersurface(parse_tropical_polynomial("min(0)"));
  CHECK(empty.cycle.complex.cells.empty());

  // support on a segment: the dual wall is a full line with lineality
  Hypersurface wall = hypersurface(parse_tropical_polynomial("min(x0, 0)", 2));
  REQUIRE(wall.cycle.complex.cells.size() == 1);
  CHECK(wall.cycle.complex.lineality.size() == 1);
  CHECK(wall.cycle.weights == std::vector<Integer>{Integer(1)});
  CHECK(is_balanced(wall.cycle));
}

TEST_CASE("homogeneous line in three unknowns quotients to the plane") {
  Hypersurface line = hypersurface(parse_tropical_polynomial("min(x0, x1, x2)"));
  CHECK(hypersurface_degree(line) == 1);
  CHECK(line.cycle.n == 2);
  CHECK(line.cycle.complex.cells.size() == 3);
  CHECK(line.cycle.complex.lineality.empty());
  CHECK(is_balanced(line.cycle));
  auto lengths = curve_edge_lengths(line);
  CHECK(bounded_length_multiset(lengths).empty());
  CHECK(lengths.size() == 3);
  CHECK(genus(line) == 0);
}

TEST_CASE("the quartic curve reproduces the published analytics") {
  Hypersurface c = hypersurface(quartic_polynomial());
  CHECK(hypersurface_degree(c) == 4);
  CHECK(c.dual_subdivision.maximal_cells == quartic_triangulation());
  CHECK(is_smooth(c));
  CHECK(genus(c) == 3);
  CHECK(is_balanced(c.cycle));

  auto lengths = curve_edge_lengths(c);
  CHECK(lengths.size() == 30);
  int infinite = 0;
  for (const auto& l : lengths)
    if (!l.has_value()) ++infinite;
  CHECK(infinite == 12);
  std::multiset<Rational> expected;
  for (int i = 0; i < 9; ++i) expected.insert(Rational(1));
  for (int i = 0; i < 6; ++i) expected.insert(Rational(1) / 3);
  for (int i = 0; i < 3; ++i) expected.insert(Rational(2) / 3);
  CHECK(bounded_length_multiset(lengths) == expected);

  // four rays, counted with weight, in each coordinate direction
  std::map<QVec, Integer> ray_weight;
  const auto& cx = c.cycle.complex;
  for (std::size_t ci = 0; ci < cx.cells.size(); ++ci)
    for (int idx : cx.cells[ci])
      if (cx.vertices[idx][0] == 0)
        ray_weight[QVec(cx.vertices[idx].begin() + 1, cx.vertices[idx].end())] +=
            c.cycle.weights[ci];
  REQUIRE(ray_weight.size() == 3);
  CHECK(ray_weight[qv({1, 0})] == 4);
  CHECK(ray_weight[qv({0, 1})] == 4);
  CHECK(ray_weight[qv({-1, -1})] == 4);
}

TEST_CASE("the quartic skeleton is the honeycomb with its moduli") {
  Hypersurface c = hypersurface(quartic_polynomial());
  MetricGraph essential = essential_subgraph(c);
  CHECK(essential.genus == 3);
  for (std::size_t v = 0; v < essential.nodes.size(); ++v) {
    int d = node_degree(essential, static_cast<int>(v));
    CHECK(d >= 2);
    CHECK(d <= 3);
  }

  MetricGraph s = skeleton(c);
  CHECK(s.genus == 3);
  CHECK(s.nodes.size() == 4);
  CHECK(s.edges.size() == 6);
  for (std::size_t v = 0; v < s.nodes.size(); ++v)
    CHECK(node_degree(s, static_cast<int>(v)) == 3);

  // simple and 3-regular on four nodes forces the complete graph
  std::set<std::pair<int, int>> simple;
  for (const auto& e : s.edges) {
    CHECK(e.a != e.b);
    simple.insert({std::min(e.a, e.b), std::max(e.a, e.b)});
  }
  CHECK(simple.size() == 6);

  std::multiset<Rational> moduli;
  for (const auto& e : s.edges) moduli.insert(e.length);
  std::multiset<Rational> expected;
  for (int i = 0; i < 3; ++i) expected.insert(Rational(4) / 3);
  for (int i = 0; i < 3; ++i) expected.insert(Rational(1) / 3);
  CHECK(moduli == expected);

  // degree-two smoothing keeps the total bounded length
  Rational essential_total(0), moduli_total(0);
  for (const auto& e : essential.edges) essential_total += e.length;
  for (const auto& e : s.edges) moduli_total += e.length;
  CHECK(essential_total == moduli_total);
}

TEST_CASE("degree-two suppression fixes theta graphs and joins paths") {
  MetricGraph theta;
  theta.nodes = {qv({0, 0}), qv({1, 0})};
  theta.edges = {{0, 1, Rational(1)}, {0, 1, Rational(2)}, {0, 1, Rational(3)}};
  theta.genus = metric_graph_genus(theta);
  CHECK(theta.genus == 2);
  MetricGraph same = suppress_degree_two_nodes(theta);
  CHECK(same.nodes.size() == 2);
  CHECK(same.edges.size() == 3);
  CHECK(same.genus == 2);

  MetricGraph path;
  path.nodes = {qv({0, 0}), qv({1, 0}), qv({2, 0})};
  path.edges = {{0, 1, Rational(1) / 2}, {1, 2, Rational(5) / 2}};
  MetricGraph joined = suppress_degree_two_nodes(path);
  CHECK(joined.nodes.size() == 2);
  REQUIRE(joined.edges.size() == 1);
  CHECK(joined.edges[0].length == 3);

  // a cycle through a middle vertex closes into a loop at the survivor
  MetricGraph bigon;
  bigon.nodes = {qv({0, 0}), qv({1, 0}), qv({2, 0})};
  bigon.edges = {{0, 1, Rational(1)}, {1, 2, Rational(1)}, {0, 2, Rational(1)},
                 {0, 1, Rational(4)}};
  MetricGraph sup = suppress_degree_two_nodes(bigon);
  CHECK(metric_graph_genus(sup) == 2);
}

TEST_CASE("conics have genus zero") {
  IMat exps = {iv({2, 0, 0}), iv({1, 1, 0}), iv({0, 2, 0}),
               iv({1, 0, 1}), iv({0, 1, 1}), iv({0, 0, 2})};
  std::mt19937_64 rng(21);
  std::uniform_int_distribution<long> num(-6, 6);
  for (int it = 0; it < 10; ++it) {
    QVec coeffs;
    for (int i = 0; i < 6; ++i) coeffs.push_back(Rational(num(rng)) / 2);
    Hypersurface conic = hypersurface(make_polynomial(3, exps, coeffs));
    CHECK(hypersurface_degree(conic) == 2);
    CHECK(genus(conic) == 0);
    CHECK(is_balanced(conic.cycle));
    CHECK_THROWS_AS(skeleton(conic), PreconditionError);
  }
}

TEST_CASE("random products stay balanced and dual dimensions pair up") {
  std::mt19937_64 rng(33);
  std::uniform_int_distribution<long> num(-4, 4);
  auto random_poly = [&]() {
    IMat exps;
    QVec coeffs;
    std::set<IVec> seen;
    std::uniform_int_distribution<long> e(0, 2);
    for (int t = 0; t < 4; ++t) {
      IVec v = {Integer(e(rng)), Integer(e(rng))};
      if (!seen.insert(v).second) continue;
      exps.push_back(v);
      coeffs.push_back(Rational(num(rng)) / 2);
    }
    return make_polynomial(2, exps, coeffs);
  };
  for (int it = 0; it < 10; ++it) {
    TropicalPolynomial f = random_poly();
    TropicalPolynomial g = random_poly();
    if (f.terms.size() < 2 || g.terms.size() < 2) continue;
    Hypersurface hf = hypersurface(f);
    Hypersurface hp = hypersurface(polynomial_product(f, g));
    CHECK(is_balanced(hf.cycle));
    CHECK(is_balanced(hp.cycle));

    // every wall of the product complex is dual to a subdivision edge
    for (const auto& cell : hp.cycle.complex.cells) {
      VRep v = cell_vrep(hp.cycle.complex, cell);
      CHECK(polyhedron_dim(v) == 1);
    }
  }
}
