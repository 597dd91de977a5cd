#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <initializer_list>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "tropgeo/auction.hpp"
#include "tropgeo/cli.hpp"
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

using namespace tropgeo;
namespace fs = std::filesystem;

namespace {

QVec qv(std::initializer_list<long> v) {
  QVec out;
  for (long x : v) out.push_back(Rational(x));
  return out;
}

// Serialize, parse, serialize again; the second pass must be a fixpoint.
Json reparsed(const Json& e) {
  const std::string kind = e.at("kind").get<std::string>();
  if (kind == "matrix") return matrix_envelope(matrix_from_envelope(e));
  if (kind == "polynomial") return polynomial_envelope(polynomial_from_envelope(e));
  if (kind == "subdivision") return subdivision_envelope(subdivision_from_envelope(e));
  if (kind == "cone") return cone_envelope(cone_from_envelope(e));
  if (kind == "matroid") return matroid_envelope(matroid_from_envelope(e));
  if (kind == "valuated_matroid")
    return valuated_matroid_envelope(valuated_matroid_from_envelope(e));
  if (kind == "cycle") return cycle_envelope(cycle_from_envelope(e));
  if (kind == "auction") return auction_envelope(auction_from_envelope(e));
  if (kind == "metric_graph") return metric_graph_envelope(metric_graph_from_envelope(e));
  FAIL("unknown kind ", kind);
  return Json();
}

void check_fixpoint(const Json& e) {
  const Json once = reparsed(e);
  CHECK(once == e);
  CHECK(once.dump(2) == e.dump(2));
}

RegularSubdivision collinear_subdivision() {
  PointConfiguration p;
  p.dim = 1;
  p.points = {qv({0}), qv({1}), qv({2})};
  return regular_subdivision(p, qv({0, -1, 0}));
}

AuctionInstance two_agent_auction() {
  AuctionInstance a;
  a.goods = 2;
  AgentUtility first;
  first.bundles = {{Integer(0), Integer(0)},
                   {Integer(0), Integer(1)},
                   {Integer(0), Integer(2)},
                   {Integer(1), Integer(2)}};
  first.utilities = qv({0, 3, 5, 9});
  AgentUtility second;
  second.bundles = {{Integer(0), Integer(0)}, {Integer(1), Integer(0)}, {Integer(0), Integer(1)}};
  second.utilities = qv({0, 1, 1});
  a.agents = {first, second};
  return a;
}

MetricGraph triangle_graph() {
  MetricGraph g;
  g.nodes = {qv({0, 0}), qv({1, 0}), qv({0, 1})};
  g.edges = {{0, 1, Rational(1)}, {1, 2, Rational(1) / 2}, {0, 2, Rational(3) / 2}};
  g.genus = 1;
  return g;
}

TropicalCycle diagonal_line() {
  ComplexBuilder builder(2);
  VRep cell;
  cell.vertices.push_back(qv({0, 0}));
  cell.lineality.push_back(qv({1, 1}));
  builder.add_cell(cell);
  TropicalCycle out;
  out.n = 2;
  out.complex = std::move(builder).finish();
  out.weights = {Integer(1)};
  return out;
}

// Lattice points of [0,3] x [0,2] lifted by i^2 + j^2: the dual curve is a
// two-by-three ladder of unit squares, so the skeleton is a theta graph.
TropicalPolynomial genus_two_polynomial() {
  IMat exponents;
  QVec coeffs;
  for (long i = 0; i <= 3; ++i)
    for (long j = 0; j <= 2; ++j) {
      exponents.push_back({Integer(i), Integer(j)});
      coeffs.push_back(Rational(i * i + j * j));
    }
  return make_polynomial(2, exponents, coeffs);
}

struct CliRun {
  int code = 0;
  std::string out;
};

CliRun run(std::vector<std::string> args, const std::string& input = "") {
  args.insert(args.begin(), "tropgeo");
  std::vector<char*> argv;
  argv.reserve(args.size());
  for (auto& a : args) argv.push_back(a.data());
  std::istringstream fed(input);
  std::ostringstream captured;
  std::streambuf* old_in = std::cin.rdbuf(fed.rdbuf());
  std::streambuf* old_out = std::cout.rdbuf(captured.rdbuf());
  CliRun r;
  r.code = run_cli(static_cast<int>(argv.size()), argv.data());
  std::cout.rdbuf(old_out);
  std::cin.rdbuf(old_in);
  std::cin.clear();
  r.out = captured.str();
  return r;
}

fs::path scratch_file(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "tropgeo-cli-tests";
  fs::create_directories(dir);
  return dir / name;
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

}  // namespace

TEST_CASE("matrix envelopes round-trip, infinity included") {
  const Json rows = Json::parse(R"([["inf","3"],["-5/2","0"]])");
  const TropicalMinMatrix m = matrix_from_envelope(make_envelope("matrix", rows));
  CHECK(m.at(0, 0).is_infinite());
  CHECK(m.at(1, 0).value() == Rational(-5) / 2);
  const Json e = matrix_envelope(m);
  CHECK(matrix_from_envelope(e) == m);
  check_fixpoint(e);
}

TEST_CASE("polynomial envelopes round-trip") {
  IMat exponents = {{Integer(2), Integer(0)}, {Integer(1), Integer(1)}, {Integer(0), Integer(0)}};
  const TropicalPolynomial f =
      make_polynomial(2, exponents, {Rational(-1) / 3, Rational(5), Rational(0)});
  const Json e = polynomial_envelope(f);
  const TropicalPolynomial g = polynomial_from_envelope(e);
  CHECK(g.n_vars == f.n_vars);
  CHECK(g.terms == f.terms);
  check_fixpoint(e);
}

TEST_CASE("subdivision envelopes round-trip") {
  const RegularSubdivision s = collinear_subdivision();
  const Json e = subdivision_envelope(s);
  const RegularSubdivision t = subdivision_from_envelope(e);
  CHECK(t.maximal_cells == s.maximal_cells);
  CHECK(t.heights == s.heights);
  CHECK(t.config.points == s.config.points);
  check_fixpoint(e);
}

TEST_CASE("cone envelopes round-trip and keep stored facet scalings") {
  const Cone quadrant = cone_from_generators({qv({1, 0}), qv({0, 1})}, {}, 2);
  check_fixpoint(cone_envelope(quadrant));

  const Cone with_lineality = cone_from_generators({qv({1, 0})}, {qv({0, 1})}, 2);
  CHECK(cone_from_envelope(cone_envelope(with_lineality)).lineality.size() == 1);
  check_fixpoint(cone_envelope(with_lineality));

  // Secondary cones carry height-difference facets at a meaningful scale;
  // loading must hand back the stored rows, not a primitive rescaling.
  const Cone secondary = secondary_cone(collinear_subdivision());
  const Json e = cone_envelope(secondary);
  CHECK(cone_from_envelope(e).facets == secondary.facets);
  check_fixpoint(e);
}

TEST_CASE("matroid envelopes round-trip") {
  const Matroid m = fano_matroid();
  const Json e = matroid_envelope(m);
  const Matroid back = matroid_from_envelope(e);
  CHECK(back.n == m.n);
  CHECK(back.rank == m.rank);
  CHECK(back.bases == m.bases);
  check_fixpoint(e);
}

TEST_CASE("valuated matroid envelopes round-trip") {
  const ValuatedMatroid v =
      valuated_matroid(uniform_matroid(1, 2), {Rational(0), Rational(1) / 2});
  const Json e = valuated_matroid_envelope(v);
  const ValuatedMatroid back = valuated_matroid_from_envelope(e);
  CHECK(back.matroid.bases == v.matroid.bases);
  CHECK(back.valuation == v.valuation);
  check_fixpoint(e);
}

TEST_CASE("cycle envelopes round-trip, with and without lineality") {
  const TropicalCycle line = hypersurface(parse_tropical_polynomial("min(x0,x1,0)")).cycle;
  const Json e = cycle_envelope(line);
  const TropicalCycle back = cycle_from_envelope(e);
  CHECK(back.n == line.n);
  CHECK(back.weights == line.weights);
  CHECK(back.complex.vertices == line.complex.vertices);
  CHECK(back.complex.cells == line.complex.cells);
  check_fixpoint(e);

  const TropicalCycle diag = diagonal_line();
  const Json f = cycle_envelope(diag);
  CHECK(cycle_from_envelope(f).complex.lineality == diag.complex.lineality);
  check_fixpoint(f);
}

TEST_CASE("auction envelopes round-trip") {
  const AuctionInstance a = two_agent_auction();
  const Json e = auction_envelope(a);
  const AuctionInstance back = auction_from_envelope(e);
  CHECK(back.goods == a.goods);
  REQUIRE(back.agents.size() == a.agents.size());
  for (std::size_t i = 0; i < a.agents.size(); ++i) {
    CHECK(back.agents[i].bundles == a.agents[i].bundles);
    CHECK(back.agents[i].utilities == a.agents[i].utilities);
  }
  check_fixpoint(e);
}

TEST_CASE("metric graph envelopes round-trip and recompute the genus") {
  const MetricGraph g = triangle_graph();
  const Json e = metric_graph_envelope(g);
  const MetricGraph back = metric_graph_from_envelope(e);
  CHECK(back.genus == 1);
  CHECK(back.nodes == g.nodes);
  REQUIRE(back.edges.size() == g.edges.size());
  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    CHECK(back.edges[i].a == g.edges[i].a);
    CHECK(back.edges[i].b == g.edges[i].b);
    CHECK(back.edges[i].length == g.edges[i].length);
  }
  check_fixpoint(e);
}

TEST_CASE("json files round-trip through disk") {
  const fs::path path = scratch_file("roundtrip.json");
  const Json e = matroid_envelope(uniform_matroid(2, 4));
  write_json_file(path.string(), e);
  CHECK(read_json_file(path.string()) == e);
  CHECK_THROWS_AS(read_json_file((path / "nope").string()), ParseError);
  CHECK_THROWS_AS(write_json_file((path / "nope").string(), e), ParseError);
}

TEST_CASE("envelopes reject the wrong shell") {
  const Json e = matrix_envelope(matrix_from_envelope(
      make_envelope("matrix", Json::parse("[[0]]"))));
  CHECK_THROWS_AS(polynomial_from_envelope(e), ParseError);

  Json wrong_version = e;
  wrong_version["version"] = "2";
  CHECK_THROWS_AS(matrix_from_envelope(wrong_version), ParseError);

  CHECK_THROWS_AS(matrix_from_envelope(make_envelope("matrix", Json::object())), ParseError);
  CHECK_THROWS_AS(matrix_from_envelope(make_envelope("matrix", Json::parse(R"([["zz"]])"))),
                  ParseError);
  CHECK_THROWS_AS(matrix_from_envelope(make_envelope("matrix", Json::parse(R"([[0,1],[2]])"))),
                  ParseError);
}

TEST_CASE("loaders catch tampered payloads") {
  Json subdivision = subdivision_envelope(collinear_subdivision());
  subdivision["payload"]["maximal_cells"] = Json::parse("[[0,2]]");
  CHECK_THROWS_AS(subdivision_from_envelope(subdivision), ParseError);

  Json valuated = valuated_matroid_envelope(
      valuated_matroid(uniform_matroid(1, 2), {Rational(0), Rational(1)}));
  std::swap(valuated["payload"]["matroid"]["bases"][0],
            valuated["payload"]["matroid"]["bases"][1]);
  CHECK_THROWS_AS(valuated_matroid_from_envelope(valuated), ParseError);

  const Json line = cycle_envelope(hypersurface(parse_tropical_polynomial("min(x0,x1,0)")).cycle);
  Json bad_lead = line;
  bad_lead["payload"]["vertices"][0][0] = "2";
  CHECK_THROWS_AS(cycle_from_envelope(bad_lead), ParseError);
  Json bad_cell = line;
  bad_cell["payload"]["maximal_cells"] = Json::parse("[[0,99]]");
  CHECK_THROWS_AS(cycle_from_envelope(bad_cell), ParseError);

  Json graph = metric_graph_envelope(triangle_graph());
  graph["payload"]["edges"][0]["length"] = "0";
  CHECK_THROWS_AS(metric_graph_from_envelope(graph), ParseError);
}

TEST_CASE("loaders re-run the semantic checks") {
  Json payload;
  payload["n"] = 4;
  payload["bases"] = Json::parse("[[0,1],[2,3]]");
  CHECK_THROWS_AS(matroid_from_envelope(make_envelope("matroid", payload)), PreconditionError);

  Json auction = auction_envelope(two_agent_auction());
  auction["payload"]["agents"][0]["bundles"][1] = auction["payload"]["agents"][0]["bundles"][0];
  CHECK_THROWS_AS(auction_from_envelope(auction), PreconditionError);
}

TEST_CASE("cli: tdet prints the value and an optimal permutation") {
  CliRun r = run({"tdet", "--matrix", "[[1,2,3],[1,2,4],[1,0,1]]"});
  CHECK(r.code == 0);
  CHECK(r.out == "4 <0 1 2>\n");

  CHECK(run({"tdet", "--matrix", R"([[0,"inf"],["inf",0]])"}).out == "0 <0 1>\n");
  CHECK(run({"tdet", "--matrix", R"([["inf"]])"}).out == "inf\n");
}

TEST_CASE("cli: kleene star matches the shortest-path closure") {
  CliRun r = run({"kleene", "--matrix", "[[1,2,3],[1,2,4],[1,0,1]]"});
  REQUIRE(r.code == 0);
  const TropicalMinMatrix closure = matrix_from_envelope(
      make_envelope("matrix", Json::parse("[[0,2,3],[1,0,4],[1,0,0]]")));
  CHECK(matrix_from_envelope(Json::parse(r.out)) == closure);
}

TEST_CASE("cli: hypersurface output feeds degree through stdin") {
  CliRun surface = run({"hypersurface", "--poly", "min(x0,x1,0)"});
  REQUIRE(surface.code == 0);
  CHECK(Json::parse(surface.out).at("kind") == "cycle");

  CliRun deg = run({"degree", "-"}, surface.out);
  CHECK(deg.code == 0);
  CHECK(deg.out == "1\n");

  CliRun again = run({"hypersurface", "--poly", "min(x0,x1,0)"});
  CHECK(again.out == surface.out);
}

TEST_CASE("cli: auction equilibria lists dual cell counts per bundle") {
  const std::string envelope = auction_envelope(two_agent_auction()).dump();
  CliRun r = run({"auction", "equilibria", "-"}, envelope);
  CHECK(r.code == 0);
  CHECK(r.out ==
        "0 0: 2\n0 1: 2\n0 2: 2\n0 3: 1\n1 0: 1\n1 1: 0\n1 2: 5\n1 3: 2\n2 2: 2\n");
}

TEST_CASE("cli: matroid subcommands") {
  const std::string u24 = matroid_envelope(uniform_matroid(2, 4)).dump();
  CHECK(run({"matroid", "check", "-"}, u24).out == "matroid on 4 elements, rank 2, 6 bases\n");

  const std::string pair = matroid_envelope(
      direct_sum(uniform_matroid(1, 2), uniform_matroid(1, 2))).dump();
  CHECK(run({"matroid", "tutte", "-"}, pair).out == "0 2 1\n1 1 2\n2 0 1\n");

  CliRun flats = run({"matroid", "flats", "-"}, matroid_envelope(uniform_matroid(2, 3)).dump());
  CHECK(flats.code == 0);
  std::vector<std::string> got = lines_of(flats.out);
  std::vector<std::string> want = {"{}: 0", "{0}: 1", "{1}: 1", "{2}: 1", "{0 1 2}: 2"};
  std::sort(got.begin(), got.end());
  std::sort(want.begin(), want.end());
  CHECK(got == want);
}

TEST_CASE("cli: cone membership certificate") {
  const std::string quadrant =
      cone_envelope(cone_from_generators({qv({1, 0}), qv({0, 1})}, {}, 2)).dump();
  CliRun inside = run({"cone-membership", "-", "--point", "[1,1]"}, quadrant);
  CHECK(inside.code == 0);
  CHECK(inside.out == "interior\nfacet products: 1 1\nequation residuals:\n");

  CHECK(lines_of(run({"cone-membership", "-", "--point", "[0,1]"}, quadrant).out).front() ==
        "boundary");
  CHECK(lines_of(run({"cone-membership", "-", "--point", "[-1,2]"}, quadrant).out).front() ==
        "outside");
}

TEST_CASE("cli: tight span of a path subdivision") {
  const std::string envelope = subdivision_envelope(collinear_subdivision()).dump();
  CliRun r = run({"tight-span", "-"}, envelope);
  CHECK(r.code == 0);
  CHECK(r.out == "{0 1}\n");
}

TEST_CASE("cli: skeleton of a genus-two curve is a theta graph") {
  const fs::path poly = scratch_file("genus2.json");
  write_json_file(poly.string(), polynomial_envelope(genus_two_polynomial()));
  CliRun r = run({"curve", "skeleton", poly.string()});
  REQUIRE(r.code == 0);
  const MetricGraph sk = metric_graph_from_envelope(Json::parse(r.out));
  CHECK(sk.genus == 2);
  CHECK(sk.nodes.size() == 2);
  REQUIRE(sk.edges.size() == 3);
  QVec lengths;
  for (const auto& e : sk.edges) lengths.push_back(e.length);
  std::sort(lengths.begin(), lengths.end());
  CHECK(lengths == qv({2, 6, 6}));
}

TEST_CASE("cli: stable intersection agrees with the library and a fixed seed") {
  const TropicalCycle a = hypersurface(parse_tropical_polynomial("min(x0,x1,0)")).cycle;
  const TropicalCycle b = hypersurface(parse_tropical_polynomial("min(3+x0,1+x1,0)")).cycle;
  const fs::path pa = scratch_file("line_a.json");
  const fs::path pb = scratch_file("line_b.json");
  write_json_file(pa.string(), cycle_envelope(a));
  write_json_file(pb.string(), cycle_envelope(b));

  CliRun r = run({"intersect", pa.string(), pb.string(), "--seed", "5"});
  REQUIRE(r.code == 0);
  const Json expect = cycle_envelope(stable_intersection(a, b, 5));
  CHECK(r.out == expect.dump(2) + "\n");

  const TropicalCycle meet = cycle_from_envelope(Json::parse(r.out));
  CHECK(meet.weights == std::vector<Integer>{Integer(1)});
  CHECK(meet.complex.cells.size() == 1);

  CliRun again = run({"intersect", pa.string(), pb.string(), "--seed", "5"});
  CHECK(again.out == r.out);
}

TEST_CASE("cli: --output writes the envelope to a file instead of stdout") {
  const fs::path out = scratch_file("closure.json");
  CliRun r = run({"kleene", "--matrix", "[[0,7],[1,0]]", "--output", out.string()});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  CHECK(read_json_file(out.string()).at("kind") == "matrix");
}

TEST_CASE("cli: exit codes separate parse, precondition, and check failures") {
  CHECK(run({"tdet", "--matrix", "notjson"}).code == 1);
  CHECK(run({"tdet", "-"}, "").code == 1);
  CHECK(run({"frobnicate"}).code == 1);
  CHECK(run({"--help"}).code == 0);

  CHECK(run({"tdet", "--matrix", "[[1,2]]"}).code == 2);
  CHECK(run({"matroid", "check", "-"},
            matroid_envelope(uniform_matroid(2, 4)).dump().replace(0, 0, "")).code == 0);
  Json bad;
  bad["n"] = 4;
  bad["bases"] = Json::parse("[[0,1],[2,3]]");
  CHECK(run({"matroid", "check", "-"}, make_envelope("matroid", bad).dump()).code == 2);
  CHECK(run({"curve", "skeleton", "--poly", "min(x0,x1,0)"}).code == 2);

  CHECK(run({"reproduce-paper", "--only", "zzz", "--examples", "."}).code == 1);

  const fs::path empty = fs::temp_directory_path() / "tropgeo-cli-tests" / "empty-examples";
  fs::create_directories(empty);
  CliRun skipped = run({"reproduce-paper", "--examples", empty.string()});
  CHECK(skipped.code == 3);
  CHECK(skipped.out.find("skipped") != std::string::npos);
}
