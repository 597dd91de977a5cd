#include "tropgeo/cli.hpp"

#include <filesystem>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "tropgeo/errors.hpp"
#include "tropgeo/intersection.hpp"
#include "tropgeo/json_io.hpp"

namespace tropgeo {

namespace {

namespace fs = std::filesystem;

Json parse_json_text(const std::string& text, const std::string& what) {
  Json j = Json::parse(text, nullptr, false);
  if (j.is_discarded()) throw ParseError("invalid JSON in " + what);
  return j;
}

// Envelope input: a file path, or "-" / nothing for standard input.
Json read_input(const std::string& path) {
  if (path.empty() || path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return parse_json_text(ss.str(), "standard input");
  }
  return read_json_file(path);
}

void emit(const Json& envelope, const std::string& output) {
  if (output.empty())
    std::cout << envelope.dump(2) << "\n";
  else
    write_json_file(output, envelope);
}

std::string kind_of(const Json& envelope) {
  if (!envelope.is_object() || !envelope.contains("kind") || !envelope.at("kind").is_string())
    throw ParseError("input is not an object envelope");
  return envelope.at("kind").get<std::string>();
}

TropicalMinMatrix matrix_input(const std::string& inline_text, const std::string& file) {
  if (!inline_text.empty()) {
    Json payload = parse_json_text(inline_text, "--matrix");
    return matrix_from_envelope(make_envelope("matrix", std::move(payload)));
  }
  return matrix_from_envelope(read_input(file));
}

TropicalPolynomial polynomial_input(const std::string& poly_text, const std::string& file) {
  if (!poly_text.empty()) return parse_tropical_polynomial(poly_text);
  return polynomial_from_envelope(read_input(file));
}

// Accepts a subdivision envelope directly, or a polynomial envelope whose
// dual subdivision is meant.
RegularSubdivision subdivision_input(const std::string& file) {
  Json e = read_input(file);
  std::string kind = kind_of(e);
  if (kind == "polynomial") return hypersurface(polynomial_from_envelope(e)).dual_subdivision;
  return subdivision_from_envelope(e);
}

std::string set_text(const std::vector<int>& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += " ";
    out += std::to_string(s[i]);
  }
  return out + "}";
}

// ---- golden reproduction of the published outputs -----------------------

// Failed comparisons surface as plain runtime errors; the driver turns them
// into per-check report lines.
void expect(bool cond, const std::string& what) {
  if (!cond) throw std::runtime_error(what);
}

const char* kMatrixFile = "listing2_matrix.json";
const char* kAuctionFile = "tran_yu_ex2.json";
const char* kCubicFile = "cubic_surface.json";
const char* kQuarticFile = "plane_quartic.json";
const char* kPlueckerFile = "plucker_vector.json";
const char* kFanoFile = "fano_matroid.json";
const char* kTutteFile = "parallel_pair_sum.json";

TropicalMinMatrix shortest_path_closure() {
  TropicalMinMatrix m(3, 3);
  long rows[3][3] = {{0, 2, 3}, {1, 0, 4}, {1, 0, 0}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m.at(i, j) = TropicalMin(rows[i][j]);
  return m;
}

IVec bundle(std::initializer_list<long> v) {
  IVec out;
  for (long x : v) out.push_back(Integer(x));
  return out;
}

std::multiset<Rational> facet_product_multiset(const ConeMembership& m) {
  return {m.facet_products.begin(), m.facet_products.end()};
}

struct Check {
  std::string id;
  std::vector<std::string> needs;
  std::function<void(const fs::path&)> run;
};

std::vector<Check> paper_checks() {
  std::vector<Check> checks;

  checks.push_back({"listing1_arithmetic", {}, [](const fs::path&) {
    TropicalMin a(3), b(5), c(8);
    expect((a * c).value() == 11, "3*8 != 11");
    expect((b * c).value() == 13, "5*8 != 13");
    expect(((a + b) * c).value() == 11, "(3+5)*8 != 11");
    expect((a * TropicalMin()).is_infinite(), "3*inf is finite");
  }});

  checks.push_back({"listing2_kleene_star", {kMatrixFile}, [](const fs::path& dir) {
    TropicalMinMatrix a = matrix_from_envelope(read_json_file((dir / kMatrixFile).string()));
    TropicalMinMatrix i = TropicalMinMatrix::identity(3);
    TropicalMinMatrix want = shortest_path_closure();
    expect(i + a == want, "I + A is off");
    expect(i + a + a * a == want, "I + A + A*A is off");
    expect(kleene_star(a) == want, "Kleene star is off");
  }});

  checks.push_back({"listing3_tropical_determinant", {kMatrixFile}, [](const fs::path& dir) {
    TropicalMinMatrix a = matrix_from_envelope(read_json_file((dir / kMatrixFile).string()));
    auto d = tdet(a);
    expect(!d.value.is_infinite() && d.value.value() == 4, "value != 4");
    expect(d.permutation.has_value() && *d.permutation == std::vector<int>{0, 1, 2},
           "optimal permutation is not the identity");
  }});

  checks.push_back({"listing4_agent_polynomials", {kAuctionFile}, [](const fs::path& dir) {
    AuctionInstance a = auction_from_envelope(read_json_file((dir / kAuctionFile).string()));
    expect(a.agents.size() == 2, "expected two agents");
    TropicalPolynomial f1 = agent_polynomial(a.agents[0]);
    IMat want1 = {bundle({3, 0, 0}), bundle({2, 0, 1}), bundle({1, 0, 2}), bundle({0, 1, 2})};
    QVec coeffs1 = {Rational(0), Rational(-3), Rational(-5), Rational(-9)};
    expect(f1.terms.size() == 4, "agent 1 term count");
    for (int t = 0; t < 4; ++t) {
      expect(f1.terms[t].exponent == want1[t], "agent 1 support is off");
      expect(f1.terms[t].coeff == coeffs1[t], "agent 1 coefficients are off");
    }
    TropicalPolynomial f2 = agent_polynomial(a.agents[1]);
    IMat want2 = {bundle({1, 0, 0}), bundle({0, 1, 0}), bundle({0, 0, 1})};
    QVec coeffs2 = {Rational(0), Rational(-1), Rational(-1)};
    expect(f2.terms.size() == 3, "agent 2 term count");
    for (int t = 0; t < 3; ++t) {
      expect(f2.terms[t].exponent == want2[t], "agent 2 support is off");
      expect(f2.terms[t].coeff == coeffs2[t], "agent 2 coefficients are off");
    }
  }});

  checks.push_back({"listing5_product_hypersurface", {kAuctionFile}, [](const fs::path& dir) {
    AuctionInstance a = auction_from_envelope(read_json_file((dir / kAuctionFile).string()));
    TropicalPolynomial f =
        polynomial_product(agent_polynomial(a.agents[0]), agent_polynomial(a.agents[1]));
    std::set<IVec> support;
    for (const auto& t : f.terms)
      support.insert(IVec(t.exponent.begin() + 1, t.exponent.end()));
    std::set<IVec> sums;
    for (const auto& b1 : a.agents[0].bundles)
      for (const auto& b2 : a.agents[1].bundles) {
        IVec s(b1.size());
        for (std::size_t k = 0; k < s.size(); ++k) s[k] = b1[k] + b2[k];
        sums.insert(s);
      }
    expect(support == sums, "product support is not the bundle sumset");
    expect(support.size() == 9, "expected nine aggregate bundles");
  }});

  checks.push_back({"listing6_competitive_equilibria", {kAuctionFile}, [](const fs::path& dir) {
    AuctionInstance a = auction_from_envelope(read_json_file((dir / kAuctionFile).string()));
    std::map<IVec, int> want = {
        {bundle({0, 0}), 2}, {bundle({0, 1}), 2}, {bundle({0, 2}), 2},
        {bundle({0, 3}), 1}, {bundle({1, 0}), 1}, {bundle({1, 1}), 0},
        {bundle({1, 2}), 5}, {bundle({1, 3}), 2}, {bundle({2, 2}), 2}};
    std::map<IVec, int> got = competitive_equilibria(a);
    expect(got == want, "cell counts per bundle are off");
    for (const auto& [b, c] : got)
      expect((c == 0) == (b == bundle({1, 1})), "(1,1) must be the only failure");
  }});

  checks.push_back({"quartic_triangulation", {kQuarticFile}, [](const fs::path& dir) {
    TropicalPolynomial f = polynomial_from_envelope(read_json_file((dir / kQuarticFile).string()));
    Hypersurface h = hypersurface(f);
    expect(h.dual_subdivision.maximal_cells.size() == 16, "expected sixteen triangles");
    expect(is_unimodular(h.dual_subdivision), "triangulation is not unimodular");
  }});

  checks.push_back({"secondary_cone", {kQuarticFile}, [](const fs::path& dir) {
    TropicalPolynomial f = polynomial_from_envelope(read_json_file((dir / kQuarticFile).string()));
    RegularSubdivision s = hypersurface(f).dual_subdivision;
    Cone sc = secondary_cone(s);
    expect(sc.rays.size() == 12, "expected twelve rays");
    std::multiset<std::size_t> counts;
    for (const auto& ray : sc.rays)
      counts.insert(regular_subdivision(s.config, ray).maximal_cells.size());
    std::multiset<std::size_t> want = {2, 2, 2, 2, 2, 2, 2, 2, 2, 3, 3, 3};
    expect(counts == want, "coarsest subdivisions must split into nine 2-splits and three 3-splits");
  }});

  checks.push_back({"curve_certificate", {kQuarticFile}, [](const fs::path& dir) {
    TropicalPolynomial f = polynomial_from_envelope(read_json_file((dir / kQuarticFile).string()));
    RegularSubdivision s = hypersurface(f).dual_subdivision;
    ConeMembership m = cone_membership(secondary_cone(s), s.heights);
    expect(m.where == Position::Interior, "heights are not interior");
    std::multiset<Rational> want;
    for (int k = 0; k < 6; ++k) want.insert(Rational(4));
    for (int k = 0; k < 3; ++k) want.insert(Rational(8) / 3);
    for (int k = 0; k < 3; ++k) want.insert(Rational(4) / 3);
    expect(facet_product_multiset(m) == want, "facet products are off");
    expect(m.equation_residuals.empty(), "secondary cone should be full-dimensional");
  }});

  checks.push_back({"curve_degree_genus", {kQuarticFile}, [](const fs::path& dir) {
    TropicalPolynomial f = polynomial_from_envelope(read_json_file((dir / kQuarticFile).string()));
    Hypersurface h = hypersurface(f);
    expect(h.degree == 4, "degree != 4");
    expect(genus(h) == 3, "genus != 3");
  }});

  checks.push_back({"curve_moduli", {kQuarticFile}, [](const fs::path& dir) {
    TropicalPolynomial f = polynomial_from_envelope(read_json_file((dir / kQuarticFile).string()));
    Hypersurface h = hypersurface(f);
    auto lengths = curve_edge_lengths(h);
    expect(lengths.size() == 30, "expected thirty curve edges");
    int unbounded = 0;
    std::multiset<Rational> bounded;
    for (const auto& l : lengths)
      l ? (void)bounded.insert(*l) : (void)++unbounded;
    expect(unbounded == 12, "expected twelve unbounded edges");
    std::multiset<Rational> want;
    for (int k = 0; k < 9; ++k) want.insert(Rational(1));
    for (int k = 0; k < 6; ++k) want.insert(Rational(1) / 3);
    for (int k = 0; k < 3; ++k) want.insert(Rational(2) / 3);
    expect(bounded == want, "bounded edge lengths are off");

    MetricGraph sk = skeleton(h);
    expect(sk.nodes.size() == 4 && sk.edges.size() == 6, "skeleton is not 4 nodes / 6 edges");
    expect(sk.genus == 3, "skeleton genus != 3");
    std::multiset<Rational> moduli;
    for (const auto& e : sk.edges) moduli.insert(e.length);
    std::multiset<Rational> want_moduli;
    for (int k = 0; k < 3; ++k) want_moduli.insert(Rational(4) / 3);
    for (int k = 0; k < 3; ++k) want_moduli.insert(Rational(1) / 3);
    expect(moduli == want_moduli, "skeleton moduli are off");
  }});

  checks.push_back({"cubic_surface", {kCubicFile}, [](const fs::path& dir) {
    TropicalPolynomial f = polynomial_from_envelope(read_json_file((dir / kCubicFile).string()));
    expect(f.terms.size() == 20, "expected twenty terms");
    expect(is_homogeneous(f) && homogeneous_degree(f) == 3, "not homogeneous of degree three");
    Hypersurface h = hypersurface(f);
    expect(h.dual_subdivision.maximal_cells.size() == 27, "expected twenty-seven cells");
    expect(is_smooth(h), "surface is not smooth");
    expect(h.degree == 3, "degree != 3");
  }});

  checks.push_back({"tight_span", {kPlueckerFile}, [](const fs::path& dir) {
    ValuatedMatroid vm =
        valuated_matroid_from_envelope(read_json_file((dir / kPlueckerFile).string()));
    RegularSubdivision s = basis_subdivision(vm);
    expect(s.maximal_cells.size() == 6, "expected six cells");
    PolyhedralComplex ts = tight_span(s);
    expect(ts.cells.size() == 3, "expected three maximal faces");
    std::vector<std::vector<int>> faces = ts.cells;
    std::sort(faces.begin(), faces.end(),
              [](const auto& a, const auto& b) { return a.size() < b.size(); });
    expect(faces[0].size() == 2 && faces[1].size() == 2 && faces[2].size() == 4,
           "faces are not two edges and a quadrilateral");
    std::vector<int> meet01, meet02, meet12;
    std::set_intersection(faces[0].begin(), faces[0].end(), faces[1].begin(), faces[1].end(),
                          std::back_inserter(meet01));
    std::set_intersection(faces[0].begin(), faces[0].end(), faces[2].begin(), faces[2].end(),
                          std::back_inserter(meet02));
    std::set_intersection(faces[1].begin(), faces[1].end(), faces[2].begin(), faces[2].end(),
                          std::back_inserter(meet12));
    expect(meet01.empty() && meet02.size() == 1 && meet12.size() == 1 && meet02 != meet12,
           "edges must hang off distinct corners of the quadrilateral");
    std::set<int> all;
    for (const auto& face : faces) all.insert(face.begin(), face.end());
    expect(all == std::set<int>{0, 1, 2, 3, 4, 5}, "faces must cover all six cells");
  }});

  checks.push_back({"matroid_subdivision", {kPlueckerFile}, [](const fs::path& dir) {
    ValuatedMatroid vm =
        valuated_matroid_from_envelope(read_json_file((dir / kPlueckerFile).string()));
    RegularSubdivision s = basis_subdivision(vm);
    expect(is_matroidal(s, vm.matroid.bases), "a cell fails the exchange axiom");
  }});

  checks.push_back({"linear_space", {kPlueckerFile}, [](const fs::path& dir) {
    ValuatedMatroid vm =
        valuated_matroid_from_envelope(read_json_file((dir / kPlueckerFile).string()));
    TropicalCycle ls = linear_space(vm);
    expect(ls.n == 5 && cycle_dim(ls) == 2, "expected a plane in five dimensions");
    expect(is_balanced(ls), "linear space is not balanced");
    for (const auto& w : ls.weights) expect(w == 1, "weights must all be one");
    PolyhedralComplex bounded = bounded_complex(ls);
    std::vector<std::size_t> sizes;
    for (const auto& c : bounded.cells) sizes.push_back(c.size());
    std::sort(sizes.begin(), sizes.end());
    expect(sizes == std::vector<std::size_t>{2, 2, 4},
           "bounded part is not a quadrilateral with two antennas");
    std::set<int> used;
    for (const auto& c : bounded.cells) used.insert(c.begin(), c.end());
    expect(used.size() == 6, "expected six bounded vertices");
  }});

  checks.push_back({"bergman_fan", {kFanoFile}, [](const fs::path& dir) {
    Matroid m = matroid_from_envelope(read_json_file((dir / kFanoFile).string()));
    TropicalCycle flats = bergman_fan_from_flats(m);
    expect(flats.complex.cells.size() == 21, "flats fan must have twenty-one cones");
    TropicalCycle trivial = linear_space(trivial_valuation(m));
    expect(trivial.complex.cells.size() == 21,
           "trivially valuated linear space must have twenty-one cells");
    expect(maximal_proper_chains(lattice_of_flats(m)).size() == 21,
           "expected twenty-one maximal chains of proper flats");
  }});

  checks.push_back({"tutte_polynomial", {kTutteFile}, [](const fs::path& dir) {
    Matroid m = matroid_from_envelope(read_json_file((dir / kTutteFile).string()));
    BivariatePolynomial t = tutte_polynomial(m);
    BivariatePolynomial want;
    want.coeffs[{2, 0}] = 1;
    want.coeffs[{1, 1}] = 2;
    want.coeffs[{0, 2}] = 1;
    expect(t == want, "Tutte polynomial is not x^2 + 2xy + y^2");
  }});

  checks.push_back({"self_intersection", {kCubicFile}, [](const fs::path& dir) {
    TropicalPolynomial f = polynomial_from_envelope(read_json_file((dir / kCubicFile).string()));
    TropicalCycle v = hypersurface(f).cycle;
    TropicalCycle vv = stable_intersection(v, v);
    TropicalCycle vvv = stable_intersection(vv, v);
    expect(cycle_dim(vvv) == 0, "triple self-intersection must be points");
    Integer total = 0;
    for (const auto& w : vvv.weights) total += w;
    expect(total == 27, "total intersection weight != 27");
    expect(degree(v) == 3, "degree != 3");
  }});

  return checks;
}

int reproduce(const std::string& dir_text, const std::string& only) {
  fs::path dir(dir_text);
  bool matched = false;
  int bad = 0;
  for (const auto& check : paper_checks()) {
    if (!only.empty() && check.id.find(only) == std::string::npos) continue;
    matched = true;
    std::vector<std::string> missing;
    for (const auto& f : check.needs)
      if (!fs::exists(dir / f)) missing.push_back((dir / f).string());
    if (!missing.empty()) {
      std::cout << check.id << ": skipped (missing " << missing.front() << ")\n";
      ++bad;
      continue;
    }
    try {
      check.run(dir);
      std::cout << check.id << ": pass\n";
    } catch (const std::exception& e) {
      std::cout << check.id << ": FAIL (" << e.what() << ")\n";
      ++bad;
    }
  }
  if (!matched) throw ParseError("no reproduction check matches '" + only + "'");
  return bad ? 3 : 0;
}

}  // namespace

int run_cli(int argc, char** argv) {
  CLI::App app{"exact min-plus tropical geometry toolkit"};
  app.require_subcommand(1);

  struct {
    std::string matrix, file, second, poly, output, point, only;
    std::string examples = "examples";
    unsigned long seed = 0;
  } opt;
  int code = 0;

  auto add_output = [&](CLI::App* cmd) {
    cmd->add_option("--output", opt.output, "write the result envelope to this file");
  };

  auto* tdet_cmd = app.add_subcommand("tdet", "tropical determinant with an optimal permutation");
  tdet_cmd->add_option("--matrix", opt.matrix, "matrix as a JSON array of rows");
  tdet_cmd->add_option("file", opt.file, "matrix envelope, '-' for stdin");
  tdet_cmd->callback([&] {
    auto d = tdet(matrix_input(opt.matrix, opt.file));
    if (d.value.is_infinite()) {
      std::cout << "inf\n";
      return;
    }
    std::cout << to_string(d.value.value()) << " <";
    const auto& p = *d.permutation;
    for (std::size_t i = 0; i < p.size(); ++i) std::cout << (i ? " " : "") << p[i];
    std::cout << ">\n";
  });

  auto* kleene_cmd = app.add_subcommand("kleene", "Kleene star of a square min-plus matrix");
  kleene_cmd->add_option("--matrix", opt.matrix, "matrix as a JSON array of rows");
  kleene_cmd->add_option("file", opt.file, "matrix envelope, '-' for stdin");
  add_output(kleene_cmd);
  kleene_cmd->callback([&] {
    emit(matrix_envelope(kleene_star(matrix_input(opt.matrix, opt.file))), opt.output);
  });

  auto* hyper_cmd = app.add_subcommand("hypersurface", "weighted cycle of a min polynomial");
  hyper_cmd->add_option("--poly", opt.poly, "polynomial text, e.g. \"min(x0, x1, 0)\"");
  hyper_cmd->add_option("file", opt.file, "polynomial envelope, '-' for stdin");
  add_output(hyper_cmd);
  hyper_cmd->callback([&] {
    emit(cycle_envelope(hypersurface(polynomial_input(opt.poly, opt.file)).cycle), opt.output);
  });

  auto* dual_cmd = app.add_subcommand("dual-subdivision", "regular subdivision dual to a hypersurface");
  dual_cmd->add_option("--poly", opt.poly, "polynomial text");
  dual_cmd->add_option("file", opt.file, "polynomial envelope, '-' for stdin");
  add_output(dual_cmd);
  dual_cmd->callback([&] {
    emit(subdivision_envelope(hypersurface(polynomial_input(opt.poly, opt.file)).dual_subdivision),
         opt.output);
  });

  auto* sec_cmd = app.add_subcommand("secondary-cone", "closure of the heights inducing a subdivision");
  sec_cmd->add_option("file", opt.file, "subdivision or polynomial envelope, '-' for stdin");
  add_output(sec_cmd);
  sec_cmd->callback([&] {
    emit(cone_envelope(secondary_cone(subdivision_input(opt.file))), opt.output);
  });

  auto* member_cmd = app.add_subcommand("cone-membership", "locate a point relative to a cone");
  member_cmd->add_option("file", opt.file, "cone envelope, '-' for stdin");
  member_cmd->add_option("--point", opt.point, "point as a JSON array of rationals")->required();
  member_cmd->callback([&] {
    Cone c = cone_from_envelope(read_input(opt.file));
    QVec x = qvec_from_json(parse_json_text(opt.point, "--point"));
    ConeMembership m = cone_membership(c, x);
    std::cout << (m.where == Position::Interior
                      ? "interior"
                      : m.where == Position::Boundary ? "boundary" : "outside")
              << "\n";
    std::cout << "facet products:";
    for (const auto& q : m.facet_products) std::cout << " " << to_string(q);
    std::cout << "\nequation residuals:";
    for (const auto& q : m.equation_residuals) std::cout << " " << to_string(q);
    std::cout << "\n";
  });

  auto* span_cmd = app.add_subcommand("tight-span", "maximal faces of the tight span");
  span_cmd->add_option("file", opt.file, "subdivision or valuated matroid envelope, '-' for stdin");
  span_cmd->callback([&] {
    Json e = read_input(opt.file);
    RegularSubdivision s = kind_of(e) == "valuated_matroid"
                               ? basis_subdivision(valuated_matroid_from_envelope(e))
                               : subdivision_from_envelope(e);
    for (const auto& cell : tight_span(s).cells) std::cout << set_text(cell) << "\n";
  });

  auto* matroid_cmd = app.add_subcommand("matroid", "basis-list matroid queries");
  matroid_cmd->require_subcommand(1);
  auto* check_cmd = matroid_cmd->add_subcommand("check", "validate the exchange axiom");
  check_cmd->add_option("file", opt.file, "matroid envelope, '-' for stdin");
  check_cmd->callback([&] {
    Matroid m = matroid_from_envelope(read_input(opt.file));
    std::cout << "matroid on " << m.n << " elements, rank " << m.rank << ", " << m.bases.size()
              << " bases\n";
  });
  auto* tutte_cmd = matroid_cmd->add_subcommand("tutte", "Tutte polynomial as x-power y-power coefficient triples");
  tutte_cmd->add_option("file", opt.file, "matroid envelope, '-' for stdin");
  tutte_cmd->callback([&] {
    BivariatePolynomial t = tutte_polynomial(matroid_from_envelope(read_input(opt.file)));
    for (const auto& [powers, coeff] : t.coeffs)
      std::cout << powers.first << " " << powers.second << " " << to_string(coeff) << "\n";
  });
  auto* flats_cmd = matroid_cmd->add_subcommand("flats", "lattice of flats with ranks");
  flats_cmd->add_option("file", opt.file, "matroid envelope, '-' for stdin");
  flats_cmd->callback([&] {
    FlatLattice l = lattice_of_flats(matroid_from_envelope(read_input(opt.file)));
    for (std::size_t i = 0; i < l.flats.size(); ++i)
      std::cout << set_text(l.flats[i]) << ": " << l.ranks[i] << "\n";
  });

  auto* linear_cmd = app.add_subcommand("linear-space", "tropical linear space of a valuated matroid");
  linear_cmd->add_option("file", opt.file, "valuated matroid envelope, '-' for stdin");
  add_output(linear_cmd);
  linear_cmd->callback([&] {
    emit(cycle_envelope(linear_space(valuated_matroid_from_envelope(read_input(opt.file)))),
         opt.output);
  });

  auto* bergman_cmd = app.add_subcommand("bergman", "Bergman fan from the lattice of flats");
  bergman_cmd->add_option("file", opt.file, "matroid envelope, '-' for stdin");
  add_output(bergman_cmd);
  bergman_cmd->callback([&] {
    emit(cycle_envelope(bergman_fan_from_flats(matroid_from_envelope(read_input(opt.file)))),
         opt.output);
  });

  auto* intersect_cmd = app.add_subcommand("intersect", "stable intersection of two cycles");
  intersect_cmd->add_option("first", opt.file, "cycle envelope")->required();
  intersect_cmd->add_option("second", opt.second, "cycle envelope")->required();
  intersect_cmd->add_option("--seed", opt.seed, "displacement seed")->capture_default_str();
  add_output(intersect_cmd);
  intersect_cmd->callback([&] {
    TropicalCycle x = cycle_from_envelope(read_input(opt.file));
    TropicalCycle y = cycle_from_envelope(read_input(opt.second));
    emit(cycle_envelope(stable_intersection(x, y, opt.seed)), opt.output);
  });

  auto* degree_cmd = app.add_subcommand("degree", "intersection-theoretic degree of a cycle");
  degree_cmd->add_option("file", opt.file, "cycle envelope, '-' for stdin");
  degree_cmd->add_option("--seed", opt.seed, "displacement seed")->capture_default_str();
  degree_cmd->callback([&] {
    std::cout << to_string(degree(cycle_from_envelope(read_input(opt.file)))) << "\n";
  });

  auto* auction_cmd = app.add_subcommand("auction", "product-mix auction analysis");
  auction_cmd->require_subcommand(1);
  auto* equil_cmd = auction_cmd->add_subcommand("equilibria", "dual cell count per aggregate bundle");
  equil_cmd->add_option("file", opt.file, "auction envelope, '-' for stdin");
  equil_cmd->callback([&] {
    for (const auto& [b, c] : competitive_equilibria(auction_from_envelope(read_input(opt.file)))) {
      for (std::size_t i = 0; i < b.size(); ++i) std::cout << (i ? " " : "") << to_string(b[i]);
      std::cout << ": " << c << "\n";
    }
  });

  auto* curve_cmd = app.add_subcommand("curve", "plane tropical curve analysis");
  curve_cmd->require_subcommand(1);
  auto* skel_cmd = curve_cmd->add_subcommand("skeleton", "metric skeleton of a plane curve");
  skel_cmd->add_option("--poly", opt.poly, "polynomial text");
  skel_cmd->add_option("file", opt.file, "polynomial envelope, '-' for stdin");
  add_output(skel_cmd);
  skel_cmd->callback([&] {
    emit(metric_graph_envelope(skeleton(hypersurface(polynomial_input(opt.poly, opt.file)))),
         opt.output);
  });

  auto* repro_cmd = app.add_subcommand("reproduce-paper", "re-run the published example outputs");
  repro_cmd->add_option("--only", opt.only, "run only checks whose name contains this text");
  repro_cmd->add_option("--examples", opt.examples, "directory holding the example files")->capture_default_str();
  repro_cmd->callback([&] { code = reproduce(opt.examples, opt.only); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int r = app.exit(e);
    return r == 0 ? 0 : 1;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const InvariantError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return code;
}

}  // namespace tropgeo
