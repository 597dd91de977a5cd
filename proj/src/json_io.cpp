#include "tropgeo/json_io.hpp"

#include <climits>
#include <algorithm>
#include <fstream>
#include <sstream>

#include "tropgeo/errors.hpp"
#include "tropgeo/linalg.hpp"

namespace tropgeo {

namespace {

constexpr const char* kVersion = "1";

[[noreturn]] void bad(const std::string& what) { throw ParseError(what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    bad(std::string("missing field '") + key + "'");
  return j.at(key);
}

int int_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_integer()) bad(std::string("field '") + key + "' must be an integer");
  return v.get<int>();
}

Json integer_json(const Integer& z) {
  if (z >= Integer(LLONG_MIN) && z <= Integer(LLONG_MAX))
    return Json(z.convert_to<long long>());
  return Json(to_string(z));
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) return Integer(j.get<long long>());
  if (j.is_string()) {
    Rational q = parse_rational(j.get<std::string>());
    if (!is_integral(q)) bad("expected an integer");
    return Integer(numerator(q));
  }
  bad("expected an integer");
}

Json rational_json(const Rational& q) { return Json(to_string(q)); }

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(Integer(j.get<long long>()));
  bad("expected a rational as a string");
}

Json qmat_json(const QMat& m) {
  Json out = Json::array();
  for (const auto& row : m) out.push_back(qvec_json(row));
  return out;
}

QMat qmat_from_json(const Json& j) {
  if (!j.is_array()) bad("expected an array of rows");
  QMat out;
  for (const auto& row : j) out.push_back(qvec_from_json(row));
  for (const auto& row : out)
    if (row.size() != out.front().size()) bad("ragged matrix rows");
  return out;
}

Json ivec_json(const IVec& v) {
  Json out = Json::array();
  for (const auto& z : v) out.push_back(integer_json(z));
  return out;
}

IVec ivec_from_json(const Json& j) {
  if (!j.is_array()) bad("expected an array of integers");
  IVec out;
  for (const auto& e : j) out.push_back(integer_from_json(e));
  return out;
}

Json imat_json(const IMat& m) {
  Json out = Json::array();
  for (const auto& row : m) out.push_back(ivec_json(row));
  return out;
}

IMat imat_from_json(const Json& j) {
  if (!j.is_array()) bad("expected an array of integer rows");
  IMat out;
  for (const auto& row : j) out.push_back(ivec_from_json(row));
  for (const auto& row : out)
    if (row.size() != out.front().size()) bad("ragged matrix rows");
  return out;
}

Json index_sets_json(const std::vector<std::vector<int>>& sets) {
  Json out = Json::array();
  for (const auto& s : sets) out.push_back(Json(s));
  return out;
}

std::vector<std::vector<int>> index_sets_from_json(const Json& j) {
  if (!j.is_array()) bad("expected an array of index sets");
  std::vector<std::vector<int>> out;
  for (const auto& s : j) {
    if (!s.is_array()) bad("expected an index set");
    std::vector<int> set;
    for (const auto& e : s) {
      if (!e.is_number_integer()) bad("indices must be integers");
      set.push_back(e.get<int>());
    }
    out.push_back(std::move(set));
  }
  return out;
}

Json config_json(const PointConfiguration& p) {
  Json out;
  out["dim"] = p.dim;
  out["points"] = qmat_json(p.points);
  return out;
}

PointConfiguration config_from_json(const Json& j) {
  PointConfiguration p;
  p.dim = int_field(j, "dim");
  p.points = qmat_from_json(field(j, "points"));
  for (const auto& row : p.points)
    if (static_cast<int>(row.size()) != p.dim) bad("point width disagrees with dim");
  return p;
}

Matroid matroid_payload(const Json& j) {
  int n = int_field(j, "n");
  return matroid_from_bases(n, index_sets_from_json(field(j, "bases")));
}

}  // namespace

Json qvec_json(const QVec& v) {
  Json out = Json::array();
  for (const auto& q : v) out.push_back(rational_json(q));
  return out;
}

QVec qvec_from_json(const Json& j) {
  if (!j.is_array()) bad("expected an array of rationals");
  QVec out;
  for (const auto& e : j) out.push_back(rational_from_json(e));
  return out;
}

Json make_envelope(const std::string& kind, Json payload) {
  Json out;
  out["kind"] = kind;
  out["version"] = kVersion;
  out["payload"] = std::move(payload);
  return out;
}

Json open_envelope(const Json& envelope, const std::string& kind) {
  if (!envelope.is_object()) bad("expected an envelope object");
  const Json& k = field(envelope, "kind");
  if (!k.is_string()) bad("envelope kind must be a string");
  if (k.get<std::string>() != kind)
    bad("expected kind '" + kind + "', found '" + k.get<std::string>() + "'");
  const Json& v = field(envelope, "version");
  if (!v.is_string() || v.get<std::string>() != kVersion)
    bad("unsupported envelope version");
  return field(envelope, "payload");
}

Json matrix_envelope(const TropicalMinMatrix& m) {
  Json rows = Json::array();
  for (int i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < m.cols(); ++j) {
      const auto& e = m.at(i, j);
      row.push_back(e.is_infinite() ? Json("inf") : rational_json(e.value()));
    }
    rows.push_back(std::move(row));
  }
  return make_envelope("matrix", std::move(rows));
}

TropicalMinMatrix matrix_from_envelope(const Json& e) {
  Json payload = open_envelope(e, "matrix");
  if (!payload.is_array() || payload.empty()) bad("matrix payload must be a nonempty array");
  const int rows = static_cast<int>(payload.size());
  const int cols = static_cast<int>(payload.at(0).is_array() ? payload.at(0).size() : 0);
  if (cols == 0) bad("matrix rows must be nonempty arrays");
  TropicalMinMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    const Json& row = payload.at(i);
    if (!row.is_array() || static_cast<int>(row.size()) != cols) bad("ragged matrix rows");
    for (int j = 0; j < cols; ++j) {
      const Json& cell = row.at(j);
      if (cell.is_string() && cell.get<std::string>() == "inf")
        m.at(i, j) = TropicalNumber<Orientation::Min>();
      else
        m.at(i, j) = TropicalNumber<Orientation::Min>(rational_from_json(cell));
    }
  }
  return m;
}

Json polynomial_envelope(const TropicalPolynomial& f) {
  Json terms = Json::array();
  for (const auto& t : f.terms) {
    Json term;
    term["coeff"] = rational_json(t.coeff);
    term["exponents"] = ivec_json(t.exponent);
    terms.push_back(std::move(term));
  }
  Json payload;
  payload["n_vars"] = f.n_vars;
  payload["terms"] = std::move(terms);
  return make_envelope("polynomial", std::move(payload));
}

TropicalPolynomial polynomial_from_envelope(const Json& e) {
  Json payload = open_envelope(e, "polynomial");
  int n_vars = int_field(payload, "n_vars");
  const Json& terms = field(payload, "terms");
  if (!terms.is_array()) bad("terms must be an array");
  IMat exponents;
  QVec coeffs;
  for (const auto& t : terms) {
    coeffs.push_back(rational_from_json(field(t, "coeff")));
    exponents.push_back(ivec_from_json(field(t, "exponents")));
  }
  return make_polynomial(n_vars, exponents, coeffs);
}

Json subdivision_envelope(const RegularSubdivision& s) {
  Json payload;
  payload["config"] = config_json(s.config);
  payload["heights"] = qvec_json(s.heights);
  payload["maximal_cells"] = index_sets_json(s.maximal_cells);
  return make_envelope("subdivision", std::move(payload));
}

RegularSubdivision subdivision_from_envelope(const Json& e) {
  Json payload = open_envelope(e, "subdivision");
  PointConfiguration config = config_from_json(field(payload, "config"));
  QVec heights = qvec_from_json(field(payload, "heights"));
  RegularSubdivision s = regular_subdivision(config, heights);
  if (index_sets_from_json(field(payload, "maximal_cells")) != s.maximal_cells)
    bad("stored cells disagree with the heights");
  return s;
}

Json cone_envelope(const Cone& c) {
  Json payload;
  payload["ambient"] = c.ambient;
  payload["rays"] = qmat_json(c.rays);
  payload["lineality"] = qmat_json(c.lineality);
  payload["facets"] = qmat_json(c.facets);
  payload["equations"] = qmat_json(c.equations);
  return make_envelope("cone", std::move(payload));
}

Cone cone_from_envelope(const Json& e) {
  Json payload = open_envelope(e, "cone");
  int ambient = int_field(payload, "ambient");
  QMat rays = qmat_from_json(field(payload, "rays"));
  QMat lineality = qmat_from_json(field(payload, "lineality"));
  QMat facets = qmat_from_json(field(payload, "facets"));
  QMat equations = qmat_from_json(field(payload, "equations"));
  bool has_v = !rays.empty() || !lineality.empty();
  bool has_h = !facets.empty() || !equations.empty();
  if (!has_v && !has_h) {
    if (ambient == 0) return Cone{0, {}, {}, {}, {}};
    bad("cone payload carries neither generators nor inequalities");
  }
  Cone rebuilt = has_v ? cone_from_generators(rays, lineality, ambient)
                       : cone_from_inequalities(facets, equations, ambient);
  if (has_v && has_h) {
    // Facet rows may carry any positive scaling, so compare primitivized
    // row multisets; equations only need to span the same space.
    auto primitive_rows = [](const QMat& m) {
      IMat out;
      for (const auto& row : m) out.push_back(primitive(row));
      std::sort(out.begin(), out.end());
      return out;
    };
    if (primitive_rows(facets) != primitive_rows(rebuilt.facets))
      bad("stored facets disagree with the generators");
    QMat stacked = equations;
    stacked.insert(stacked.end(), rebuilt.equations.begin(), rebuilt.equations.end());
    int span = rank(stacked);
    if (span != rank(equations) || span != rank(rebuilt.equations))
      bad("stored equations disagree with the generators");
  }
  // The stored rows win: facet scalings are part of the object's identity.
  Cone out;
  out.ambient = ambient;
  out.rays = has_v ? std::move(rays) : std::move(rebuilt.rays);
  out.lineality = has_v ? std::move(lineality) : std::move(rebuilt.lineality);
  out.facets = has_h ? std::move(facets) : std::move(rebuilt.facets);
  out.equations = has_h ? std::move(equations) : std::move(rebuilt.equations);
  return out;
}

Json matroid_envelope(const Matroid& m) {
  Json payload;
  payload["n"] = m.n;
  payload["bases"] = index_sets_json(m.bases);
  return make_envelope("matroid", std::move(payload));
}

Matroid matroid_from_envelope(const Json& e) {
  return matroid_payload(open_envelope(e, "matroid"));
}

Json valuated_matroid_envelope(const ValuatedMatroid& vm) {
  Json payload;
  Json inner;
  inner["n"] = vm.matroid.n;
  inner["bases"] = index_sets_json(vm.matroid.bases);
  payload["matroid"] = std::move(inner);
  payload["valuation"] = qvec_json(vm.valuation);
  return make_envelope("valuated_matroid", std::move(payload));
}

ValuatedMatroid valuated_matroid_from_envelope(const Json& e) {
  Json payload = open_envelope(e, "valuated_matroid");
  const Json& inner = field(payload, "matroid");
  Matroid m = matroid_payload(inner);
  if (index_sets_from_json(field(inner, "bases")) != m.bases)
    bad("bases must be listed in lexicographic order");
  QVec valuation = qvec_from_json(field(payload, "valuation"));
  return valuated_matroid(std::move(m), std::move(valuation));
}

Json cycle_envelope(const TropicalCycle& x) {
  Json payload;
  payload["n"] = x.n;
  payload["vertices"] = qmat_json(x.complex.vertices);
  payload["lineality"] = qmat_json(x.complex.lineality);
  payload["maximal_cells"] = index_sets_json(x.complex.cells);
  Json weights = Json::array();
  for (const auto& w : x.weights) weights.push_back(integer_json(w));
  payload["weights"] = std::move(weights);
  return make_envelope("cycle", std::move(payload));
}

TropicalCycle cycle_from_envelope(const Json& e) {
  Json payload = open_envelope(e, "cycle");
  TropicalCycle x;
  x.n = int_field(payload, "n");
  x.complex.ambient = x.n;
  x.complex.vertices = qmat_from_json(field(payload, "vertices"));
  if (payload.contains("lineality"))
    x.complex.lineality = qmat_from_json(payload.at("lineality"));
  x.complex.cells = index_sets_from_json(field(payload, "maximal_cells"));
  const Json& weights = field(payload, "weights");
  if (!weights.is_array()) bad("weights must be an array");
  for (const auto& w : weights) x.weights.push_back(integer_from_json(w));
  for (const auto& row : x.complex.vertices) {
    if (static_cast<int>(row.size()) != x.n + 1) bad("vertex width disagrees with n");
    if (row[0] != 0 && row[0] != 1) bad("vertex rows must start with 0 or 1");
  }
  for (const auto& row : x.complex.lineality)
    if (static_cast<int>(row.size()) != x.n) bad("lineality width disagrees with n");
  for (const auto& cell : x.complex.cells)
    for (int v : cell)
      if (v < 0 || v >= static_cast<int>(x.complex.vertices.size()))
        bad("cell references a vertex that does not exist");
  check_cycle(x);
  return x;
}

Json auction_envelope(const AuctionInstance& a) {
  Json agents = Json::array();
  for (const auto& agent : a.agents) {
    Json entry;
    entry["bundles"] = imat_json(agent.bundles);
    entry["utilities"] = qvec_json(agent.utilities);
    agents.push_back(std::move(entry));
  }
  Json payload;
  payload["goods"] = a.goods;
  payload["agents"] = std::move(agents);
  return make_envelope("auction", std::move(payload));
}

AuctionInstance auction_from_envelope(const Json& e) {
  Json payload = open_envelope(e, "auction");
  AuctionInstance a;
  a.goods = int_field(payload, "goods");
  const Json& agents = field(payload, "agents");
  if (!agents.is_array()) bad("agents must be an array");
  for (const auto& entry : agents) {
    AgentUtility agent;
    agent.bundles = imat_from_json(field(entry, "bundles"));
    agent.utilities = qvec_from_json(field(entry, "utilities"));
    a.agents.push_back(std::move(agent));
  }
  check_auction(a);
  return a;
}

Json metric_graph_envelope(const MetricGraph& g) {
  Json edges = Json::array();
  for (const auto& edge : g.edges) {
    Json entry;
    entry["ends"] = Json::array({edge.a, edge.b});
    entry["length"] = rational_json(edge.length);
    edges.push_back(std::move(entry));
  }
  Json payload;
  payload["nodes"] = qmat_json(g.nodes);
  payload["edges"] = std::move(edges);
  return make_envelope("metric_graph", std::move(payload));
}

MetricGraph metric_graph_from_envelope(const Json& e) {
  Json payload = open_envelope(e, "metric_graph");
  MetricGraph g;
  g.nodes = qmat_from_json(field(payload, "nodes"));
  const Json& edges = field(payload, "edges");
  if (!edges.is_array()) bad("edges must be an array");
  const int n = static_cast<int>(g.nodes.size());
  for (const auto& entry : edges) {
    const Json& ends = field(entry, "ends");
    if (!ends.is_array() || ends.size() != 2) bad("edge ends must be a pair");
    MetricEdge edge;
    edge.a = ends.at(0).get<int>();
    edge.b = ends.at(1).get<int>();
    if (edge.a < 0 || edge.a >= n || edge.b < 0 || edge.b >= n)
      bad("edge references a node that does not exist");
    edge.length = rational_from_json(field(entry, "length"));
    if (edge.length <= 0) bad("edge lengths must be positive");
    g.edges.push_back(edge);
  }
  g.genus = metric_graph_genus(g);
  return g;
}

void write_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot open '" + path + "' for writing");
  out << j.dump(2) << "\n";
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  Json j = Json::parse(in, nullptr, false);
  if (j.is_discarded()) throw ParseError("invalid JSON in '" + path + "'");
  return j;
}

}  // namespace tropgeo
