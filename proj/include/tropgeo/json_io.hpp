#pragma once

// JSON persistence. Every object travels inside a self-describing envelope
// {kind, version, payload}; rationals are strings like "7", "-3/2", or
// "inf" for the tropical zero. Loaders re-validate through the checked
// constructors, so a file that parses yields a sound object.

#include <string>

#include <json.hpp>

#include "tropgeo/auction.hpp"
#include "tropgeo/cone.hpp"
#include "tropgeo/cycle.hpp"
#include "tropgeo/geometry.hpp"
#include "tropgeo/hypersurface.hpp"
#include "tropgeo/linspace.hpp"
#include "tropgeo/matroid.hpp"
#include "tropgeo/polynomial.hpp"
#include "tropgeo/rational.hpp"
#include "tropgeo/tropical.hpp"

namespace tropgeo {

using Json = nlohmann::json;

Json make_envelope(const std::string& kind, Json payload);

Json qvec_json(const QVec& v);
QVec qvec_from_json(const Json& j);

// Checks the kind tag and version and returns the payload. ParseError on
// any mismatch.
Json open_envelope(const Json& envelope, const std::string& kind);

Json matrix_envelope(const TropicalMinMatrix& m);
TropicalMinMatrix matrix_from_envelope(const Json& e);

Json polynomial_envelope(const TropicalPolynomial& f);
TropicalPolynomial polynomial_from_envelope(const Json& e);

Json subdivision_envelope(const RegularSubdivision& s);
RegularSubdivision subdivision_from_envelope(const Json& e);

Json cone_envelope(const Cone& c);
Cone cone_from_envelope(const Json& e);

Json matroid_envelope(const Matroid& m);
Matroid matroid_from_envelope(const Json& e);

Json valuated_matroid_envelope(const ValuatedMatroid& vm);
// The valuation indexes the bases in their stored lexicographic order, so
// the file must list them that way.
ValuatedMatroid valuated_matroid_from_envelope(const Json& e);

Json cycle_envelope(const TropicalCycle& x);
TropicalCycle cycle_from_envelope(const Json& e);

Json auction_envelope(const AuctionInstance& a);
AuctionInstance auction_from_envelope(const Json& e);

Json metric_graph_envelope(const MetricGraph& g);
MetricGraph metric_graph_from_envelope(const Json& e);

void write_json_file(const std::string& path, const Json& j);
Json read_json_file(const std::string& path);

}  // namespace tropgeo
