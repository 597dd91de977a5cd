#pragma once

// Product-mix auctions: agents put rational utilities on bundles of goods,
// demand sets collect the profit maximizers at a price, and the supplies
// admitting a competitive equilibrium are read off the dual subdivision of
// the product of the agents' polynomials.

#include <map>
#include <vector>

#include "tropgeo/polynomial.hpp"
#include "tropgeo/rational.hpp"

namespace tropgeo {

struct AgentUtility {
  IMat bundles;    // distinct rows in N^goods
  QVec utilities;  // one per bundle
};

struct AuctionInstance {
  int goods = 0;
  std::vector<AgentUtility> agents;
};

// At least one agent; per agent a nonempty list of distinct nonnegative
// bundles of the shared width, one utility each.
void check_auction(const AuctionInstance& a);

// Bundles maximizing utility minus price, sorted.
IMat demand_set(const AgentUtility& u, const QVec& price);

// Min polynomial of the negated utilities, with a homogenizing coordinate
// prepended so all exponents share one total degree. Evaluating it at a
// price (prefixed by zero) gives the negated best profit.
TropicalPolynomial agent_polynomial(const AgentUtility& u);

// Minkowski sum of the agents' demand sets, sorted and deduplicated.
IMat aggregate_demand(const AuctionInstance& a, const QVec& price);

// One count per support point of the product polynomial: the number of
// maximal dual-subdivision cells whose argmin set carries the point. Keys
// are the bundles, stripped of the homogenizing coordinate; a competitive
// equilibrium exists at a bundle exactly when its count is positive.
std::map<IVec, int> competitive_equilibria(const AuctionInstance& a);

}  // namespace tropgeo
