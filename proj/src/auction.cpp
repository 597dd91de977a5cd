#include "tropgeo/auction.hpp"

#include <algorithm>
#include <set>

#include "tropgeo/errors.hpp"
#include "tropgeo/geometry.hpp"

namespace tropgeo {

namespace {

Rational profit(const AgentUtility& u, std::size_t i, const QVec& price) {
  Rational p = u.utilities[i];
  for (std::size_t j = 0; j < price.size(); ++j)
    p -= price[j] * Rational(u.bundles[i][j]);
  return p;
}

void check_agent(const AgentUtility& u, int goods) {
  require(!u.bundles.empty(), "agent without bundles");
  require(u.utilities.size() == u.bundles.size(), "one utility per bundle");
  std::set<IVec> distinct;
  for (const auto& b : u.bundles) {
    require(static_cast<int>(b.size()) == goods, "bundle of wrong width");
    for (const auto& q : b) require(q >= 0, "bundle quantities must be nonnegative");
    require(distinct.insert(b).second, "duplicate bundle");
  }
}

}  // namespace

void check_auction(const AuctionInstance& a) {
  require(a.goods >= 1, "auction needs at least one good");
  require(!a.agents.empty(), "auction needs at least one agent");
  for (const auto& agent : a.agents) check_agent(agent, a.goods);
}

IMat demand_set(const AgentUtility& u, const QVec& price) {
  require(!u.bundles.empty(), "agent without bundles");
  require(u.bundles[0].size() == price.size(), "price of wrong dimension");
  check_agent(u, static_cast<int>(price.size()));
  Rational best = profit(u, 0, price);
  for (std::size_t i = 1; i < u.bundles.size(); ++i)
    best = std::max(best, profit(u, i, price));
  IMat out;
  for (std::size_t i = 0; i < u.bundles.size(); ++i)
    if (profit(u, i, price) == best) out.push_back(u.bundles[i]);
  std::sort(out.begin(), out.end());
  return out;
}

TropicalPolynomial agent_polynomial(const AgentUtility& u) {
  require(!u.bundles.empty(), "agent without bundles");
  check_agent(u, static_cast<int>(u.bundles[0].size()));
  Integer degree = 0;
  for (const auto& b : u.bundles) {
    Integer sum = 0;
    for (const auto& q : b) sum += q;
    degree = std::max(degree, sum);
  }
  IMat exponents;
  QVec coeffs;
  for (std::size_t i = 0; i < u.bundles.size(); ++i) {
    IVec e;
    Integer sum = 0;
    for (const auto& q : u.bundles[i]) sum += q;
    e.push_back(degree - sum);
    e.insert(e.end(), u.bundles[i].begin(), u.bundles[i].end());
    exponents.push_back(std::move(e));
    coeffs.push_back(-u.utilities[i]);
  }
  return make_polynomial(static_cast<int>(u.bundles[0].size()) + 1, exponents,
                         coeffs);
}

IMat aggregate_demand(const AuctionInstance& a, const QVec& price) {
  check_auction(a);
  require(static_cast<int>(price.size()) == a.goods, "price of wrong dimension");
  std::set<IVec> sums{IVec(a.goods, Integer(0))};
  for (const auto& agent : a.agents) {
    const IMat demanded = demand_set(agent, price);
    std::set<IVec> next;
    for (const auto& partial : sums)
      for (const auto& b : demanded) {
        IVec s = partial;
        for (int j = 0; j < a.goods; ++j) s[j] += b[j];
        next.insert(std::move(s));
      }
    sums = std::move(next);
  }
  return IMat(sums.begin(), sums.end());
}

std::map<IVec, int> competitive_equilibria(const AuctionInstance& a) {
  check_auction(a);
  TropicalPolynomial f = agent_polynomial(a.agents[0]);
  for (std::size_t i = 1; i < a.agents.size(); ++i)
    f = polynomial_product(f, agent_polynomial(a.agents[i]));

  PointConfiguration config;
  config.dim = a.goods + 1;
  QVec heights;
  for (const auto& t : f.terms) {
    config.points.push_back(to_rational(t.exponent));
    heights.push_back(t.coeff);
  }
  const RegularSubdivision s = regular_subdivision(config, heights);

  std::map<IVec, int> counts;
  for (std::size_t i = 0; i < f.terms.size(); ++i) {
    int c = 0;
    for (const auto& cell : s.maximal_cells)
      if (std::binary_search(cell.begin(), cell.end(), static_cast<int>(i))) ++c;
    const IVec& e = f.terms[i].exponent;
    counts.emplace(IVec(e.begin() + 1, e.end()), c);
  }
  return counts;
}

}  // namespace tropgeo
