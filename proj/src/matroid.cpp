#include "tropgeo/matroid.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <set>
#include <sstream>

#include "tropgeo/cycle.hpp"
#include "tropgeo/errors.hpp"

namespace tropgeo {

namespace {

using Mask = std::uint64_t;

Mask to_mask(const std::vector<int>& set, int n) {
  Mask m = 0;
  for (int e : set) {
    require(0 <= e && e < n, "element out of range");
    require(!(m >> e & 1), "repeated element in a basis");
    m |= Mask(1) << e;
  }
  return m;
}

std::vector<int> from_mask(Mask m) {
  std::vector<int> out;
  for (int e = 0; m >> e; ++e)
    if (m >> e & 1) out.push_back(e);
  return out;
}

bool exchange_holds(const std::vector<Mask>& bases) {
  for (Mask b1 : bases)
    for (Mask b2 : bases) {
      Mask only1 = b1 & ~b2;
      for (int i = 0; only1 >> i; ++i) {
        if (!(only1 >> i & 1)) continue;
        bool found = false;
        Mask only2 = b2 & ~b1;
        for (int j = 0; only2 >> j && !found; ++j) {
          if (!(only2 >> j & 1)) continue;
          Mask candidate = (b1 & ~(Mask(1) << i)) | (Mask(1) << j);
          found = std::find(bases.begin(), bases.end(), candidate) != bases.end();
        }
        if (!found) return false;
      }
    }
  return true;
}

std::vector<Mask> basis_masks(const Matroid& m) {
  std::vector<Mask> out;
  for (const auto& b : m.bases) out.push_back(to_mask(b, m.n));
  return out;
}

}  // namespace

bool check_basis_exchange_axiom(const std::vector<std::vector<int>>& sets) {
  std::vector<Mask> masks;
  std::size_t card = sets.empty() ? 0 : sets[0].size();
  for (const auto& s : sets) {
    require(s.size() == card, "basis cardinalities differ");
    masks.push_back(to_mask(s, 64));
  }
  std::sort(masks.begin(), masks.end());
  masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
  return exchange_holds(masks);
}

Matroid matroid_from_bases(int n, std::vector<std::vector<int>> bases) {
  require(n >= 0, "negative ground set");
  require(!bases.empty(), "a matroid needs at least one basis");
  for (auto& b : bases) {
    std::sort(b.begin(), b.end());
    to_mask(b, n);  // range and repetition check
  }
  std::sort(bases.begin(), bases.end());
  bases.erase(std::unique(bases.begin(), bases.end()), bases.end());
  require(check_basis_exchange_axiom(bases), "bases violate the exchange axiom");
  Matroid m;
  m.n = n;
  m.rank = static_cast<int>(bases[0].size());
  m.bases = std::move(bases);
  return m;
}

Matroid uniform_matroid(int k, int n) {
  require(0 <= k && k <= n, "need 0 <= k <= n");
  Matroid m;
  m.n = n;
  m.rank = k;
  m.bases = k_subsets_lex(n, k);
  return m;
}

Matroid fano_matroid() {
  const std::vector<std::vector<int>> lines = {{0, 1, 2}, {0, 3, 4}, {0, 5, 6},
                                               {1, 3, 5}, {1, 4, 6}, {2, 3, 6},
                                               {2, 4, 5}};
  Matroid m;
  m.n = 7;
  m.rank = 3;
  for (const auto& triple : k_subsets_lex(7, 3))
    if (std::find(lines.begin(), lines.end(), triple) == lines.end())
      m.bases.push_back(triple);
  return m;
}

Matroid direct_sum(const Matroid& m, const Matroid& k) {
  Matroid out;
  out.n = m.n + k.n;
  out.rank = m.rank + k.rank;
  for (const auto& b : m.bases)
    for (const auto& c : k.bases) {
      std::vector<int> u = b;
      for (int e : c) u.push_back(e + m.n);
      out.bases.push_back(std::move(u));
    }
  std::sort(out.bases.begin(), out.bases.end());
  return out;
}

PointConfiguration matroid_polytope(const Matroid& m) {
  require(!m.bases.empty(), "a matroid needs at least one basis");
  PointConfiguration p;
  p.dim = m.n;
  for (const auto& b : m.bases) {
    QVec row(m.n, Rational(0));
    for (int e : b) row[e] = 1;
    p.points.push_back(std::move(row));
  }
  return p;
}

bool verify_edge_criterion(int n, const std::vector<std::vector<int>>& sets) {
  if (sets.size() < 2) return true;
  PolyhedralComplex hull;
  hull.ambient = n;
  std::vector<int> all;
  {
    std::set<QVec> seen;
    for (const auto& s : sets) {
      QVec row(n + 1, Rational(0));
      row[0] = 1;
      for (int e : s) {
        require(0 <= e && e < n, "element out of range");
        row[e + 1] = 1;
      }
      if (seen.insert(row).second) {
        all.push_back(static_cast<int>(hull.vertices.size()));
        hull.vertices.push_back(row);
      }
    }
  }
  if (all.size() < 2) return true;
  hull.cells.push_back(all);

  for (const auto& face : complex_faces(hull)) {
    if (face.size() != 2) continue;
    // 0/1 points never have a third collinear companion, so the rank-one
    // faces are exactly the vertex pairs that form edges
    QVec d(n);
    int plus = 0, minus = 0;
    bool unit = true;
    for (int j = 0; j < n; ++j) {
      d[j] = hull.vertices[face[1]][j + 1] - hull.vertices[face[0]][j + 1];
      if (d[j] == 1)
        ++plus;
      else if (d[j] == -1)
        ++minus;
      else if (d[j] != 0)
        unit = false;
    }
    if (!unit || plus != 1 || minus != 1) return false;
  }
  return true;
}

bool verify_edge_criterion(const Matroid& m) {
  return verify_edge_criterion(m.n, m.bases);
}

bool is_loopfree(const Matroid& m) {
  std::vector<char> hit(m.n, 0);
  for (const auto& b : m.bases)
    for (int e : b) hit[e] = 1;
  return std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; });
}

int matroid_rank_of(const Matroid& m, const std::vector<int>& subset) {
  Mask a = to_mask(subset, m.n);
  int best = 0;
  for (const auto& b : m.bases)
    best = std::max(best, static_cast<int>(std::popcount(a & to_mask(b, m.n))));
  return best;
}

FlatLattice lattice_of_flats(const Matroid& m) {
  require(m.n <= 20, "ground set too large for subset enumeration");
  const auto bases = basis_masks(m);
  auto rank_of = [&](Mask a) {
    int best = 0;
    for (Mask b : bases) best = std::max(best, static_cast<int>(std::popcount(a & b)));
    return best;
  };

  std::vector<std::pair<Mask, int>> closed;
  for (Mask a = 0; a < (Mask(1) << m.n); ++a) {
    int r = rank_of(a);
    bool flat = true;
    for (int e = 0; e < m.n && flat; ++e)
      if (!(a >> e & 1) && rank_of(a | Mask(1) << e) == r) flat = false;
    if (flat) closed.push_back({a, r});
  }
  std::sort(closed.begin(), closed.end(), [](const auto& x, const auto& y) {
    if (x.second != y.second) return x.second < y.second;
    return from_mask(x.first) < from_mask(y.first);
  });

  FlatLattice l;
  l.matroid_rank = m.rank;
  for (const auto& [mask, r] : closed) {
    l.flats.push_back(from_mask(mask));
    l.ranks.push_back(r);
    l.proper.push_back(mask != 0 && static_cast<int>(std::popcount(mask)) != m.n);
  }
  l.covers.resize(l.flats.size());
  for (std::size_t i = 0; i < closed.size(); ++i)
    for (std::size_t j = 0; j < closed.size(); ++j)
      if (closed[j].second == closed[i].second + 1 &&
          (closed[i].first & ~closed[j].first) == 0)
        l.covers[i].push_back(static_cast<int>(j));
  return l;
}

std::vector<std::vector<int>> maximal_proper_chains(const FlatLattice& l) {
  std::vector<std::vector<int>> chains;
  if (l.matroid_rank <= 1) return {{}};
  std::vector<int> cur;
  auto dfs = [&](auto&& self, int flat) -> void {
    cur.push_back(flat);
    if (l.ranks[flat] == l.matroid_rank - 1) {
      chains.push_back(cur);
    } else {
      for (int up : l.covers[flat])
        if (l.proper[up]) self(self, up);
    }
    cur.pop_back();
  };
  for (std::size_t i = 0; i < l.flats.size(); ++i)
    if (l.proper[i] && l.ranks[i] == 1) dfs(dfs, static_cast<int>(i));
  return chains;
}

BivariatePolynomial bivariate_product(const BivariatePolynomial& a,
                                      const BivariatePolynomial& b) {
  BivariatePolynomial out;
  for (const auto& [pa, ca] : a.coeffs)
    for (const auto& [pb, cb] : b.coeffs)
      out.coeffs[{pa.first + pb.first, pa.second + pb.second}] += ca * cb;
  std::erase_if(out.coeffs, [](const auto& kv) { return kv.second == 0; });
  return out;
}

Integer bivariate_eval(const BivariatePolynomial& p, const Integer& x, const Integer& y) {
  Integer out(0);
  for (const auto& [deg, c] : p.coeffs) {
    Integer term = c;
    for (int i = 0; i < deg.first; ++i) term *= x;
    for (int i = 0; i < deg.second; ++i) term *= y;
    out += term;
  }
  return out;
}

std::string to_string(const BivariatePolynomial& p) {
  if (p.coeffs.empty()) return "0";
  // highest total degree first, then higher x power
  std::vector<std::pair<std::pair<int, int>, Integer>> terms(p.coeffs.begin(),
                                                             p.coeffs.end());
  std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
    int ta = a.first.first + a.first.second, tb = b.first.first + b.first.second;
    if (ta != tb) return ta > tb;
    return a.first.first > b.first.first;
  });
  std::ostringstream out;
  bool first = true;
  for (const auto& [pow, c] : terms) {
    Integer a = c < 0 ? Integer(-c) : c;
    if (first)
      out << (c < 0 ? "-" : "");
    else
      out << (c < 0 ? " - " : " + ");
    first = false;
    std::vector<std::string> parts;
    if (a != 1 || (pow.first == 0 && pow.second == 0)) parts.push_back(to_string(a));
    if (pow.first == 1) parts.push_back("x");
    if (pow.first > 1) parts.push_back("x^" + std::to_string(pow.first));
    if (pow.second == 1) parts.push_back("y");
    if (pow.second > 1) parts.push_back("y^" + std::to_string(pow.second));
    for (std::size_t i = 0; i < parts.size(); ++i)
      out << (i ? "*" : "") << parts[i];
  }
  return out.str();
}

namespace {

// Ground set compressed to consecutive labels so symmetric minors share
// memo entries.
std::vector<Mask> canonical_minor(const std::vector<Mask>& bases, Mask active) {
  std::vector<int> elems = from_mask(active);
  std::vector<Mask> out;
  for (Mask b : bases) {
    Mask c = 0;
    for (std::size_t i = 0; i < elems.size(); ++i)
      if (b >> elems[i] & 1) c |= Mask(1) << i;
    out.push_back(c);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

using MinorKey = std::pair<int, std::vector<Mask>>;

BivariatePolynomial tutte_rec(const std::vector<Mask>& bases, int n,
                              std::map<MinorKey, BivariatePolynomial>& memo) {
  // the ground set size is part of the key: equal basis masks with
  // different loop counts are different matroids
  MinorKey key{n, bases};
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;

  Mask everywhere = bases.empty() ? 0 : ~Mask(0);
  Mask somewhere = 0;
  for (Mask b : bases) {
    everywhere &= b;
    somewhere |= b;
  }
  int pivot = -1;
  for (int e = 0; e < n && pivot < 0; ++e)
    if ((somewhere >> e & 1) && !(everywhere >> e & 1)) pivot = e;

  BivariatePolynomial out;
  if (pivot < 0) {
    // only loops and coloops remain
    int coloops = std::popcount(everywhere & ((Mask(1) << n) - 1));
    int loops = n - coloops;
    out.coeffs[{coloops, loops}] = 1;
  } else {
    std::vector<Mask> deletion, contraction;
    for (Mask b : bases) {
      if (!(b >> pivot & 1)) deletion.push_back(b);
      if (b >> pivot & 1) contraction.push_back(b & ~(Mask(1) << pivot));
    }
    Mask rest = ((Mask(1) << n) - 1) & ~(Mask(1) << pivot);
    BivariatePolynomial d =
        tutte_rec(canonical_minor(deletion, rest), n - 1, memo);
    BivariatePolynomial c =
        tutte_rec(canonical_minor(contraction, rest), n - 1, memo);
    out = d;
    for (const auto& [pow, coeff] : c.coeffs) out.coeffs[pow] += coeff;
    std::erase_if(out.coeffs, [](const auto& kv) { return kv.second == 0; });
  }
  memo[key] = out;
  return out;
}

}  // namespace

BivariatePolynomial tutte_polynomial(const Matroid& m) {
  std::map<MinorKey, BivariatePolynomial> memo;
  return tutte_rec(basis_masks(m), m.n, memo);
}

}  // namespace tropgeo
