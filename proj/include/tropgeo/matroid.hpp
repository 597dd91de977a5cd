#pragma once

// Matroids from explicit basis lists, their polytopes, flats, and the Tutte
// polynomial. Desk scale throughout: ground sets of ten or so elements.

#include <map>
#include <string>
#include <vector>

#include "tropgeo/geometry.hpp"
#include "tropgeo/rational.hpp"

namespace tropgeo {

struct Matroid {
  int n = 0;
  int rank = 0;
  std::vector<std::vector<int>> bases;  // sorted k-subsets, listed lex
};

// True iff for all B1, B2 and i in B1\B2 some j in B2\B1 gives a basis
// B1 - i + j. Ragged cardinalities are a precondition violation.
bool check_basis_exchange_axiom(const std::vector<std::vector<int>>& sets);

// Normalizes, deduplicates, and validates the exchange axiom.
Matroid matroid_from_bases(int n, std::vector<std::vector<int>> bases);

Matroid uniform_matroid(int k, int n);

// Rank three on seven elements; the non-bases are the seven lines
// {0,1,2},{0,3,4},{0,5,6},{1,3,5},{1,4,6},{2,3,6},{2,4,5}.
Matroid fano_matroid();

// Disjoint union with the second ground set shifted past the first.
Matroid direct_sum(const Matroid& m, const Matroid& k);

// Rows are the basis indicator vectors, in basis order.
PointConfiguration matroid_polytope(const Matroid& m);

// Every edge of the hull of the indicator vectors is parallel to some
// e_i - e_j; checkable on arbitrary set families, not just matroids.
bool verify_edge_criterion(int n, const std::vector<std::vector<int>>& sets);
bool verify_edge_criterion(const Matroid& m);

bool is_loopfree(const Matroid& m);

// max |A n B| over bases.
int matroid_rank_of(const Matroid& m, const std::vector<int>& subset);

struct FlatLattice {
  std::vector<std::vector<int>> flats;    // sorted by rank, then lex
  std::vector<int> ranks;                 // one per flat
  std::vector<char> proper;               // nonempty and not the ground set
  std::vector<std::vector<int>> covers;   // covers[i]: flats directly above i
  int matroid_rank = 0;
};

FlatLattice lattice_of_flats(const Matroid& m);

// Chains of proper flats hitting every rank 1..rank-1 once.
std::vector<std::vector<int>> maximal_proper_chains(const FlatLattice& l);

struct BivariatePolynomial {
  std::map<std::pair<int, int>, Integer> coeffs;  // (x power, y power), no zeros

  friend bool operator==(const BivariatePolynomial&, const BivariatePolynomial&) = default;
};

BivariatePolynomial bivariate_product(const BivariatePolynomial& a,
                                      const BivariatePolynomial& b);
Integer bivariate_eval(const BivariatePolynomial& p, const Integer& x, const Integer& y);
std::string to_string(const BivariatePolynomial& p);

// Deletion and contraction of the smallest element that is neither a loop
// nor a coloop, memoized; loops and coloops feed the monomial base case.
BivariatePolynomial tutte_polynomial(const Matroid& m);

}  // namespace tropgeo
