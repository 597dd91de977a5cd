#pragma once

// Min-plus polynomials: text parsing, products, degrees. Exponents are
// integer vectors, coefficients exact rationals. Term order is preserved as
// given because dual subdivisions index their points by it.

#include <string>
#include <vector>

#include "tropgeo/rational.hpp"
#include "tropgeo/tropical.hpp"

namespace tropgeo {

struct PolyTerm {
  IVec exponent;
  Rational coeff;

  friend bool operator==(const PolyTerm&, const PolyTerm&) = default;
};

struct TropicalPolynomial {
  int n_vars = 0;
  std::vector<PolyTerm> terms;  // distinct exponents
};

// Exponent sizes must match n_vars and exponents must be distinct.
void check_polynomial(const TropicalPolynomial& f);

TropicalPolynomial make_polynomial(int n_vars, const IMat& exponents, const QVec& coeffs);

// Text form "min(c + k*x0 + ..., ...)" with rational constants and integer
// variable multiples; "max(...)" is rejected, everything is min-oriented.
// n_vars is inferred as one past the largest variable index unless forced.
TropicalPolynomial parse_tropical_polynomial(const std::string& text, int n_vars = -1);

std::string to_string(const TropicalPolynomial& f);

// Terms sorted by exponent; the value is unchanged.
TropicalPolynomial canonicalized(TropicalPolynomial f);

// min over terms of c + e*x; the empty polynomial evaluates to infinity.
TropicalNumber<Orientation::Min> evaluate(const TropicalPolynomial& f, const QVec& x);

// Indices of the terms attaining the minimum at x.
std::vector<int> argmin_terms(const TropicalPolynomial& f, const QVec& x);

bool is_homogeneous(const TropicalPolynomial& f);

// Common exponent sum; PreconditionError when the sums differ.
Integer homogeneous_degree(const TropicalPolynomial& f);

// Support is the Minkowski sum; each coefficient is the least coefficient
// sum over the splittings of its exponent.
TropicalPolynomial polynomial_product(const TropicalPolynomial& f,
                                      const TropicalPolynomial& g);

}  // namespace tropgeo
