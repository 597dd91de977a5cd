#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <string>
#include <vector>

#include "tropgeo/errors.hpp"

namespace tropgeo {

using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

using QVec = std::vector<Rational>;
using QMat = std::vector<QVec>;
using IVec = std::vector<Integer>;
using IMat = std::vector<IVec>;

// "p", "-p" or "p/q"; mpq keeps values canonical (gcd 1, q > 0).
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

// Accepts optional sign, digits, optional "/digits". Throws ParseError.
Rational parse_rational(const std::string& text);

std::string to_string(const QVec& v);

inline bool is_integral(const Rational& q) { return denominator(q) == 1; }

}  // namespace tropgeo
