#include "tropgeo/rational.hpp"

#include <cctype>

namespace tropgeo {

std::string to_string(const Rational& q) { return q.str(); }

std::string to_string(const Integer& z) { return z.str(); }

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw ParseError("empty rational literal");
  std::size_t i = 0;
  if (text[i] == '+' || text[i] == '-') ++i;
  std::size_t digits = 0;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
    ++i;
    ++digits;
  }
  if (digits == 0) throw ParseError("malformed rational literal '" + text + "'");
  if (i < text.size()) {
    if (text[i] != '/') throw ParseError("malformed rational literal '" + text + "'");
    ++i;
    digits = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      ++i;
      ++digits;
    }
    if (digits == 0 || i != text.size())
      throw ParseError("malformed rational literal '" + text + "'");
    if (Integer(text.substr(text.find('/') + 1)) == 0)
      throw ParseError("zero denominator in '" + text + "'");
  }
  return Rational(text);
}

std::string to_string(const QVec& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += to_string(v[i]);
  }
  out += ")";
  return out;
}

}  // namespace tropgeo
