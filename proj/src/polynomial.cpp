#include "tropgeo/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>

#include "tropgeo/errors.hpp"

namespace tropgeo {

void check_polynomial(const TropicalPolynomial& f) {
  require(f.n_vars >= 0, "negative variable count");
  std::set<IVec> seen;
  for (const auto& t : f.terms) {
    require(static_cast<int>(t.exponent.size()) == f.n_vars,
            "exponent length differs from the variable count");
    require(seen.insert(t.exponent).second, "duplicate exponent");
  }
}

TropicalPolynomial make_polynomial(int n_vars, const IMat& exponents, const QVec& coeffs) {
  require(exponents.size() == coeffs.size(),
          "one coefficient per exponent required");
  TropicalPolynomial f;
  f.n_vars = n_vars;
  for (std::size_t i = 0; i < exponents.size(); ++i)
    f.terms.push_back({exponents[i], coeffs[i]});
  check_polynomial(f);
  return f;
}

namespace {

// Recursive-descent reader over the raw text; positions are 0-based offsets.
class Reader {
 public:
  explicit Reader(const std::string& text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool at_end() {
    skip_space();
    return pos_ >= text_.size();
  }

  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  void expect(char c, const std::string& what) {
    if (!accept(c)) fail("expected " + what);
  }

  bool accept_word(const std::string& w) {
    skip_space();
    if (text_.compare(pos_, w.size(), w) != 0) return false;
    pos_ += w.size();
    return true;
  }

  Integer read_integer() {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == start) fail("expected digits");
    return Integer(text_.substr(start, pos_ - start));
  }

  [[noreturn]] void fail(const std::string& what) {
    throw ParseError(what + " at position " + std::to_string(pos_));
  }

  std::size_t pos() const { return pos_; }

 private:
  const std::string& text_;
  std::size_t pos_ = 0;
};

struct RawTerm {
  Rational constant;
  std::map<int, Integer> powers;
};

// summand := number ["*" variable] | variable ; sign handled by the caller
int read_var_index(Reader& r) {
  Integer idx = r.read_integer();
  if (idx > 100000) r.fail("variable index too large");
  return static_cast<int>(idx);
}

void read_summand(Reader& r, int sign, RawTerm& term, int* max_var) {
  if (r.peek() == 'x') {
    r.accept('x');
    int idx = read_var_index(r);
    *max_var = std::max(*max_var, idx);
    term.powers[idx] += sign;
    return;
  }
  Integer num = r.read_integer();
  Integer den(1);
  if (r.accept('/')) {
    den = r.read_integer();
    if (den == 0) r.fail("zero denominator");
  }
  Rational value = Rational(num) / den;
  if (r.accept('*')) {
    r.expect('x', "a variable after '*'");
    int idx = read_var_index(r);
    *max_var = std::max(*max_var, idx);
    if (!is_integral(value)) r.fail("variable multiple must be an integer");
    term.powers[idx] += sign * numerator(value);
    return;
  }
  term.constant += sign * value;
}

}  // namespace

TropicalPolynomial parse_tropical_polynomial(const std::string& text, int n_vars) {
  Reader r(text);
  if (r.accept_word("max")) r.fail("max-oriented input rejected, use min(...)");
  if (!r.accept_word("min")) r.fail("expected min(...)");
  r.expect('(', "'('");

  std::vector<RawTerm> raw;
  int max_var = -1;
  do {
    RawTerm term;
    int sign = r.accept('-') ? -1 : 1;
    read_summand(r, sign, term, &max_var);
    for (;;) {
      if (r.accept('+'))
        read_summand(r, 1, term, &max_var);
      else if (r.accept('-'))
        read_summand(r, -1, term, &max_var);
      else
        break;
    }
    raw.push_back(std::move(term));
  } while (r.accept(','));
  r.expect(')', "')'");
  if (!r.at_end()) r.fail("trailing input");

  if (n_vars < 0)
    n_vars = max_var + 1;
  else if (max_var >= n_vars)
    throw ParseError("variable x" + std::to_string(max_var) +
                     " exceeds the declared count " + std::to_string(n_vars));

  TropicalPolynomial f;
  f.n_vars = n_vars;
  std::map<IVec, std::size_t> index;
  for (const auto& t : raw) {
    IVec e(n_vars, Integer(0));
    for (const auto& [var, k] : t.powers) e[var] = k;
    auto it = index.find(e);
    if (it == index.end()) {
      index[e] = f.terms.size();
      f.terms.push_back({std::move(e), t.constant});
    } else {
      // repeated exponents collapse by the tropical sum
      f.terms[it->second].coeff = std::min(f.terms[it->second].coeff, t.constant);
    }
  }
  return f;
}

std::string to_string(const TropicalPolynomial& f) {
  std::ostringstream out;
  out << "min(";
  bool first_term = true;
  for (const auto& t : f.terms) {
    if (!first_term) out << ",";
    first_term = false;
    bool empty = true;
    if (t.coeff != 0) {
      out << to_string(t.coeff);
      empty = false;
    }
    for (int i = 0; i < f.n_vars; ++i) {
      if (t.exponent[i] == 0) continue;
      if (t.exponent[i] > 0 && !empty) out << "+";
      if (t.exponent[i] == -1)
        out << "-";
      else if (t.exponent[i] != 1)
        out << to_string(t.exponent[i]) << "*";
      out << "x" << i;
      empty = false;
    }
    if (empty) out << "0";
  }
  out << ")";
  return out.str();
}

TropicalPolynomial canonicalized(TropicalPolynomial f) {
  std::sort(f.terms.begin(), f.terms.end(),
            [](const PolyTerm& a, const PolyTerm& b) {
              if (a.exponent != b.exponent) return a.exponent < b.exponent;
              return a.coeff < b.coeff;
            });
  return f;
}

TropicalNumber<Orientation::Min> evaluate(const TropicalPolynomial& f, const QVec& x) {
  require(static_cast<int>(x.size()) == f.n_vars, "point of wrong dimension");
  TropicalNumber<Orientation::Min> best;
  for (const auto& t : f.terms) {
    Rational v = t.coeff;
    for (int i = 0; i < f.n_vars; ++i) v += Rational(t.exponent[i]) * x[i];
    best += TropicalNumber<Orientation::Min>(v);
  }
  return best;
}

std::vector<int> argmin_terms(const TropicalPolynomial& f, const QVec& x) {
  require(static_cast<int>(x.size()) == f.n_vars, "point of wrong dimension");
  std::vector<int> arg;
  Rational best;
  for (std::size_t j = 0; j < f.terms.size(); ++j) {
    Rational v = f.terms[j].coeff;
    for (int i = 0; i < f.n_vars; ++i) v += Rational(f.terms[j].exponent[i]) * x[i];
    if (arg.empty() || v < best) {
      best = v;
      arg.assign(1, static_cast<int>(j));
    } else if (v == best) {
      arg.push_back(static_cast<int>(j));
    }
  }
  return arg;
}

bool is_homogeneous(const TropicalPolynomial& f) {
  if (f.terms.empty()) return false;
  Integer sum(0);
  for (const auto& k : f.terms[0].exponent) sum += k;
  for (const auto& t : f.terms) {
    Integer s(0);
    for (const auto& k : t.exponent) s += k;
    if (s != sum) return false;
  }
  return true;
}

Integer homogeneous_degree(const TropicalPolynomial& f) {
  require(is_homogeneous(f), "polynomial is not homogeneous");
  Integer sum(0);
  for (const auto& k : f.terms[0].exponent) sum += k;
  return sum;
}

TropicalPolynomial polynomial_product(const TropicalPolynomial& f,
                                      const TropicalPolynomial& g) {
  require(f.n_vars == g.n_vars, "variable counts differ");
  check_polynomial(f);
  check_polynomial(g);
  std::map<IVec, Rational> prod;
  for (const auto& a : f.terms)
    for (const auto& b : g.terms) {
      IVec e(f.n_vars);
      for (int i = 0; i < f.n_vars; ++i) e[i] = a.exponent[i] + b.exponent[i];
      Rational c = a.coeff + b.coeff;
      auto it = prod.find(e);
      if (it == prod.end())
        prod[std::move(e)] = c;
      else
        it->second = std::min(it->second, c);
    }
  TropicalPolynomial h;
  h.n_vars = f.n_vars;
  for (auto& [e, c] : prod) h.terms.push_back({e, c});
  return h;
}

}  // namespace tropgeo
