#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "tropgeo/linalg.hpp"

using namespace tropgeo;

namespace {

QVec qv(std::initializer_list<long> v) {
  QVec out;
  for (long x : v) out.push_back(Rational(x));
  return out;
}

IVec iv(std::initializer_list<long> v) {
  IVec out;
  for (long x : v) out.push_back(Integer(x));
  return out;
}

}  // namespace

TEST_CASE("rref, rank and nullspace") {
  QMat a = {qv({1, 2, 3}), qv({2, 4, 6}), qv({1, 0, 1})};
  CHECK(rank(a) == 2);
  QMat ns = nullspace(a, 3);
  REQUIRE(ns.size() == 1);
  for (const auto& row : a) CHECK(dot(row, ns[0]) == 0);
  CHECK(nullspace(QMat{}, 3).size() == 3);
}

TEST_CASE("solve_row_combination finds exact coefficients") {
  QMat a = {qv({1, 0, 1}), qv({0, 1, 1})};
  auto x = solve_row_combination(a, qv({2, 3, 5}));
  REQUIRE(x.has_value());
  CHECK((*x)[0] == 2);
  CHECK((*x)[1] == 3);
  CHECK_FALSE(solve_row_combination(a, qv({0, 0, 1})).has_value());
}

TEST_CASE("primitive vectors") {
  QVec v = {Rational(1) / 2, Rational(-3) / 4, Rational(0)};
  CHECK(primitive(v) == iv({2, -3, 0}));
  CHECK(primitive_sign_normalized(v) == iv({2, -3, 0}));
  QVec w = {Rational(-2), Rational(4)};
  CHECK(primitive(w) == iv({-1, 2}));
  CHECK(primitive_sign_normalized(w) == iv({1, -2}));
  CHECK_THROWS(primitive(qv({0, 0})));
}

TEST_CASE("integer diagonalization invariants on random matrices") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long> val(-6, 6);
  for (int it = 0; it < 50; ++it) {
    const int rows = 3 + static_cast<int>(rng() % 3);
    const int cols = 3 + static_cast<int>(rng() % 3);
    IMat a(rows, IVec(cols));
    for (auto& r : a)
      for (auto& x : r) x = val(rng);
    auto d = integer_diagonalize(a, cols);
    // kernel vectors annihilate the matrix and are part of a unimodular V
    IMat k = integer_kernel(a, cols);
    CHECK(static_cast<int>(k.size()) == cols - static_cast<int>(d.diag.size()));
    for (const auto& v : k)
      for (const auto& row : a) {
        Integer s(0);
        for (int j = 0; j < cols; ++j) s += row[j] * v[j];
        CHECK(s == 0);
      }
    QMat rat;
    for (const auto& r : a) rat.push_back(to_rational(r));
    CHECK(static_cast<int>(d.diag.size()) == rank(rat));
  }
}

TEST_CASE("saturation yields a saturated superlattice") {
  // rows 2e0, 3e1: saturation is Z^2
  IMat l = {iv({2, 0}), iv({0, 3})};
  IMat s = saturation(l, 2);
  CHECK(lattice_index(s, 2) == 1);
  // rank-1 lattice spanned by (2, 4): saturation spanned by (1, 2)
  IMat m = {iv({2, 4})};
  IMat sm = saturation(m, 2);
  REQUIRE(sm.size() == 1);
  Integer g = boost::multiprecision::gcd(sm[0][0], sm[0][1]);
  CHECK(g == 1);
  CHECK(sm[0][0] * 2 == sm[0][1]);
}

TEST_CASE("lattice_index worked values") {
  CHECK(lattice_index({iv({1, 0}), iv({0, 1})}, 2) == 1);
  CHECK(lattice_index({iv({2, 0}), iv({0, 1})}, 2) == 2);
  CHECK(lattice_index({iv({1, 1}), iv({1, -1})}, 2) == 2);
  CHECK(lattice_index({iv({1, 1, 0}), iv({0, 1, 1}), iv({1, 0, 1})}, 3) == 2);
  CHECK_THROWS(lattice_index({iv({1, 1})}, 2));
}

TEST_CASE("lattice_index is invariant under adding redundant generators") {
  std::mt19937_64 rng(4);
  std::uniform_int_distribution<long> val(-5, 5);
  for (int it = 0; it < 30; ++it) {
    IMat g(3, IVec(3));
    for (auto& r : g)
      for (auto& x : r) x = val(rng);
    QMat rat;
    for (const auto& r : g) rat.push_back(to_rational(r));
    if (rank(rat) < 3) continue;
    Integer base = lattice_index(g, 3);
    IMat extended = g;
    IVec combo(3, Integer(0));
    for (int j = 0; j < 3; ++j) combo[j] = g[0][j] + 2 * g[1][j] - g[2][j];
    extended.push_back(combo);
    CHECK(lattice_index(extended, 3) == base);
  }
}
