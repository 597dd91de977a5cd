#pragma once

// Min-plus (and, locally, max-plus) semiring arithmetic over exact rationals.
// operator+ is the tropical sum (min resp. max), operator* the tropical
// product (classical +). The additive neutral element is infinity; mixing
// orientations is a type error by construction.

#include <optional>
#include <string>
#include <vector>

#include "tropgeo/errors.hpp"
#include "tropgeo/rational.hpp"

namespace tropgeo {

enum class Orientation { Min, Max };

template <Orientation O>
class TropicalNumber {
 public:
  // Default-constructed value is the tropical zero, i.e. infinity.
  TropicalNumber() : infinite_(true) {}
  TropicalNumber(const Rational& v) : infinite_(false), value_(v) {}
  TropicalNumber(long v) : infinite_(false), value_(v) {}

  static TropicalNumber infinity() { return TropicalNumber(); }
  static TropicalNumber zero() { return TropicalNumber(); }
  static TropicalNumber one() { return TropicalNumber(Rational(0)); }

  bool is_infinite() const { return infinite_; }

  const Rational& value() const {
    require(!infinite_, "infinite tropical number has no finite value");
    return value_;
  }

  // Tropical sum: min resp. max; infinity is neutral.
  friend TropicalNumber operator+(const TropicalNumber& a, const TropicalNumber& b) {
    if (a.infinite_) return b;
    if (b.infinite_) return a;
    if constexpr (O == Orientation::Min)
      return a.value_ <= b.value_ ? a : b;
    else
      return a.value_ >= b.value_ ? a : b;
  }

  // Tropical product: classical +; infinity is absorbing.
  friend TropicalNumber operator*(const TropicalNumber& a, const TropicalNumber& b) {
    if (a.infinite_ || b.infinite_) return infinity();
    return TropicalNumber(a.value_ + b.value_);
  }

  TropicalNumber& operator+=(const TropicalNumber& o) { return *this = *this + o; }
  TropicalNumber& operator*=(const TropicalNumber& o) { return *this = *this * o; }

  friend bool operator==(const TropicalNumber& a, const TropicalNumber& b) {
    if (a.infinite_ != b.infinite_) return false;
    return a.infinite_ || a.value_ == b.value_;
  }
  friend bool operator!=(const TropicalNumber& a, const TropicalNumber& b) {
    return !(a == b);
  }

  // True when a dominates b in the semiring order (a + b == a, a != b).
  friend bool better(const TropicalNumber& a, const TropicalNumber& b) {
    if (b.infinite_) return !a.infinite_;
    if (a.infinite_) return false;
    if constexpr (O == Orientation::Min)
      return a.value_ < b.value_;
    else
      return a.value_ > b.value_;
  }

  std::string str() const { return infinite_ ? "inf" : to_string(value_); }

 private:
  bool infinite_;
  Rational value_;
};

using TropicalMin = TropicalNumber<Orientation::Min>;
using TropicalMax = TropicalNumber<Orientation::Max>;

template <Orientation O>
class TropicalMatrix {
 public:
  TropicalMatrix(int rows, int cols)
      : rows_(rows), cols_(cols), entries_(static_cast<std::size_t>(rows) * cols) {
    require(rows >= 0 && cols >= 0, "negative matrix dimension");
  }

  static TropicalMatrix identity(int d) {
    TropicalMatrix m(d, d);
    for (int i = 0; i < d; ++i) m.at(i, i) = TropicalNumber<O>::one();
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  TropicalNumber<O>& at(int i, int j) { return entries_[index(i, j)]; }
  const TropicalNumber<O>& at(int i, int j) const { return entries_[index(i, j)]; }

  friend TropicalMatrix operator+(const TropicalMatrix& a, const TropicalMatrix& b) {
    require(a.rows_ == b.rows_ && a.cols_ == b.cols_,
            "tropical matrix sum needs equal shapes");
    TropicalMatrix out(a.rows_, a.cols_);
    for (std::size_t k = 0; k < a.entries_.size(); ++k)
      out.entries_[k] = a.entries_[k] + b.entries_[k];
    return out;
  }

  friend TropicalMatrix operator*(const TropicalMatrix& a, const TropicalMatrix& b) {
    require(a.cols_ == b.rows_, "tropical matrix product needs matching inner dimension");
    TropicalMatrix out(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
      for (int k = 0; k < a.cols_; ++k) {
        const TropicalNumber<O>& aik = a.at(i, k);
        if (aik.is_infinite()) continue;
        for (int j = 0; j < b.cols_; ++j) out.at(i, j) += aik * b.at(k, j);
      }
    return out;
  }

  friend bool operator==(const TropicalMatrix& a, const TropicalMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }

 private:
  std::size_t index(int i, int j) const {
    require(i >= 0 && i < rows_ && j >= 0 && j < cols_, "matrix index out of range");
    return static_cast<std::size_t>(i) * cols_ + j;
  }

  int rows_, cols_;
  std::vector<TropicalNumber<O>> entries_;
};

using TropicalMinMatrix = TropicalMatrix<Orientation::Min>;
using TropicalMaxMatrix = TropicalMatrix<Orientation::Max>;

// Kleene star I + A + A^2 + ... computed in place, Floyd-Warshall style.
// Throws NegativeCycleError when some cycle improves on the identity
// (diagonal dominated by one()), in which case the series diverges.
template <Orientation O>
TropicalMatrix<O> kleene_star(const TropicalMatrix<O>& a) {
  require(a.rows() == a.cols(), "kleene_star needs a square matrix");
  const int d = a.rows();
  TropicalMatrix<O> m = TropicalMatrix<O>::identity(d) + a;
  for (int k = 0; k < d; ++k) {
    for (int i = 0; i < d; ++i) {
      const TropicalNumber<O>& mik = m.at(i, k);
      if (mik.is_infinite()) continue;
      for (int j = 0; j < d; ++j) m.at(i, j) += mik * m.at(k, j);
    }
    for (int i = 0; i < d; ++i)
      if (better(m.at(i, i), TropicalNumber<O>::one()))
        throw NegativeCycleError("matrix has an improving cycle, no Kleene star");
  }
  return m;
}

template <Orientation O>
struct TropicalDeterminant {
  TropicalNumber<O> value;
  // Images sigma(0), ..., sigma(d-1); absent when value is infinite.
  std::optional<std::vector<int>> permutation;
};

namespace detail {

// Shortest-augmenting-path assignment on rows*cols costs with forbidden
// entries; returns the optimal total or nullopt when no finite perfect
// matching exists. Costs may be negative.
std::optional<Rational> assignment_optimum(
    const std::vector<std::vector<std::optional<Rational>>>& cost);

std::optional<std::vector<int>> lexicographic_optimal_assignment(
    const std::vector<std::vector<std::optional<Rational>>>& cost);

}  // namespace detail

// Tropical determinant = value of the linear assignment problem; among
// optimal permutations the lexicographically smallest image sequence is
// reported.
template <Orientation O>
TropicalDeterminant<O> tdet(const TropicalMatrix<O>& a) {
  require(a.rows() == a.cols(), "tdet needs a square matrix");
  const int d = a.rows();
  std::vector<std::vector<std::optional<Rational>>> cost(
      d, std::vector<std::optional<Rational>>(d));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      if (!a.at(i, j).is_infinite()) {
        if constexpr (O == Orientation::Min)
          cost[i][j] = a.at(i, j).value();
        else
          cost[i][j] = -a.at(i, j).value();
      }
  auto perm = detail::lexicographic_optimal_assignment(cost);
  if (!perm) return {TropicalNumber<O>::infinity(), std::nullopt};
  TropicalNumber<O> value = TropicalNumber<O>::one();
  for (int i = 0; i < d; ++i) value *= a.at(i, (*perm)[i]);
  return {value, perm};
}

}  // namespace tropgeo
