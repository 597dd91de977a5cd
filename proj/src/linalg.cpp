#include "tropgeo/linalg.hpp"

#include <algorithm>

#include "tropgeo/errors.hpp"

namespace tropgeo {

Rational dot(const QVec& a, const QVec& b) {
  require(a.size() == b.size(), "dot product needs equal lengths");
  Rational s(0);
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

QMat rref(QMat a, std::vector<int>* pivot_cols) {
  if (pivot_cols) pivot_cols->clear();
  if (a.empty()) return a;
  const std::size_t cols = a[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
    std::size_t pivot = r;
    while (pivot < a.size() && a[pivot][c] == 0) ++pivot;
    if (pivot == a.size()) continue;
    std::swap(a[r], a[pivot]);
    const Rational inv = Rational(1) / a[r][c];
    for (auto& x : a[r]) x *= inv;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == r || a[i][c] == 0) continue;
      const Rational f = a[i][c];
      for (std::size_t j = 0; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    if (pivot_cols) pivot_cols->push_back(static_cast<int>(c));
    ++r;
  }
  a.resize(r);
  return a;
}

int rank(const QMat& a) { return static_cast<int>(rref(a).size()); }

QMat nullspace(const QMat& a, int ncols) {
  std::vector<int> pivots;
  QMat r = a.empty() ? QMat{} : rref(a, &pivots);
  std::vector<bool> is_pivot(ncols, false);
  for (int c : pivots) is_pivot[c] = true;
  QMat basis;
  for (int free = 0; free < ncols; ++free) {
    if (is_pivot[free]) continue;
    QVec v(ncols, Rational(0));
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -r[i][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<QVec> solve_row_combination(const QMat& a, const QVec& b) {
  // Solve x A = b by eliminating on A augmented with the identity.
  const std::size_t m = a.size();
  const std::size_t n = b.size();
  QMat work(m, QVec());
  for (std::size_t i = 0; i < m; ++i) {
    require(a[i].size() == n, "ragged matrix");
    work[i] = a[i];
    for (std::size_t k = 0; k < m; ++k) work[i].push_back(i == k ? 1 : 0);
  }
  std::vector<int> pivots;
  QMat r = rref(std::move(work), &pivots);
  QVec target = b;
  QVec coeff(m, Rational(0));
  for (std::size_t i = 0; i < r.size(); ++i) {
    const int c = pivots[i];
    if (c >= static_cast<int>(n)) break;
    if (target[c] == 0) continue;
    const Rational f = target[c];
    for (std::size_t j = 0; j < n; ++j) target[j] -= f * r[i][j];
    for (std::size_t j = 0; j < m; ++j) coeff[j] += f * r[i][n + j];
  }
  for (const auto& x : target)
    if (x != 0) return std::nullopt;
  return coeff;
}

IVec primitive(const QVec& v) {
  Integer lcm(1);
  bool nonzero = false;
  for (const auto& x : v) {
    if (x == 0) continue;
    nonzero = true;
    lcm = boost::multiprecision::lcm(lcm, Integer(denominator(x)));
  }
  require(nonzero, "primitive vector of zero is undefined");
  IVec out(v.size());
  Integer g(0);
  for (std::size_t i = 0; i < v.size(); ++i) {
    out[i] = Integer(numerator(v[i])) * (lcm / Integer(denominator(v[i])));
    g = boost::multiprecision::gcd(g, out[i]);
  }
  for (auto& x : out) x /= g;
  return out;
}

IVec primitive_sign_normalized(const QVec& v) {
  IVec out = primitive(v);
  for (const auto& x : out) {
    if (x == 0) continue;
    if (x < 0)
      for (auto& y : out) y = -y;
    break;
  }
  return out;
}

QVec to_rational(const IVec& v) {
  QVec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = Rational(v[i]);
  return out;
}

Rational determinant(QMat a) {
  const std::size_t n = a.size();
  for (const auto& row : a)
    require(row.size() == n, "determinant needs a square matrix");
  Rational d(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) return Rational(0);
    if (p != c) {
      std::swap(a[p], a[c]);
      d = -d;
    }
    d *= a[c][c];
    for (std::size_t i = c + 1; i < n; ++i) {
      if (a[i][c] == 0) continue;
      const Rational f = a[i][c] / a[c][c];
      for (std::size_t j = c; j < n; ++j) a[i][j] -= f * a[c][j];
    }
  }
  return d;
}

namespace {

// Clear row r and column c of work around the pivot at (r, c) by repeated
// division with remainder; column operations are mirrored on right.
void clear_pivot(IMat& work, IMat& right, std::size_t r, std::size_t c) {
  const std::size_t rows = work.size(), cols = work[0].size();
  bool again = true;
  while (again) {
    again = false;
    // choose the entry of smallest magnitude in row r / column c as pivot
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || work[i][c] == 0) continue;
      if (boost::multiprecision::abs(work[i][c]) <
          boost::multiprecision::abs(work[r][c]))
        std::swap(work[i], work[r]);
    }
    for (std::size_t j = 0; j < cols; ++j) {
      if (j == c || work[r][j] == 0) continue;
      if (boost::multiprecision::abs(work[r][j]) <
          boost::multiprecision::abs(work[r][c])) {
        for (std::size_t i = 0; i < rows; ++i) std::swap(work[i][j], work[i][c]);
        for (std::size_t i = 0; i < cols; ++i) std::swap(right[i][j], right[i][c]);
      }
    }
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || work[i][c] == 0) continue;
      const Integer q = work[i][c] / work[r][c];
      for (std::size_t j = 0; j < cols; ++j) work[i][j] -= q * work[r][j];
      if (work[i][c] != 0) again = true;
    }
    for (std::size_t j = 0; j < cols; ++j) {
      if (j == c || work[r][j] == 0) continue;
      const Integer q = work[r][j] / work[r][c];
      for (std::size_t i = 0; i < rows; ++i) work[i][j] -= q * work[i][c];
      for (std::size_t i = 0; i < cols; ++i) right[i][j] -= q * right[i][c];
      if (work[r][j] != 0) again = true;
    }
  }
}

}  // namespace

Diagonalization integer_diagonalize(IMat a, int ncols) {
  const std::size_t n = static_cast<std::size_t>(ncols);
  for (auto& row : a) require(row.size() == n, "ragged integer matrix");
  IMat right(n, IVec(n, Integer(0)));
  for (std::size_t i = 0; i < n; ++i) right[i][i] = 1;
  Diagonalization out;
  out.right = std::move(right);
  if (a.empty() || n == 0) return out;
  const std::size_t rows = a.size();
  std::size_t t = 0;
  for (std::size_t c = 0; c < n && t < rows; ++c) {
    // find a nonzero entry in columns >= c, rows >= t
    std::size_t pi = rows, pj = n;
    for (std::size_t j = c; j < n && pi == rows; ++j)
      for (std::size_t i = t; i < rows; ++i)
        if (a[i][j] != 0) {
          pi = i;
          pj = j;
          break;
        }
    if (pi == rows) break;
    std::swap(a[t], a[pi]);
    if (pj != c) {
      for (std::size_t i = 0; i < rows; ++i) std::swap(a[i][pj], a[i][c]);
      for (std::size_t i = 0; i < n; ++i) std::swap(out.right[i][pj], out.right[i][c]);
    }
    clear_pivot(a, out.right, t, c);
    Integer d = a[t][c];
    out.diag.push_back(d < 0 ? Integer(-d) : d);
    ++t;
  }
  return out;
}

IMat integer_kernel(const IMat& a, int ncols) {
  Diagonalization d = integer_diagonalize(a, ncols);
  const std::size_t r = d.diag.size();
  IMat basis;
  for (std::size_t j = r; j < static_cast<std::size_t>(ncols); ++j) {
    IVec v(ncols);
    for (int i = 0; i < ncols; ++i) v[i] = d.right[i][j];
    basis.push_back(std::move(v));
  }
  return basis;
}

IMat saturation(const IMat& rows, int ncols) {
  IMat k = integer_kernel(rows, ncols);
  if (k.empty()) {
    IMat full(ncols, IVec(ncols, Integer(0)));
    for (int i = 0; i < ncols; ++i) full[i][i] = 1;
    return full;
  }
  return integer_kernel(k, ncols);
}

Integer lattice_index(const IMat& rows, int ncols) {
  Diagonalization d = integer_diagonalize(rows, ncols);
  require(static_cast<int>(d.diag.size()) == ncols,
          "lattice generators do not span the ambient space");
  Integer idx(1);
  for (const auto& x : d.diag) idx *= x;
  return idx;
}

}  // namespace tropgeo
