#include "tropgeo/tropical.hpp"

#include <vector>

namespace tropgeo::detail {

namespace {

using Cost = std::vector<std::vector<std::optional<Rational>>>;

// Shortest augmenting path with potentials, 1-indexed internals. Forbidden
// entries are absent edges; an unreachable column certifies that no perfect
// matching through allowed entries exists.
std::optional<std::vector<int>> solve_assignment(const Cost& cost) {
  const int n = static_cast<int>(cost.size());
  if (n == 0) return std::vector<int>{};
  std::vector<Rational> u(n + 1, Rational(0)), v(n + 1, Rational(0));
  std::vector<int> p(n + 1, 0), way(n + 1, 0);
  for (int i = 1; i <= n; ++i) {
    p[0] = i;
    int j0 = 0;
    std::vector<std::optional<Rational>> minv(n + 1);
    std::vector<char> used(n + 1, 0);
    do {
      used[j0] = 1;
      const int i0 = p[j0];
      int j1 = -1;
      std::optional<Rational> delta;
      for (int j = 1; j <= n; ++j) {
        if (used[j]) continue;
        if (cost[i0 - 1][j - 1]) {
          Rational cur = *cost[i0 - 1][j - 1] - u[i0] - v[j];
          if (!minv[j] || cur < *minv[j]) {
            minv[j] = cur;
            way[j] = j0;
          }
        }
        if (minv[j] && (!delta || *minv[j] < *delta)) {
          delta = *minv[j];
          j1 = j;
        }
      }
      if (!delta) return std::nullopt;
      for (int j = 0; j <= n; ++j) {
        if (used[j]) {
          u[p[j]] += *delta;
          v[j] -= *delta;
        } else if (minv[j]) {
          *minv[j] -= *delta;
        }
      }
      j0 = j1;
    } while (p[j0] != 0);
    do {
      const int j1 = way[j0];
      p[j0] = p[j1];
      j0 = j1;
    } while (j0);
  }
  std::vector<int> match(n);
  for (int j = 1; j <= n; ++j) match[p[j] - 1] = j - 1;
  return match;
}

}  // namespace

std::optional<Rational> assignment_optimum(const Cost& cost) {
  auto match = solve_assignment(cost);
  if (!match) return std::nullopt;
  Rational total(0);
  for (std::size_t i = 0; i < match->size(); ++i) total += *cost[i][(*match)[i]];
  return total;
}

std::optional<std::vector<int>> lexicographic_optimal_assignment(const Cost& cost) {
  const int n = static_cast<int>(cost.size());
  auto best = assignment_optimum(cost);
  if (!best) return std::nullopt;
  std::vector<int> perm(n, -1);
  std::vector<char> used_col(n, 0);
  Rational committed(0);
  for (int r = 0; r < n; ++r) {
    bool placed = false;
    for (int c = 0; c < n && !placed; ++c) {
      if (used_col[c] || !cost[r][c]) continue;
      Rational fixed = committed + *cost[r][c];
      // Residual problem over the remaining rows and columns.
      Cost sub;
      sub.reserve(n - r - 1);
      for (int rr = r + 1; rr < n; ++rr) {
        std::vector<std::optional<Rational>> row;
        row.reserve(n - r - 1);
        for (int cc = 0; cc < n; ++cc)
          if (!used_col[cc] && cc != c) row.push_back(cost[rr][cc]);
        sub.push_back(std::move(row));
      }
      auto rest = assignment_optimum(sub);
      if (rest && fixed + *rest == *best) {
        perm[r] = c;
        used_col[c] = 1;
        committed = fixed;
        placed = true;
      }
    }
    ensure(placed, "optimal assignment extension must exist");
  }
  return perm;
}

}  // namespace tropgeo::detail
