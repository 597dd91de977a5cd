#include "tropgeo/cone.hpp"

#include <algorithm>

#include "tropgeo/errors.hpp"

namespace tropgeo {

namespace {

struct Ray {
  QVec v;
  std::vector<bool> tight;  // per processed inequality
};

// True when the zero set of q contains t (over processed inequalities).
bool tight_superset(const std::vector<bool>& q, const std::vector<bool>& t) {
  for (std::size_t i = 0; i < t.size(); ++i)
    if (t[i] && !q[i]) return false;
  return true;
}

void make_primitive(QVec& v) {
  for (const auto& x : v)
    if (x != 0) {
      v = to_rational(primitive(v));
      return;
    }
}

// Incremental double description for {y : rows*y >= 0} in R^d, starting from
// the full space. Rays are kept extreme modulo the running lineality; the
// Fukuda-Prodon combinatorial test decides adjacency.
void dd_core(const QMat& rows, int d, QMat& out_rays, QMat& out_lin) {
  std::vector<QVec> lin(d, QVec(d, Rational(0)));
  for (int i = 0; i < d; ++i) lin[i][i] = 1;
  std::vector<Ray> rays;
  std::size_t processed = 0;

  for (const QVec& a : rows) {
    // lineality first: if some basis vector leaves the hyperplane, split it
    std::size_t hit = lin.size();
    for (std::size_t i = 0; i < lin.size(); ++i)
      if (dot(a, lin[i]) != 0) {
        hit = i;
        break;
      }
    if (hit != lin.size()) {
      QVec v = lin[hit];
      Rational s = dot(a, v);
      if (s < 0) {
        for (auto& x : v) x = -x;
        s = -s;
      }
      lin.erase(lin.begin() + hit);
      for (auto& w : lin) {
        const Rational t = dot(a, w);
        if (t == 0) continue;
        const Rational f = t / s;
        for (std::size_t j = 0; j < w.size(); ++j) w[j] -= f * v[j];
      }
      for (auto& r : rays) {
        const Rational t = dot(a, r.v);
        if (t != 0) {
          const Rational f = t / s;
          for (std::size_t j = 0; j < r.v.size(); ++j) r.v[j] -= f * v[j];
          make_primitive(r.v);
        }
        // the adjusted ray lies on the new hyperplane, and its products
        // against processed inequalities are unchanged (they vanish on v)
        r.tight.push_back(true);
      }
      Ray nr;
      nr.v = std::move(v);
      make_primitive(nr.v);
      // v came out of the lineality: tight at everything processed before,
      // strictly positive on the current inequality
      nr.tight.assign(processed, true);
      nr.tight.push_back(false);
      rays.push_back(std::move(nr));
      ++processed;
      continue;
    }

    // lineality inside the hyperplane: classic positive/zero/negative split
    std::vector<Rational> val(rays.size());
    bool has_neg = false;
    for (std::size_t i = 0; i < rays.size(); ++i) {
      val[i] = dot(a, rays[i].v);
      if (val[i] < 0) has_neg = true;
    }
    if (!has_neg) {
      for (std::size_t i = 0; i < rays.size(); ++i)
        rays[i].tight.push_back(val[i] == 0);
      ++processed;
      continue;
    }
    std::vector<Ray> next;
    for (std::size_t i = 0; i < rays.size(); ++i) {
      if (val[i] < 0) continue;
      Ray r = rays[i];
      r.tight.push_back(val[i] == 0);
      next.push_back(std::move(r));
    }
    for (std::size_t p = 0; p < rays.size(); ++p) {
      if (val[p] <= 0) continue;
      for (std::size_t m = 0; m < rays.size(); ++m) {
        if (val[m] >= 0) continue;
        // adjacency: no third ray tight everywhere both p and m are
        std::vector<bool> t(rays[p].tight.size());
        for (std::size_t k = 0; k < t.size(); ++k)
          t[k] = rays[p].tight[k] && rays[m].tight[k];
        bool adjacent = true;
        for (std::size_t q = 0; q < rays.size() && adjacent; ++q)
          if (q != p && q != m && tight_superset(rays[q].tight, t)) adjacent = false;
        if (!adjacent) continue;
        Ray combo;
        combo.v.resize(a.size());
        for (std::size_t j = 0; j < a.size(); ++j)
          combo.v[j] = val[p] * rays[m].v[j] - val[m] * rays[p].v[j];
        make_primitive(combo.v);
        combo.tight = std::move(t);
        combo.tight.push_back(true);
        next.push_back(std::move(combo));
      }
    }
    rays = std::move(next);
    ++processed;
  }

  out_rays.clear();
  for (auto& r : rays) out_rays.push_back(std::move(r.v));
  out_lin = QMat(lin.begin(), lin.end());
}

// Reduce v modulo the rref lineality basis (zero out the pivot coordinates).
void reduce_mod_lineality(QVec& v, const QMat& lin, const std::vector<int>& pivots) {
  for (std::size_t i = 0; i < lin.size(); ++i) {
    const Rational f = v[pivots[i]] / lin[i][pivots[i]];
    if (f == 0) continue;
    for (std::size_t j = 0; j < v.size(); ++j) v[j] -= f * lin[i][j];
  }
}

QMat canonical_basis(const QMat& space) {
  std::vector<int> pivots;
  QMat r = rref(space, &pivots);
  for (auto& row : r) row = to_rational(primitive_sign_normalized(row));
  return r;
}

}  // namespace

GeneratorSide dd_rays(const QMat& ineqs, const QMat& eqs, int dim) {
  for (const auto& r : ineqs) require(static_cast<int>(r.size()) == dim, "bad row size");
  for (const auto& r : eqs) require(static_cast<int>(r.size()) == dim, "bad row size");

  // substitute x = sum y_i n_i over the nullspace of the equations
  QMat basis;
  if (eqs.empty()) {
    basis.assign(dim, QVec(dim, Rational(0)));
    for (int i = 0; i < dim; ++i) basis[i][i] = 1;
  } else {
    basis = nullspace(eqs, dim);
  }
  const int d = static_cast<int>(basis.size());
  GeneratorSide out;
  if (d == 0) return out;

  QMat reduced;
  reduced.reserve(ineqs.size());
  for (const auto& a : ineqs) {
    QVec row(d);
    for (int i = 0; i < d; ++i) row[i] = dot(a, basis[i]);
    reduced.push_back(std::move(row));
  }

  QMat rays_y, lin_y;
  dd_core(reduced, d, rays_y, lin_y);

  auto back = [&](const QVec& y) {
    QVec x(dim, Rational(0));
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < dim; ++j) x[j] += y[i] * basis[i][j];
    return x;
  };
  QMat lin;
  for (const auto& y : lin_y) lin.push_back(back(y));
  out.lineality = canonical_basis(lin);
  std::vector<int> pivots;
  rref(out.lineality, &pivots);

  for (const auto& y : rays_y) {
    QVec x = back(y);
    reduce_mod_lineality(x, out.lineality, pivots);
    bool zero = true;
    for (const auto& c : x)
      if (c != 0) zero = false;
    ensure(!zero, "extreme ray degenerated to lineality");
    out.rays.push_back(to_rational(primitive(x)));
  }
  std::sort(out.rays.begin(), out.rays.end());
  return out;
}

InequalitySide dd_facets(const QMat& rays, const QMat& lineality, int dim) {
  GeneratorSide polar = dd_rays(rays, lineality, dim);
  return {polar.rays, polar.lineality};
}

int Cone::dim() const { return ambient - static_cast<int>(equations.size()); }

Cone cone_from_inequalities(const QMat& ineqs, const QMat& eqs, int dim) {
  Cone c;
  c.ambient = dim;
  GeneratorSide g = dd_rays(ineqs, eqs, dim);
  c.rays = g.rays;
  c.lineality = g.lineality;
  InequalitySide f = dd_facets(c.rays, c.lineality, dim);
  c.facets = f.facets;
  c.equations = f.equations;
  return c;
}

Cone cone_from_generators(const QMat& rays, const QMat& lineality, int dim) {
  Cone c;
  c.ambient = dim;
  InequalitySide f = dd_facets(rays, lineality, dim);
  c.facets = f.facets;
  c.equations = f.equations;
  GeneratorSide g = dd_rays(c.facets, c.equations, dim);
  c.rays = g.rays;
  c.lineality = g.lineality;
  return c;
}

ConeMembership cone_membership(const Cone& c, const QVec& v) {
  require(static_cast<int>(v.size()) == c.ambient, "vector has wrong dimension");
  ConeMembership out;
  bool outside = false, tight = false;
  for (const auto& e : c.equations) {
    out.equation_residuals.push_back(dot(e, v));
    if (out.equation_residuals.back() != 0) outside = true;
  }
  for (const auto& f : c.facets) {
    out.facet_products.push_back(dot(f, v));
    if (out.facet_products.back() < 0) outside = true;
    if (out.facet_products.back() == 0) tight = true;
  }
  out.where = outside ? Position::Outside
                      : (tight ? Position::Boundary : Position::Interior);
  return out;
}

VRep polyhedron_vertices(const HRep& h, int dim) {
  QMat ineqs = h.ineqs;
  QVec tpos(dim + 1, Rational(0));
  tpos[0] = 1;
  ineqs.push_back(tpos);
  GeneratorSide g = dd_rays(ineqs, h.eqs, dim + 1);
  VRep out;
  for (const auto& r : g.lineality) {
    ensure(r[0] == 0, "lineality escaped the homogenization hyperplane");
    out.lineality.push_back(QVec(r.begin() + 1, r.end()));
  }
  for (const auto& r : g.rays) {
    if (r[0] == 0) {
      out.rays.push_back(QVec(r.begin() + 1, r.end()));
    } else {
      QVec v(dim);
      for (int i = 0; i < dim; ++i) v[i] = r[i + 1] / r[0];
      out.vertices.push_back(std::move(v));
    }
  }
  std::sort(out.vertices.begin(), out.vertices.end());
  std::sort(out.rays.begin(), out.rays.end());
  return out;
}

HRep polyhedron_inequalities(const VRep& v, int dim) {
  require(!v.vertices.empty(), "H-representation needs a nonempty polyhedron");
  QMat gens;
  for (const auto& p : v.vertices) {
    QVec g(dim + 1, Rational(1));
    std::copy(p.begin(), p.end(), g.begin() + 1);
    gens.push_back(std::move(g));
  }
  for (const auto& r : v.rays) {
    QVec g(dim + 1, Rational(0));
    std::copy(r.begin(), r.end(), g.begin() + 1);
    gens.push_back(std::move(g));
  }
  QMat lin;
  for (const auto& l : v.lineality) {
    QVec g(dim + 1, Rational(0));
    std::copy(l.begin(), l.end(), g.begin() + 1);
    lin.push_back(std::move(g));
  }
  InequalitySide f = dd_facets(gens, lin, dim + 1);
  HRep out;
  for (const auto& row : f.facets) {
    bool trivial = true;
    for (int i = 1; i <= dim; ++i)
      if (row[i] != 0) trivial = false;
    if (!trivial) out.ineqs.push_back(row);
  }
  out.eqs = f.equations;
  return out;
}

bool hrep_contains(const HRep& h, const QVec& x) {
  for (const auto& row : h.ineqs) {
    Rational s = row[0];
    for (std::size_t i = 0; i < x.size(); ++i) s += row[i + 1] * x[i];
    if (s < 0) return false;
  }
  for (const auto& row : h.eqs) {
    Rational s = row[0];
    for (std::size_t i = 0; i < x.size(); ++i) s += row[i + 1] * x[i];
    if (s != 0) return false;
  }
  return true;
}

int polyhedron_dim(const VRep& v) {
  if (v.vertices.empty()) return -1;
  QMat dirs;
  for (std::size_t i = 1; i < v.vertices.size(); ++i) {
    QVec d(v.vertices[i].size());
    for (std::size_t j = 0; j < d.size(); ++j) d[j] = v.vertices[i][j] - v.vertices[0][j];
    dirs.push_back(std::move(d));
  }
  for (const auto& r : v.rays) dirs.push_back(r);
  for (const auto& l : v.lineality) dirs.push_back(l);
  return rank(dirs);
}

QVec relative_interior_point(const VRep& v) {
  require(!v.vertices.empty(), "empty polyhedron has no relative interior");
  const std::size_t n = v.vertices[0].size();
  QVec p(n, Rational(0));
  for (const auto& vert : v.vertices)
    for (std::size_t j = 0; j < n; ++j) p[j] += vert[j];
  const Rational k(static_cast<long>(v.vertices.size()));
  for (auto& x : p) x /= k;
  for (const auto& r : v.rays)
    for (std::size_t j = 0; j < n; ++j) p[j] += r[j];
  return p;
}

}  // namespace tropgeo
