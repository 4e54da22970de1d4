// SPDX-FileCopyrightText: 2026 The syzq authors
// SPDX-License-Identifier: MIT
//
// Exact lattice geometry: fans, moment polytopes, vertex charts, and divisor
// class reduction.  Everything here is integer or rational arithmetic; no
// floating point enters any membership or vertex computation.

#include "syzq/lattice.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <optional>

#include "syzq/errors.hpp"

namespace syzq::lattice {
namespace {

using RatVec = std::vector<rat>;
using RatMat = std::vector<std::vector<rat>>;

std::int64_t gcd64(std::int64_t a, std::int64_t b) {
  a = std::abs(a);
  b = std::abs(b);
  while (b != 0) {
    const std::int64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

bool is_primitive(const VecI& v) {
  std::int64_t g = 0;
  for (int i = 0; i < v.size(); ++i) g = gcd64(g, v(i));
  return g == 1;
}

/// Exact solve A·x = b by Gauss–Jordan over ℚ.  Returns nullopt if A is
/// singular.
std::optional<RatVec> rat_solve(RatMat A, RatVec b) {
  const int n = static_cast<int>(A.size());
  for (int t = 0; t < n; ++t) {
    int pivot = -1;
    for (int i = t; i < n; ++i) {
      if (!A[i][t].is_zero()) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) return std::nullopt;
    std::swap(A[t], A[pivot]);
    std::swap(b[t], b[pivot]);
    const rat inv_p = rat(1) / A[t][t];
    for (int j = t; j < n; ++j) A[t][j] = A[t][j] * inv_p;
    b[t] = b[t] * inv_p;
    for (int i = 0; i < n; ++i) {
      if (i == t || A[i][t].is_zero()) continue;
      const rat f = A[i][t];
      for (int j = t; j < n; ++j) A[i][j] = A[i][j] - f * A[t][j];
      b[i] = b[i] - f * b[t];
    }
  }
  return b;
}

bool lex_less(const RatVec& a, const RatVec& b) {
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] < b[i]) return true;
    if (b[i] < a[i]) return false;
  }
  return false;
}

bool lex_less_veci(const VecI& a, const VecI& b) {
  for (int i = 0; i < a.size(); ++i) {
    if (a(i) != b(i)) return a(i) < b(i);
  }
  return false;
}

bool veci_eq(const VecI& a, const VecI& b) {
  if (a.size() != b.size()) return false;
  for (int i = 0; i < a.size(); ++i)
    if (a(i) != b(i)) return false;
  return true;
}

/// Advances a k-combination of {0..d-1} in lexicographic order.
bool next_combination(std::vector<int>& idx, int d) {
  const int k = static_cast<int>(idx.size());
  for (int i = k - 1; i >= 0; --i) {
    if (idx[i] < d - (k - i)) {
      ++idx[i];
      for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

/// Exact adjugate of a small integer matrix (cofactor expansion).
MatI adjugate(const MatI& A) {
  const int n = static_cast<int>(A.rows());
  MatI adj(n, n);
  if (n == 1) {
    adj(0, 0) = 1;
    return adj;
  }
  MatI minor(n - 1, n - 1);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      int mr = 0;
      for (int r = 0; r < n; ++r) {
        if (r == i) continue;
        int mc = 0;
        for (int c = 0; c < n; ++c) {
          if (c == j) continue;
          minor(mr, mc) = A(r, c);
          ++mc;
        }
        ++mr;
      }
      const std::int64_t cof = integer_determinant(minor);
      adj(j, i) = (((i + j) & 1) ? -cof : cof);  // transpose of cofactors
    }
  }
  return adj;
}

/// Detects an integer recession direction y ≠ 0 with <v_k, y> ≥ 0 for all k.
/// Exact: if the normals do not span ℝⁿ a common-kernel vector recedes in
/// both directions; otherwise every extreme ray of the recession cone lies in
/// the kernel of some (n−1)-subset of normals of rank n−1.
void check_bounded(int n, const std::vector<VecI>& normals) {
  const int d = static_cast<int>(normals.size());
  MatI full(d, n);
  for (int k = 0; k < d; ++k) full.row(k) = normals[k].transpose();

  auto admits_ray = [&](const VecI& y) {
    if (y.isZero()) return false;
    bool plus = true, minus = true;
    for (int k = 0; k < d && (plus || minus); ++k) {
      const std::int64_t v = normals[k].dot(y);
      if (v < 0) plus = false;
      if (v > 0) minus = false;
    }
    return plus || minus;
  };

  const SmithDecomposition sf = smith_normal_form(full);
  if (sf.rank < n)
    fail(errc::unbounded,
         "facet normals do not span; the region has a translation direction");

  if (n == 1) return;  // rank 1 in dimension 1: both rays are cut off

  std::vector<int> idx(n - 1);
  std::iota(idx.begin(), idx.end(), 0);
  do {
    MatI sub(n - 1, n);
    for (int i = 0; i < n - 1; ++i) sub.row(i) = normals[idx[i]].transpose();
    const SmithDecomposition s = smith_normal_form(sub);
    if (s.rank != n - 1) continue;  // kernel not a line; rays found elsewhere
    const VecI y = s.V.col(n - 1);  // A·V·e_n = U⁻¹·D·e_n = 0
    if (admits_ray(y))
      fail(errc::unbounded, "facet data admits a recession direction");
  } while (next_combination(idx, d));
}

}  // namespace

Fan validate_fan(int n, std::vector<VecI> generators,
                 std::vector<std::vector<int>> max_cones) {
  if (n < 1) fail(errc::invalid_input, "fan dimension must be at least 1");
  const int d = static_cast<int>(generators.size());
  if (d < n + 1)
    fail(errc::invalid_input, "a complete fan needs at least n+1 generators");
  for (const VecI& v : generators) {
    if (v.size() != n)
      fail(errc::invalid_input, "generator has wrong dimension");
    if (v.isZero()) fail(errc::invalid_input, "generator is zero");
    if (!is_primitive(v))
      fail(errc::invalid_input, "generator is not primitive");
  }
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j)
      if (veci_eq(generators[i], generators[j]))
        fail(errc::invalid_input, "duplicate generator");
  if (max_cones.empty()) fail(errc::invalid_input, "fan has no maximal cones");

  std::vector<bool> used(d, false);
  for (auto& cone : max_cones) {
    if (static_cast<int>(cone.size()) != n)
      fail(errc::invalid_input, "maximal cone must have exactly n rays");
    std::sort(cone.begin(), cone.end());
    for (size_t i = 0; i + 1 < cone.size(); ++i)
      if (cone[i] == cone[i + 1])
        fail(errc::invalid_input, "maximal cone repeats a ray");
    MatI A(n, n);
    for (int i = 0; i < n; ++i) {
      const int k = cone[i];
      if (k < 0 || k >= d)
        fail(errc::invalid_input, "cone references a missing generator");
      A.row(i) = generators[k].transpose();
      used[k] = true;
    }
    const std::int64_t det = integer_determinant(A);
    if (det != 1 && det != -1)
      fail(errc::non_smooth_vertex, "maximal cone is not unimodular");
  }
  for (int k = 0; k < d; ++k)
    if (!used[k])
      fail(errc::invalid_input, "generator belongs to no maximal cone");

  Fan fan;
  fan.n = n;
  fan.generators = std::move(generators);
  fan.max_cones = std::move(max_cones);
  return fan;
}

std::int64_t Polytope::eval_facet(int k, const VecI& x) const {
  return normals[static_cast<size_t>(k)].dot(x) + offsets(k);
}

rat Polytope::eval_facet(int k, const std::vector<rat>& x) const {
  rat acc(offsets(k));
  const VecI& v = normals[static_cast<size_t>(k)];
  for (int i = 0; i < n; ++i) acc = acc + rat(v(i)) * x[static_cast<size_t>(i)];
  return acc;
}

bool Polytope::contains(const VecI& x) const {
  for (int k = 0; k < facet_count(); ++k)
    if (eval_facet(k, x) < 0) return false;
  return true;
}

Polytope polytope_from_halfspaces(int n, const std::vector<VecI>& normals,
                                  const VecI& offsets, bool require_smooth) {
  if (n < 1) fail(errc::invalid_input, "dimension must be at least 1");
  const int d = static_cast<int>(normals.size());
  if (offsets.size() != d)
    fail(errc::invalid_input, "offset count does not match facet count");
  if (d < n + 1)
    fail(errc::unbounded, "fewer than n+1 half-spaces cannot be bounded");
  for (const VecI& v : normals) {
    if (v.size() != n) fail(errc::invalid_input, "normal has wrong dimension");
    if (v.isZero()) fail(errc::invalid_input, "facet normal is zero");
  }

  check_bounded(n, normals);

  Polytope poly;
  poly.n = n;
  poly.normals = normals;
  poly.offsets = offsets;

  // Vertices: solve every nonsingular n-subset exactly and keep the feasible
  // solutions.  Active sets are recomputed from the point itself so that
  // coincident subsets dedupe cleanly.
  std::vector<int> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  do {
    MatI A(n, n);
    for (int i = 0; i < n; ++i) A.row(i) = normals[idx[i]].transpose();
    if (integer_determinant(A) == 0) continue;
    RatMat Ar(n, RatVec(n));
    RatVec br(n);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) Ar[i][j] = rat(A(i, j));
      br[i] = rat(-offsets(idx[i]));
    }
    const auto x = rat_solve(Ar, br);
    if (!x) continue;

    bool feasible = true;
    std::vector<int> active;
    for (int k = 0; k < d && feasible; ++k) {
      const rat val = poly.eval_facet(k, *x);
      if (val < rat(0)) feasible = false;
      else if (val.is_zero()) active.push_back(k);
    }
    if (!feasible) continue;

    bool seen = false;
    for (const auto& v : poly.vertices) {
      if (v == *x) {
        seen = true;
        break;
      }
    }
    if (seen) continue;
    poly.vertices.push_back(*x);
    poly.vertex_active.push_back(active);
  } while (next_combination(idx, d));

  if (poly.vertices.empty())
    fail(errc::invalid_input, "half-space data cuts out an empty region");

  // Sort vertices (with their active sets) lexicographically.
  std::vector<size_t> order(poly.vertices.size());
  std::iota(order.begin(), order.end(), size_t{0});
  std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
    return lex_less(poly.vertices[a], poly.vertices[b]);
  });
  std::vector<RatVec> sv;
  std::vector<std::vector<int>> sa;
  for (size_t i : order) {
    sv.push_back(poly.vertices[i]);
    sa.push_back(poly.vertex_active[i]);
  }
  poly.vertices = std::move(sv);
  poly.vertex_active = std::move(sa);

  if (require_smooth) {
    for (size_t vi = 0; vi < poly.vertices.size(); ++vi) {
      if (static_cast<int>(poly.vertex_active[vi].size()) != n)
        fail(errc::degenerate_vertex,
             "vertex lies on more than n facets (non-simple)");
      MatI A(n, n);
      for (int i = 0; i < n; ++i)
        A.row(i) = poly.normals[poly.vertex_active[vi][i]].transpose();
      const std::int64_t det = integer_determinant(A);
      if (det != 1 && det != -1)
        fail(errc::non_smooth_vertex,
             "active normals at a vertex are not unimodular");
    }
  }
  return poly;
}

Polytope polytope_from_fan(const Fan& fan, const VecI& lambda) {
  // Smoothness is certified on the fan's maximal cones by validate_fan, so
  // non-simple vertices (degenerate offsets collapsing several cones to one
  // vertex) are allowed here; the per-vertex cross-checks below take over.
  Polytope poly =
      polytope_from_halfspaces(fan.n, fan.generators, lambda, false);
  // Each vertex's active set must contain a maximal cone of the fan (for a
  // simple vertex that forces equality), otherwise the offsets are
  // incompatible with the fan's combinatorics.
  for (const auto& active : poly.vertex_active) {
    bool found = false;
    for (const auto& cone : fan.max_cones) {
      if (std::includes(active.begin(), active.end(), cone.begin(),
                        cone.end())) {
        found = true;
        break;
      }
    }
    if (!found)
      fail(errc::invalid_input,
           "vertex active set contains no maximal cone of the fan");
  }
  // Conversely every maximal cone must appear at some vertex (its facets
  // meet); a cone that never does signals mismatched fan/offset data.
  for (const auto& cone : fan.max_cones) {
    bool found = false;
    for (const auto& active : poly.vertex_active) {
      if (std::includes(active.begin(), active.end(), cone.begin(),
                        cone.end())) {
        found = true;
        break;
      }
    }
    if (!found)
      fail(errc::invalid_input,
           "a maximal cone of the fan is active at no vertex");
  }
  return poly;
}

std::vector<LatticePoint> enumerate_lattice_points(const Polytope& poly) {
  const int n = poly.n;
  std::vector<std::int64_t> lo(n), hi(n);
  for (int i = 0; i < n; ++i) {
    rat mn = poly.vertices.front()[static_cast<size_t>(i)];
    rat mx = mn;
    for (const auto& v : poly.vertices) {
      const rat& c = v[static_cast<size_t>(i)];
      if (c < mn) mn = c;
      if (mx < c) mx = c;
    }
    lo[i] = mn.ceil();
    hi[i] = mx.floor();
    if (lo[i] > hi[i]) return {};
  }

  std::vector<LatticePoint> out;
  VecI x(n);
  for (int i = 0; i < n; ++i) x(i) = lo[i];
  while (true) {
    bool inside = true, interior = true;
    for (int k = 0; k < poly.facet_count() && inside; ++k) {
      const std::int64_t v = poly.eval_facet(k, x);
      if (v < 0) inside = false;
      if (v == 0) interior = false;
    }
    if (inside) out.push_back({x, interior});

    int i = n - 1;
    for (; i >= 0; --i) {
      if (++x(i) <= hi[i]) break;
      x(i) = lo[i];
    }
    if (i < 0) break;
  }
  return out;
}

VertexChart vertex_chart(const Polytope& poly, int vertex_index) {
  if (vertex_index < 0 || vertex_index >= poly.vertex_count())
    fail(errc::invalid_input, "vertex index out of range");
  const int n = poly.n;
  std::vector<int> active = poly.vertex_active[static_cast<size_t>(vertex_index)];
  if (static_cast<int>(active.size()) != n)
    fail(errc::degenerate_vertex, "vertex does not have exactly n active facets");

  std::sort(active.begin(), active.end(), [&](int a, int b) {
    return lex_less_veci(poly.normals[static_cast<size_t>(a)],
                         poly.normals[static_cast<size_t>(b)]);
  });

  VertexChart chart;
  chart.facets = active;
  chart.A.resize(n, n);
  chart.lambda_active.resize(n);
  auto load = [&]() {
    for (int i = 0; i < n; ++i) {
      chart.A.row(i) = poly.normals[static_cast<size_t>(chart.facets[i])].transpose();
      chart.lambda_active(i) = poly.offsets(chart.facets[i]);
    }
  };
  load();
  chart.det = integer_determinant(chart.A);
  if (chart.det != 1 && chart.det != -1)
    fail(errc::non_smooth_vertex, "active normals are not unimodular");
  if (chart.det == -1 && n >= 2) {
    std::swap(chart.facets[n - 1], chart.facets[n - 2]);
    load();
    chart.det = integer_determinant(chart.A);
  }
  chart.A_inv = adjugate(chart.A) * chart.det;  // inverse since det = ±1
  return chart;
}

PicardClass picard_reduce(const Fan& fan, const VecI& a) {
  const int d = fan.ray_count();
  if (a.size() != d)
    fail(errc::invalid_input, "offset vector length does not match ray count");
  MatI B(d, fan.n);
  for (int k = 0; k < d; ++k) B.row(k) = fan.generators[static_cast<size_t>(k)].transpose();
  const SmithDecomposition s = smith_normal_form(B);

  VecI b = s.U * a;
  for (int i = 0; i < std::min<int>(d, fan.n); ++i) {
    const std::int64_t di = s.D(i, i);
    if (di > 0) {
      std::int64_t r = b(i) % di;
      if (r < 0) r += di;
      b(i) = r;
    }
  }
  return PicardClass{a, b};
}

Fan fan_p1() {
  VecI p(1), m(1);
  p << 1;
  m << -1;
  return validate_fan(1, {p, m}, {{0}, {1}});
}

Fan fan_p2() {
  VecI e1(2), e2(2), f(2);
  e1 << 1, 0;
  e2 << 0, 1;
  f << -1, -1;
  return validate_fan(2, {e1, e2, f}, {{0, 1}, {0, 2}, {1, 2}});
}

Fan fan_p1xp1() {
  VecI a(2), b(2), c(2), d(2);
  a << 1, 0;
  b << -1, 0;
  c << 0, 1;
  d << 0, -1;
  return validate_fan(2, {a, b, c, d}, {{0, 2}, {0, 3}, {1, 2}, {1, 3}});
}

}  // namespace syzq::lattice
