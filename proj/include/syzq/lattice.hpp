// SPDX-FileCopyrightText: 2026 The syzq authors
// SPDX-License-Identifier: MIT
//
// Exact lattice geometry: fans, moment polytopes, vertex charts, and divisor
// class reduction.
//
// A complete smooth fan in ℝⁿ is given by primitive integer generators
// v_1..v_d and its maximal cones (index sets of size n whose generator matrix
// is unimodular).  An offset vector λ ∈ ℤ^d cuts the polytope
//     B = { x ∈ ℝⁿ : l_k(x) := <x, v_k> + λ_k ≥ 0 for all k },
// whose vertices, lattice points, and per-vertex unimodular charts are
// computed here with exact rational arithmetic.  The divisor class of λ is
// reduced modulo the sublattice { (<u,v_1>,...,<u,v_d>) : u ∈ ℤⁿ } via Smith
// normal form.

#ifndef SYZQ_LATTICE_HPP
#define SYZQ_LATTICE_HPP

#include <string>
#include <vector>

#include "syzq/rational.hpp"
#include "syzq/smith.hpp"

namespace syzq::lattice {

using syzq::MatI;
using syzq::VecI;

/// Complete smooth fan data.  Invariants (checked by validate_fan):
/// n ≥ 1, d ≥ n+1, generators primitive and spanning ℝⁿ, max cones of size n
/// with |det| = 1, every generator used by some max cone.
struct Fan {
  int n = 0;
  std::vector<VecI> generators;
  std::vector<std::vector<int>> max_cones;  ///< 0-based generator indices
  int ray_count() const { return static_cast<int>(generators.size()); }
};

Fan validate_fan(int n, std::vector<VecI> generators,
                 std::vector<std::vector<int>> max_cones);

/// Bounded lattice polytope in half-space form, with exact vertex data.
struct Polytope {
  int n = 0;
  std::vector<VecI> normals;  ///< inward facet normals v_k
  VecI offsets;               ///< λ_k, facet k is {l_k = 0}
  std::vector<std::vector<rat>> vertices;          ///< lex-sorted, exact
  std::vector<std::vector<int>> vertex_active;     ///< active facet index sets

  int facet_count() const { return static_cast<int>(normals.size()); }
  int vertex_count() const { return static_cast<int>(vertices.size()); }

  /// l_k(x) for integer x, exactly.
  std::int64_t eval_facet(int k, const VecI& x) const;
  /// l_k(x) for rational x, exactly.
  rat eval_facet(int k, const std::vector<rat>& x) const;
  /// Membership test for integer points (all facets ≥ 0), exact.
  bool contains(const VecI& x) const;
};

/// Builds the polytope cut out by inward normals and integer offsets.
/// Throws: Unbounded if the data admits a recession direction; and, only
///         when require_smooth: DegenerateVertex if a vertex is non-simple
///         (more than n active facets), NonSmoothVertex if an active normal
///         matrix has |det| ≠ 1.  With require_smooth = false non-simple
///         vertices are kept, with all active facets recorded.
Polytope polytope_from_halfspaces(int n, const std::vector<VecI>& normals,
                                  const VecI& offsets,
                                  bool require_smooth = true);

/// Same, from a validated fan (whose maximal cones are already unimodular):
/// cross-checks that every vertex's active set contains a maximal cone
/// (equality when the vertex is simple) and that every maximal cone is
/// active at some vertex.  Degenerate offsets that collapse several cones
/// to one vertex — down to a single point — are accepted.
Polytope polytope_from_fan(const Fan& fan, const VecI& lambda);

struct LatticePoint {
  VecI x;
  bool interior = false;  ///< all facet values strictly positive
};

/// All integer points of the polytope in increasing lexicographic order,
/// each labelled interior/boundary.  Exact (bounding box + facet tests).
std::vector<LatticePoint> enumerate_lattice_points(const Polytope& poly);

/// Unimodular chart at a vertex: A has the active facet normals as rows,
/// ordered lexicographically and then (for n ≥ 2) adjusted by one swap of the
/// last two rows so that det A = +1 whenever possible.  lambda_active lists
/// the matching offsets, so A·x + lambda_active = (l_{k_1}(x),...,l_{k_n}(x)).
struct VertexChart {
  MatI A;
  MatI A_inv;  ///< exact integer inverse (|det A| = 1)
  VecI lambda_active;
  std::vector<int> facets;  ///< facet indices in row order
  std::int64_t det = 0;
};

/// Throws: DegenerateVertex if the vertex does not have exactly n active
/// facets; NonSmoothVertex if the active normal matrix has |det| ≠ 1.
VertexChart vertex_chart(const Polytope& poly, int vertex_index);

/// Divisor class of an offset vector a ∈ ℤ^d, reduced canonically modulo the
/// image of u ↦ (<u,v_1>,...,<u,v_d>).  Two vectors are equivalent iff their
/// `reduced` fields agree.
struct PicardClass {
  VecI a;
  VecI reduced;
};

PicardClass picard_reduce(const Fan& fan, const VecI& a);

// --- small bundled catalog used by tests and documentation -----------------

/// Projective line:  generators +1, −1.
Fan fan_p1();
/// Projective plane: generators (1,0), (0,1), (−1,−1).
Fan fan_p2();
/// Product of two projective lines: (±1,0), (0,±1).
Fan fan_p1xp1();

}  // namespace syzq::lattice

#endif  // SYZQ_LATTICE_HPP
