// The explicit Ponzi flow on Gamma_k^l: the x_0-edge weight c_P, edge
// values, divergence, and exhaustive verification over BFS balls.

#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "tgf/cayley.hpp"
#include "tgf/complexity.hpp"
#include "tgf/forest.hpp"

namespace tgf {

// Number of nontrivial trees left of the pointer onto which the pointer
// could move while staying inside Gamma_k^l; by position monotonicity this
// is the nontrivial count between min_pointed_position and the pointer.
// Throws std::domain_error when p is not a member.
std::size_t c_value(const PointedForest& p, const GammaParams& params);

// The flow: G(P, P x_0^{-1}) = c_P, G(P, P x_1^{-1}) = 1 when the pointed
// tree is nontrivial, antisymmetric mirrors, zero on every other pair.
// Both arguments must be members; non-adjacent pairs give 0.
long long flow_value(const PointedForest& a, const PointedForest& b,
                     const GammaParams& params);

// Net inward flow at p, from local membership tests only:
//   c_{P x_0} - c_P [P x_0^{-1} member] + 1 - [x_1^{-1} edge present].
long long divergence(const PointedForest& p, const GammaParams& params);

struct Violation {
  std::string vertex;
  std::string reason;
};

struct VerificationReport {
  GammaParams params;
  unsigned radius = 0;
  std::size_t vertex_count = 0;
  long long min_divergence = 0;
  long long max_abs_flow = 0;
  long long max_c = 0;
  long long max_right_nontrivial = 0;
  std::vector<Violation> violations;
};

// Checks every vertex of the radius-r ball of Gamma_k^l: divergence >= 1,
// |flow| <= k+l on incident edges, c_P <= k+l, and at the minimal pointed
// position of the underlying forest at most k+l nontrivial trees right of
// the pointer. Neighbor memberships are decided directly, never read off
// the truncated ball, so boundary vertices are verified exactly.
// Violations are collected, not thrown. Results are identical for any
// worker count.
VerificationReport verify_ball(const GammaParams& params, unsigned radius,
                               unsigned jobs = 1);

}  // namespace tgf
