// The caret-stripping map s, tree complexity, the position-weighted
// stripping map phi_l, and the Gamma_k^l membership test: a pointed forest
// lies in Gamma_k^l exactly when phi_l leaves at most k carets.

#pragma once

#include <cstddef>
#include <vector>

#include "tgf/forest.hpp"

namespace tgf {

// Parameters of the induced subgraph Gamma_k^l: elements expressible as wv
// with w of length <= k over all generators and v over x_0..x_l only.
// k = 0 is allowed; l must be >= 1.
struct GammaParams {
  unsigned k = 0;
  unsigned l = 1;
};

// s(Leaf) = [Leaf]; s(Caret(L, R)) = s(L) ++ [R]. Equivalently: repeatedly
// remove the top caret of the leftmost tree until it is trivial.
std::vector<Tree> s_tree(const Tree& t);

// s applied separately to each nontrivial tree, results concatenated.
Forest s_forest(const Forest& f);

// s applied m times to the single-tree forest [t] (resp. to f). The
// surviving subtrees are exactly those whose root path has >= m
// right-child steps.
Forest s_power(const Tree& t, unsigned m);
Forest s_power(const Forest& f, unsigned m);

// Minimum number of applications of s that trivialize t:
// complexity(Leaf) = 0, complexity(Caret(L, R)) = max(cpx(L), cpx(R) + 1).
unsigned complexity(const Tree& t);

// phi_j: s applied j times to the pointed tree and everything left of it,
// max(j - q, 0) times to the tree q positions right of it; the resulting
// forests concatenated in position order. Requires j >= 1. The pointer is
// discarded (only caret positions matter downstream).
Forest phi(const PointedForest& p, unsigned j);

// carets(phi(p, j)) without materializing the forest.
std::size_t phi_carets(const PointedForest& p, unsigned j);

// Membership in Gamma_k^l: carets(phi_l(P)) <= k.
bool in_gamma(const PointedForest& p, const GammaParams& params);

// Smallest pointed position placing f inside Gamma_k^l. Membership is
// monotone nondecreasing in the position and constant past the last
// nontrivial tree, so positions 0..size are scanned; throws
// std::domain_error if none qualifies (f is in Gamma at no position).
std::size_t min_pointed_position(const Forest& f, const GammaParams& params);

// Each tree of p, with the same per-tree s schedule as phi(p, l), has
// every maximal subtree that survives the schedule contracted to a leaf.
// phi(skeleton(p, l), l) is trivial, and the contracted subtrees read left
// to right equal phi(p, l).
PointedForest skeleton(const PointedForest& p, unsigned l);

}  // namespace tgf
