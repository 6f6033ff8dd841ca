// Shared test utilities: exhaustive tree enumeration and independent
// oracle implementations kept deliberately separate from the library's
// code paths.

#pragma once

#include <map>
#include <vector>

#include "tgf/complexity.hpp"
#include "tgf/forest.hpp"
#include "tgf/random.hpp"
#include "tgf/words.hpp"

namespace tgf::test {

// All binary trees with exactly `leaves` leaves (Catalan(leaves - 1) many).
inline const std::vector<Tree>& all_trees(std::size_t leaves) {
  static std::map<std::size_t, std::vector<Tree>> memo;
  auto it = memo.find(leaves);
  if (it != memo.end()) return it->second;
  std::vector<Tree> result;
  if (leaves == 1) {
    result.push_back(Tree());
  } else {
    for (std::size_t left = 1; left < leaves; ++left)
      for (const Tree& l : all_trees(left))
        for (const Tree& r : all_trees(leaves - left))
          result.push_back(Tree::caret(l, r));
  }
  return memo.emplace(leaves, std::move(result)).first->second;
}

// Oracle for s: repeatedly remove the top caret of the leftmost tree until
// the leftmost tree is trivial. Independent of the library recursion.
inline std::vector<Tree> iterative_s_tree(const Tree& t) {
  std::vector<Tree> work{t};
  while (!work.front().is_leaf()) {
    const Tree top = work.front();
    work.erase(work.begin());
    work.insert(work.begin(), {top.left(), top.right()});
  }
  return work;
}

inline std::vector<Tree> oracle_s_forest(const std::vector<Tree>& forest) {
  std::vector<Tree> out;
  for (const Tree& t : forest) {
    if (t.is_leaf()) {
      out.push_back(t);
      continue;
    }
    const std::vector<Tree> parts = iterative_s_tree(t);
    out.insert(out.end(), parts.begin(), parts.end());
  }
  return out;
}

inline bool all_trivial(const std::vector<Tree>& forest) {
  for (const Tree& t : forest)
    if (!t.is_leaf()) return false;
  return true;
}

// Oracle for complexity: iterate the oracle s until everything is trivial.
inline unsigned oracle_complexity(const Tree& t) {
  std::vector<Tree> work{t};
  unsigned steps = 0;
  while (!all_trivial(work)) {
    work = oracle_s_forest(work);
    ++steps;
  }
  return steps;
}

// Right-child step counts on the root path of every caret, preorder.
inline void caret_right_moves(const Tree& t, unsigned moves,
                              std::vector<unsigned>& out) {
  if (t.is_leaf()) return;
  out.push_back(moves);
  caret_right_moves(t.left(), moves, out);
  caret_right_moves(t.right(), moves + 1, out);
}

// Independent skeleton: contract each subtree whose root path already has
// m right-child steps (those survive s^m whole).
inline Tree ref_skeleton_tree(const Tree& t, unsigned m, unsigned moves = 0) {
  if (moves >= m) return Tree();
  if (t.is_leaf()) return t;
  return Tree::caret(ref_skeleton_tree(t.left(), m, moves),
                     ref_skeleton_tree(t.right(), m, moves + 1));
}

// Random member of Gamma_k^l by construction: w of length <= k over any
// indices, then v over x_0..x_l.
inline PointedForest random_gamma_member(Rng& rng, const GammaParams& params,
                                         std::size_t v_length) {
  std::uniform_int_distribution<std::size_t> w_len(0, params.k);
  const Word w = random_word(rng, w_len(rng), 0, 6);
  const Word v = random_word(rng, v_length, 0, params.l);
  return apply_word(evaluate(w), v);
}

}  // namespace tgf::test

#include "tgf/chains.hpp"

namespace tgf::test {

// Connected graph on n vertices with maximum degree strictly respected:
// a random spanning tree (an under-degree parent always exists), then
// extra edges while both endpoints stay under the bound.
inline ExplicitGraph random_connected_graph(Rng& rng, std::size_t n,
                                            std::size_t degree_bound) {
  std::vector<std::pair<unsigned, unsigned>> edges;
  std::vector<std::size_t> degree(n, 0);
  for (unsigned v = 1; v < n; ++v) {
    std::vector<unsigned> candidates;
    for (unsigned u = 0; u < v; ++u)
      if (degree[u] < degree_bound) candidates.push_back(u);
    std::uniform_int_distribution<std::size_t> pick(0, candidates.size() - 1);
    const unsigned u = candidates[pick(rng)];
    edges.emplace_back(u, v);
    ++degree[u];
    ++degree[v];
  }
  if (n >= 2) {
    std::uniform_int_distribution<unsigned> any(0, static_cast<unsigned>(n) - 1);
    for (std::size_t extra = 0; extra < n / 2; ++extra) {
      const unsigned u = any(rng);
      const unsigned v = any(rng);
      if (u == v || degree[u] >= degree_bound || degree[v] >= degree_bound)
        continue;
      edges.emplace_back(u, v);
      ++degree[u];
      ++degree[v];
    }
  }
  return ExplicitGraph::make(n, std::move(edges));
}

// Random chain with coefficients in [-coeff_bound, coeff_bound] on pairs
// within `radius` hops of each other (a random walk keeps the distance
// bounded).
inline UFChain random_chain(Rng& rng, const ExplicitGraph& g, unsigned radius,
                            long long coeff_bound) {
  UFChain c;
  std::uniform_int_distribution<unsigned> vertex(
      0, static_cast<unsigned>(g.n) - 1);
  std::uniform_int_distribution<long long> coeff(-coeff_bound, coeff_bound);
  std::uniform_int_distribution<std::size_t> count(1, 1 + 3 * g.n / 2);
  std::uniform_int_distribution<unsigned> hops(0, radius);
  const std::size_t entries = count(rng);
  for (std::size_t i = 0; i < entries; ++i) {
    const unsigned x = vertex(rng);
    unsigned y = x;
    const unsigned walk = hops(rng);
    for (unsigned hop = 0; hop < walk; ++hop) {
      const auto& adj = g.adj[y];
      if (adj.empty()) break;
      std::uniform_int_distribution<std::size_t> step(0, adj.size() - 1);
      y = adj[step(rng)];
    }
    c.add(x, y, coeff(rng));
  }
  return c;
}

}  // namespace tgf::test
