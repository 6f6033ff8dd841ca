#include "tgf/complexity.hpp"

#include <algorithm>
#include <stdexcept>

namespace tgf {

std::vector<Tree> s_tree(const Tree& t) {
  // s(Caret(L, R)) = s(L) ++ [R] unrolled along the left spine: collect the
  // right children top-down, then emit the bottom-left leaf first.
  std::vector<Tree> rights;
  Tree cur = t;
  while (!cur.is_leaf()) {
    rights.push_back(cur.right());
    cur = cur.left();
  }
  std::vector<Tree> out;
  out.reserve(rights.size() + 1);
  out.push_back(cur);
  out.insert(out.end(), rights.rbegin(), rights.rend());
  return out;
}

Forest s_forest(const Forest& f) {
  std::vector<Tree> out;
  for (const Tree& t : f.trees()) {
    if (t.is_leaf()) {
      out.push_back(t);
      continue;
    }
    std::vector<Tree> parts = s_tree(t);
    out.insert(out.end(), parts.begin(), parts.end());
  }
  return Forest(std::move(out));
}

namespace {

void s_power_into(const Tree& t, unsigned m, std::vector<Tree>& out) {
  // A subtree survives s^m intact iff its root path has >= m right-child
  // steps; descending left keeps the remaining budget, descending right
  // spends one.
  if (m == 0 || t.is_leaf()) {
    out.push_back(t);
    return;
  }
  s_power_into(t.left(), m, out);
  s_power_into(t.right(), m - 1, out);
}

std::size_t surviving_carets(const Tree& t, unsigned m) {
  if (m == 0) return t.carets();
  if (t.is_leaf()) return 0;
  return surviving_carets(t.left(), m) + surviving_carets(t.right(), m - 1);
}

// Number of s applications phi_j gives the tree at position pos.
unsigned phi_schedule(std::size_t pos, std::size_t pointer, unsigned j) {
  if (pos <= pointer) return j;
  const std::size_t q = pos - pointer;
  return q >= j ? 0u : j - static_cast<unsigned>(q);
}

void require_positive(unsigned j, const char* who) {
  if (j == 0) throw std::invalid_argument(std::string(who) + ": requires l >= 1");
}

}  // namespace

Forest s_power(const Tree& t, unsigned m) {
  std::vector<Tree> out;
  s_power_into(t, m, out);
  return Forest(std::move(out));
}

Forest s_power(const Forest& f, unsigned m) {
  std::vector<Tree> out;
  for (const Tree& t : f.trees()) s_power_into(t, m, out);
  return Forest(std::move(out));
}

unsigned complexity(const Tree& t) {
  if (t.is_leaf()) return 0;
  return std::max(complexity(t.left()), complexity(t.right()) + 1);
}

Forest phi(const PointedForest& p, unsigned j) {
  require_positive(j, "phi");
  std::vector<Tree> out;
  for (std::size_t pos = 0; pos < p.forest.size(); ++pos)
    s_power_into(p.forest.trees()[pos],
                 phi_schedule(pos, p.pointed_position, j), out);
  return Forest(std::move(out));
}

std::size_t phi_carets(const PointedForest& p, unsigned j) {
  require_positive(j, "phi_carets");
  std::size_t total = 0;
  for (std::size_t pos = 0; pos < p.forest.size(); ++pos)
    total += surviving_carets(p.forest.trees()[pos],
                              phi_schedule(pos, p.pointed_position, j));
  return total;
}

bool in_gamma(const PointedForest& p, const GammaParams& params) {
  return phi_carets(p, params.l) <= params.k;
}

std::size_t min_pointed_position(const Forest& f, const GammaParams& params) {
  // Past the last nontrivial tree every tree receives the full l
  // applications, so membership no longer depends on the position.
  for (std::size_t pos = 0; pos <= f.size(); ++pos)
    if (in_gamma(PointedForest{f, pos}, params)) return pos;
  throw std::domain_error(
      "min_pointed_position: forest lies in Gamma at no pointed position");
}

namespace {

Tree skeleton_tree(const Tree& t, unsigned m) {
  // Contract every maximal subtree surviving s^m to a single leaf.
  if (m == 0) return Tree();
  if (t.is_leaf()) return t;
  return Tree::caret(skeleton_tree(t.left(), m), skeleton_tree(t.right(), m - 1),
                     t.tag());
}

}  // namespace

PointedForest skeleton(const PointedForest& p, unsigned l) {
  require_positive(l, "skeleton");
  std::vector<Tree> out;
  out.reserve(p.forest.size());
  for (std::size_t pos = 0; pos < p.forest.size(); ++pos)
    out.push_back(skeleton_tree(p.forest.trees()[pos],
                                phi_schedule(pos, p.pointed_position, l)));
  return PointedForest{Forest(std::move(out)), p.pointed_position};
}

}  // namespace tgf
