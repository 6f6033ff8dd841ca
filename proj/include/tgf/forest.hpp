// Pointed binary forests: the data model for elements of the positive
// monoid of Thompson's group F, together with the generator actions and
// the stacking multiplication.

#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace tgf {

// Caret provenance marker. Inert: every algebraic operation and every
// comparison treats tagged and untagged carets identically.
enum class OriginTag : std::uint8_t { none, from_r, from_t };

// Immutable binary caret tree. A default-constructed Tree is the trivial
// tree (a single leaf). Copies share structure.
class Tree {
 public:
  Tree() = default;

  static Tree caret(Tree left, Tree right, OriginTag tag = OriginTag::none);

  bool is_leaf() const { return !node_; }
  const Tree& left() const;
  const Tree& right() const;
  OriginTag tag() const;

  // leaf count = caret count + 1; cached at construction
  std::size_t leaves() const;
  std::size_t carets() const { return leaves() - 1; }

 private:
  struct Node;
  std::shared_ptr<const Node> node_;
};

struct Tree::Node {
  Tree left;
  Tree right;
  std::size_t leaf_count;
  OriginTag tag;
};

inline const Tree& Tree::left() const { return node_->left; }
inline const Tree& Tree::right() const { return node_->right; }
inline OriginTag Tree::tag() const {
  return node_ ? node_->tag : OriginTag::none;
}
inline std::size_t Tree::leaves() const {
  return node_ ? node_->leaf_count : 1;
}

// Structural equality; tags are ignored.
bool operator==(const Tree& a, const Tree& b);
inline bool operator!=(const Tree& a, const Tree& b) { return !(a == b); }

// Returns t with every caret retagged (leaves carry no tags).
Tree tag_carets(const Tree& t, OriginTag tag);
bool contains_tag(const Tree& t, OriginTag tag);

// Finite prefix of an infinite forest: positions past the stored range
// read as implicit trivial trees. Canonical form is enforced on
// construction by trimming trailing trivial trees.
class Forest {
 public:
  Forest() = default;
  explicit Forest(std::vector<Tree> trees);

  std::size_t size() const { return trees_.size(); }  // stored length
  Tree at(std::size_t pos) const;                     // trivial past the end
  const std::vector<Tree>& trees() const { return trees_; }
  std::size_t carets() const;
  bool trivial() const { return trees_.empty(); }

 private:
  std::vector<Tree> trees_;
};

bool operator==(const Forest& a, const Forest& b);
inline bool operator!=(const Forest& a, const Forest& b) { return !(a == b); }

// Element of the positive monoid: a forest with one distinguished tree.
// The pointed position may exceed the stored range (a pointed trivial
// tree); equality is structural equality of the canonical forms.
struct PointedForest {
  Forest forest;
  std::size_t pointed_position = 0;

  Tree pointed_tree() const { return forest.at(pointed_position); }
  std::size_t carets() const { return forest.carets(); }
};

bool operator==(const PointedForest& a, const PointedForest& b);
inline bool operator!=(const PointedForest& a, const PointedForest& b) {
  return !(a == b);
}

// The monoid identity: all trivial trees, pointer on the leftmost.
inline PointedForest identity() { return PointedForest{}; }

// Right action of x_i. x_0 moves the pointer one tree to the right;
// x_i (i >= 1) merges the trees i-1 and i steps right of the pointer into
// a single caret (for i = 1 the new caret sits at the pointed position).
PointedForest apply_generator(const PointedForest& p, unsigned gen);

// Partial inverse action: the unique positive Q with
// apply_generator(Q, gen) == p, or absent when p x_gen^{-1} leaves the
// positive monoid (pointer already leftmost / tree to split is trivial).
std::optional<PointedForest> apply_generator_inverse(const PointedForest& p,
                                                     unsigned gen);

// Stacking multiplication: q sits on top of p, each tree of q grafted
// onto consecutive trees of p starting at p's pointed position. The
// result's pointer lands p.pointed_position + q.pointed_position.
PointedForest multiply(const PointedForest& p, const PointedForest& q);

// Replaces the j-th leaf of t (left to right) with the j-th tree of r;
// implicit trivial trees of r fill in past its stored range. Tags of t's
// carets are preserved.
Tree graft(const Forest& r, const Tree& t);

// Text grammar (ASCII, bit-exact):
//   tree    := "." | "(" tree tree ")"        no whitespace inside a tree
//   forest  := [ tree (" " tree)* ]
//   pforest := "p=" nat ":" (" " tree)*
// Parsers normalize rather than reject non-canonical input: trailing
// trivial trees are trimmed. Malformed text throws std::invalid_argument.
std::string to_string(const Tree& t);
std::string to_string(const Forest& f);
std::string to_string(const PointedForest& p);
Tree parse_tree(std::string_view text);
Forest parse_forest(std::string_view text);
PointedForest parse_pforest(std::string_view text);

}  // namespace tgf
