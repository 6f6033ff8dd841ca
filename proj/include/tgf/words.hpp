// Positive words over the infinite generating set x_0, x_1, x_2, ...,
// their evaluation to pointed forests, and the P = wv decomposition for
// members of Gamma_k^l.

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "tgf/complexity.hpp"
#include "tgf/forest.hpp"

namespace tgf {

// A positive word: the sequence of generator indices, applied left to
// right (right multiplication throughout).
using Word = std::vector<unsigned>;

PointedForest evaluate(const Word& u);
PointedForest apply_word(PointedForest p, const Word& u);

// The defining relation x_i x_j = x_j x_{i-1}, tested on a concrete
// element. Holds for i > j + 1 (the i = j + 1 case genuinely fails, e.g.
// x_1 x_0 != x_0 x_0). Requires i >= 1.
bool check_relation(unsigned i, unsigned j, const PointedForest& p);

// Word building the single tree t at the pointed position: each tree of
// s(t) is built one slot right of the pointer (indices shifted by one),
// then x_1 reattaches the spine caret. Uses only x_1..x_complexity(t);
// length equals carets(t).
Word build_tree_word(const Tree& t);

// Index shift x_i -> x_{i+q}: builds the same tree q positions further
// right without moving the pointer. Throws if u contains x_0.
Word shift_word(const Word& u, unsigned q);

// Word building the whole forest f with the pointer fixed at 0 (no x_0 is
// ever emitted; indices may exceed any complexity bound). Trees are built
// rightmost first, each from its leaf offset, so earlier offsets stay
// valid as completed trees collapse into single slots. Length equals
// carets(f).
Word build_fixed_pointer_word(const Forest& f);

struct Decomposition {
  Word w;  // places the phi_l survivors, pointer fixed; |w| <= k
  Word v;  // builds the skeleton; indices <= l
};

// P = wv for members of Gamma_k^l. Throws std::domain_error when P is not
// a member.
Decomposition decompose(const PointedForest& p, const GammaParams& params);

// Word text: "x1 x0"; the empty string is the empty word.
std::string to_string(const Word& u);
Word parse_word(std::string_view text);

}  // namespace tgf
