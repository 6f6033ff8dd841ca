// Seeded random generators for trees, forests and words; shared by the
// randomized CLI suites and the property tests.

#pragma once

#include <random>

#include "tgf/forest.hpp"
#include "tgf/words.hpp"

namespace tgf {

using Rng = std::mt19937_64;

// Uniformly random caret split, exactly `carets` carets.
Tree random_tree(Rng& rng, std::size_t carets);

// Up to max_trees stored slots with max_carets carets scattered over them.
Forest random_forest(Rng& rng, std::size_t max_trees, std::size_t max_carets);

// Random forest plus a pointer within [0, stored length + 2].
PointedForest random_pforest(Rng& rng, std::size_t max_trees,
                             std::size_t max_carets);

// `length` letters with indices in [min_index, max_index].
Word random_word(Rng& rng, std::size_t length, unsigned min_index,
                 unsigned max_index);

}  // namespace tgf
