#include "tgf/random.hpp"

namespace tgf {

namespace {

std::size_t pick(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

}  // namespace

Tree random_tree(Rng& rng, std::size_t carets) {
  if (carets == 0) return Tree();
  const std::size_t left = pick(rng, 0, carets - 1);
  return Tree::caret(random_tree(rng, left),
                     random_tree(rng, carets - 1 - left));
}

Forest random_forest(Rng& rng, std::size_t max_trees, std::size_t max_carets) {
  const std::size_t slots = pick(rng, 0, max_trees);
  std::size_t budget = pick(rng, 0, max_carets);
  std::vector<Tree> trees;
  trees.reserve(slots);
  for (std::size_t i = 0; i < slots; ++i) {
    const std::size_t carets = budget == 0 ? 0 : pick(rng, 0, budget);
    budget -= carets;
    trees.push_back(random_tree(rng, carets));
  }
  return Forest(std::move(trees));
}

PointedForest random_pforest(Rng& rng, std::size_t max_trees,
                             std::size_t max_carets) {
  Forest f = random_forest(rng, max_trees, max_carets);
  const std::size_t pointer = pick(rng, 0, f.size() + 2);
  return PointedForest{std::move(f), pointer};
}

Word random_word(Rng& rng, std::size_t length, unsigned min_index,
                 unsigned max_index) {
  Word u;
  u.reserve(length);
  std::uniform_int_distribution<unsigned> dist(min_index, max_index);
  for (std::size_t i = 0; i < length; ++i) u.push_back(dist(rng));
  return u;
}

}  // namespace tgf
