#include "tgf/words.hpp"

#include <sstream>
#include <stdexcept>

namespace tgf {

PointedForest evaluate(const Word& u) { return apply_word(identity(), u); }

PointedForest apply_word(PointedForest p, const Word& u) {
  for (unsigned gen : u) p = apply_generator(p, gen);
  return p;
}

bool check_relation(unsigned i, unsigned j, const PointedForest& p) {
  if (i == 0) throw std::invalid_argument("check_relation: i must be >= 1");
  return apply_word(p, {i, j}) == apply_word(p, {j, i - 1});
}

Word build_tree_word(const Tree& t) {
  Word out;
  if (t.is_leaf()) return out;
  const std::vector<Tree> parts = s_tree(t);  // parts[0] is a leaf
  for (std::size_t i = 1; i < parts.size(); ++i) {
    for (unsigned gen : shift_word(build_tree_word(parts[i]), 1))
      out.push_back(gen);
    out.push_back(1);
  }
  return out;
}

Word shift_word(const Word& u, unsigned q) {
  Word out;
  out.reserve(u.size());
  for (unsigned gen : u) {
    if (gen == 0)
      throw std::invalid_argument("shift_word: word contains x0");
    out.push_back(gen + q);
  }
  return out;
}

namespace {

// Assembles t from the run of trivial trees starting at position `offset`
// (pointer at 0). Right subtree first so the left subtree's leaf offsets
// stay valid; x_{offset+1} then merges the two finished children.
void build_at_offset(const Tree& t, std::size_t offset, Word& out) {
  if (t.is_leaf()) return;
  build_at_offset(t.right(), offset + t.left().leaves(), out);
  build_at_offset(t.left(), offset, out);
  out.push_back(static_cast<unsigned>(offset) + 1);
}

}  // namespace

Word build_fixed_pointer_word(const Forest& f) {
  std::vector<std::size_t> starts(f.size());
  std::size_t acc = 0;
  for (std::size_t i = 0; i < f.size(); ++i) {
    starts[i] = acc;
    acc += f.trees()[i].leaves();
  }
  Word out;
  for (std::size_t i = f.size(); i-- > 0;)
    build_at_offset(f.trees()[i], starts[i], out);
  return out;
}

Decomposition decompose(const PointedForest& p, const GammaParams& params) {
  if (!in_gamma(p, params)) {
    throw std::domain_error("decompose: " + to_string(p) +
                            " is not in Gamma(k=" + std::to_string(params.k) +
                            ", l=" + std::to_string(params.l) + ")");
  }
  Decomposition d;
  d.w = build_fixed_pointer_word(phi(p, params.l));
  const PointedForest q = skeleton(p, params.l);
  // Trees up to the pointer: build each in place, stepping right with x_0.
  for (std::size_t pos = 0; pos <= q.pointed_position; ++pos) {
    for (unsigned gen : build_tree_word(q.forest.at(pos))) d.v.push_back(gen);
    if (pos < q.pointed_position) d.v.push_back(0);
  }
  // Trees right of the pointer, in increasing distance; each finished tree
  // collapses into one slot, keeping later offsets valid.
  for (std::size_t pos = q.pointed_position + 1; pos < q.forest.size(); ++pos) {
    const Word sub = build_tree_word(q.forest.trees()[pos]);
    if (sub.empty()) continue;
    const unsigned dist = static_cast<unsigned>(pos - q.pointed_position);
    for (unsigned gen : shift_word(sub, dist)) d.v.push_back(gen);
  }
  return d;
}

std::string to_string(const Word& u) {
  std::string out;
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (i) out += ' ';
    out += 'x';
    out += std::to_string(u[i]);
  }
  return out;
}

Word parse_word(std::string_view text) {
  // trim
  while (!text.empty() && (text.front() == ' ' || text.front() == '\t' ||
                           text.front() == '\n' || text.front() == '\r'))
    text.remove_prefix(1);
  while (!text.empty() && (text.back() == ' ' || text.back() == '\t' ||
                           text.back() == '\n' || text.back() == '\r'))
    text.remove_suffix(1);
  Word out;
  std::size_t pos = 0;
  auto fail = [&](const std::string& what) {
    std::ostringstream os;
    os << "parse error at offset " << pos << ": " << what << " in \"" << text
       << "\"";
    throw std::invalid_argument(os.str());
  };
  while (pos < text.size()) {
    if (!out.empty()) {
      if (text[pos] != ' ') fail("expected ' '");
      ++pos;
    }
    if (pos >= text.size() || text[pos] != 'x') fail("expected 'x'");
    ++pos;
    if (pos >= text.size() || text[pos] < '0' || text[pos] > '9')
      fail("expected a generator index");
    unsigned long value = 0;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
      value = value * 10 + static_cast<unsigned long>(text[pos] - '0');
      if (value > (1ul << 30)) fail("generator index out of range");
      ++pos;
    }
    out.push_back(static_cast<unsigned>(value));
  }
  return out;
}

}  // namespace tgf
