#include "tgf/forest.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace tgf {

Tree Tree::caret(Tree left, Tree right, OriginTag tag) {
  Tree t;
  auto node = std::make_shared<Node>();
  node->leaf_count = left.leaves() + right.leaves();
  node->left = std::move(left);
  node->right = std::move(right);
  node->tag = tag;
  t.node_ = std::move(node);
  return t;
}

bool operator==(const Tree& a, const Tree& b) {
  if (a.is_leaf() || b.is_leaf()) return a.is_leaf() && b.is_leaf();
  if (&a.left() == &b.left() && &a.right() == &b.right()) return true;
  if (a.leaves() != b.leaves()) return false;
  return a.left() == b.left() && a.right() == b.right();
}

Tree tag_carets(const Tree& t, OriginTag tag) {
  if (t.is_leaf()) return t;
  return Tree::caret(tag_carets(t.left(), tag), tag_carets(t.right(), tag),
                     tag);
}

bool contains_tag(const Tree& t, OriginTag tag) {
  if (t.is_leaf()) return false;
  return t.tag() == tag || contains_tag(t.left(), tag) ||
         contains_tag(t.right(), tag);
}

Forest::Forest(std::vector<Tree> trees) : trees_(std::move(trees)) {
  while (!trees_.empty() && trees_.back().is_leaf()) trees_.pop_back();
}

Tree Forest::at(std::size_t pos) const {
  return pos < trees_.size() ? trees_[pos] : Tree();
}

std::size_t Forest::carets() const {
  std::size_t total = 0;
  for (const Tree& t : trees_) total += t.carets();
  return total;
}

bool operator==(const Forest& a, const Forest& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a.trees()[i] != b.trees()[i]) return false;
  return true;
}

bool operator==(const PointedForest& a, const PointedForest& b) {
  return a.pointed_position == b.pointed_position && a.forest == b.forest;
}

PointedForest apply_generator(const PointedForest& p, unsigned gen) {
  if (gen == 0) return PointedForest{p.forest, p.pointed_position + 1};
  const std::size_t pos = p.pointed_position + gen - 1;
  std::vector<Tree> out = p.forest.trees();
  if (out.size() < pos + 2) out.resize(pos + 2);  // pad with trivial trees
  out[pos] = Tree::caret(out[pos], out[pos + 1]);
  out.erase(out.begin() + static_cast<std::ptrdiff_t>(pos) + 1);
  return PointedForest{Forest(std::move(out)), p.pointed_position};
}

std::optional<PointedForest> apply_generator_inverse(const PointedForest& p,
                                                     unsigned gen) {
  if (gen == 0) {
    if (p.pointed_position == 0) return std::nullopt;
    return PointedForest{p.forest, p.pointed_position - 1};
  }
  const std::size_t pos = p.pointed_position + gen - 1;
  const Tree t = p.forest.at(pos);
  if (t.is_leaf()) return std::nullopt;
  std::vector<Tree> out = p.forest.trees();  // pos is stored: t is nontrivial
  out[pos] = t.left();
  out.insert(out.begin() + static_cast<std::ptrdiff_t>(pos) + 1, t.right());
  return PointedForest{Forest(std::move(out)), p.pointed_position};
}

namespace {

// Grafts t onto trees of r starting at *cursor, advancing the cursor by one
// consumed tree per leaf of t.
Tree graft_from(const Forest& r, std::size_t& cursor, const Tree& t) {
  if (t.is_leaf()) return r.at(cursor++);
  Tree left = graft_from(r, cursor, t.left());
  Tree right = graft_from(r, cursor, t.right());
  return Tree::caret(std::move(left), std::move(right), t.tag());
}

}  // namespace

Tree graft(const Forest& r, const Tree& t) {
  std::size_t cursor = 0;
  return graft_from(r, cursor, t);
}

PointedForest multiply(const PointedForest& p, const PointedForest& q) {
  const std::vector<Tree>& pt = p.forest.trees();
  std::vector<Tree> out;
  out.reserve(pt.size() + q.forest.size());
  const std::size_t kept = std::min(p.pointed_position, pt.size());
  out.assign(pt.begin(), pt.begin() + static_cast<std::ptrdiff_t>(kept));
  out.resize(p.pointed_position);  // pointed position beyond the stored range
  std::size_t cursor = p.pointed_position;
  for (const Tree& t : q.forest.trees()) out.push_back(graft_from(p.forest, cursor, t));
  // q's implicit trivial tail passes the remaining trees of p through
  for (std::size_t i = cursor; i < pt.size(); ++i) out.push_back(pt[i]);
  return PointedForest{Forest(std::move(out)),
                       p.pointed_position + q.pointed_position};
}

namespace {

struct Cursor {
  std::string_view text;
  std::size_t pos = 0;

  bool done() const { return pos >= text.size(); }
  char peek() const { return text[pos]; }
  [[noreturn]] void fail(const std::string& what) const {
    std::ostringstream os;
    os << "parse error at offset " << pos << ": " << what << " in \"" << text
       << "\"";
    throw std::invalid_argument(os.str());
  }
  void expect(char c) {
    if (done() || peek() != c) fail(std::string("expected '") + c + "'");
    ++pos;
  }
};

std::string_view trimmed(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' ||
                        s.front() == '\n' || s.front() == '\r'))
    s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' ||
                        s.back() == '\n' || s.back() == '\r'))
    s.remove_suffix(1);
  return s;
}

std::size_t parse_nat(Cursor& c) {
  if (c.done() || c.peek() < '0' || c.peek() > '9') c.fail("expected a number");
  std::size_t value = 0;
  while (!c.done() && c.peek() >= '0' && c.peek() <= '9') {
    value = value * 10 + static_cast<std::size_t>(c.peek() - '0');
    if (value > (std::size_t{1} << 40)) c.fail("number out of range");
    ++c.pos;
  }
  return value;
}

Tree parse_tree_at(Cursor& c) {
  if (c.done()) c.fail("expected a tree");
  if (c.peek() == '.') {
    ++c.pos;
    return Tree();
  }
  if (c.peek() == '(') {
    ++c.pos;
    Tree left = parse_tree_at(c);
    Tree right = parse_tree_at(c);
    c.expect(')');
    return Tree::caret(std::move(left), std::move(right));
  }
  c.fail("expected '.' or '('");
}

}  // namespace

std::string to_string(const Tree& t) {
  if (t.is_leaf()) return ".";
  return "(" + to_string(t.left()) + to_string(t.right()) + ")";
}

std::string to_string(const Forest& f) {
  std::string out;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (i) out += ' ';
    out += to_string(f.trees()[i]);
  }
  return out;
}

std::string to_string(const PointedForest& p) {
  std::string out = "p=" + std::to_string(p.pointed_position) + ":";
  for (const Tree& t : p.forest.trees()) {
    out += ' ';
    out += to_string(t);
  }
  return out;
}

Tree parse_tree(std::string_view text) {
  Cursor c{trimmed(text)};
  Tree t = parse_tree_at(c);
  if (!c.done()) c.fail("trailing input after tree");
  return t;
}

Forest parse_forest(std::string_view text) {
  Cursor c{trimmed(text)};
  std::vector<Tree> trees;
  if (!c.done()) {
    trees.push_back(parse_tree_at(c));
    while (!c.done()) {
      c.expect(' ');
      trees.push_back(parse_tree_at(c));
    }
  }
  return Forest(std::move(trees));
}

PointedForest parse_pforest(std::string_view text) {
  Cursor c{trimmed(text)};
  c.expect('p');
  c.expect('=');
  const std::size_t pointer = parse_nat(c);
  c.expect(':');
  std::vector<Tree> trees;
  while (!c.done()) {
    c.expect(' ');
    trees.push_back(parse_tree_at(c));
  }
  return PointedForest{Forest(std::move(trees)), pointer};
}

}  // namespace tgf
