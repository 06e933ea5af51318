#include "tamari/tree.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>
#include <utility>

namespace tamari {

namespace {

std::size_t mix(std::size_t h) {
  h ^= h >> 30;
  h *= 0xbf58476d1ce4e5b9ULL;
  h ^= h >> 27;
  h *= 0x94d049bb133111ebULL;
  h ^= h >> 31;
  return h;
}

}  // namespace

const Tree& Tree::left() const {
  if (!node_) throw std::logic_error("left() on a leaf");
  return node_->left;
}

const Tree& Tree::right() const {
  if (!node_) throw std::logic_error("right() on a leaf");
  return node_->right;
}

Tree join(const Tree& l, const Tree& r) {
  Tree t;
  int gamma = r.height() - l.height();
  Tree::Node n{
      l,
      r,
      l.size() + r.size() + 1,
      1 + std::max(l.height(), r.height()),
      l.balanced() && r.balanced() && gamma >= -1 && gamma <= 1,
      mix((l.hash() * 0x9e3779b97f4a7c15ULL) ^ (r.hash() + 0x165667b19e3779f9ULL)),
  };
  t.node_ = std::make_shared<const Tree::Node>(std::move(n));
  return t;
}

bool operator==(const Tree& a, const Tree& b) {
  if (a.node_ == b.node_) return true;
  if (!a.node_ || !b.node_) return false;
  if (a.node_->size != b.node_->size || a.node_->hash != b.node_->hash) return false;
  return a.left() == b.left() && a.right() == b.right();
}

Tree subtree_at(const Tree& t, int pos) {
  if (pos < 1 || pos > t.size()) throw std::out_of_range("node position out of range");
  const Tree* cur = &t;
  while (true) {
    int nl = cur->left().size();
    if (pos == nl + 1) return *cur;
    if (pos <= nl) {
      cur = &cur->left();
    } else {
      pos -= nl + 1;
      cur = &cur->right();
    }
  }
}

int imbalance(const Tree& t, int pos) {
  Tree s = subtree_at(t, pos);
  return s.right().height() - s.left().height();
}

std::vector<int> imbalance_labels(const Tree& t) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(t.size()));
  auto walk = [&](auto&& self, const Tree& s) -> void {
    if (s.is_leaf()) return;
    self(self, s.left());
    out.push_back(s.right().height() - s.left().height());
    self(self, s.right());
  };
  walk(walk, t);
  return out;
}

LabeledTreePtr label_with_imbalance(const Tree& t) {
  if (t.is_leaf()) return nullptr;
  auto node = std::make_shared<LabeledTree>();
  node->label = t.right().height() - t.left().height();
  node->left = label_with_imbalance(t.left());
  node->right = label_with_imbalance(t.right());
  return node;
}

bool tree_less(const Tree& a, const Tree& b) {
  if (a == b) return false;
  const Tree* pa = &a;
  const Tree* pb = &b;
  // Preorder walk with explicit stacks; first position where one side has a
  // leaf and the other a node decides.
  std::vector<const Tree*> sa{pa}, sb{pb};
  while (!sa.empty() && !sb.empty()) {
    const Tree* x = sa.back();
    const Tree* y = sb.back();
    sa.pop_back();
    sb.pop_back();
    if (x->is_leaf() != y->is_leaf()) return x->is_leaf();
    if (!x->is_leaf()) {
      sa.push_back(&x->right());
      sa.push_back(&x->left());
      sb.push_back(&y->right());
      sb.push_back(&y->left());
    }
  }
  return !sa.empty() ? false : !sb.empty();
}

std::vector<Tree> all_trees(int n) {
  if (n < 0) throw std::invalid_argument("node count must be non-negative");
  std::vector<std::vector<Tree>> memo(static_cast<std::size_t>(n) + 1);
  memo[0] = {Tree::leaf()};
  for (int m = 1; m <= n; ++m) {
    for (int i = 0; i < m; ++i) {
      for (const Tree& l : memo[static_cast<std::size_t>(i)])
        for (const Tree& r : memo[static_cast<std::size_t>(m - 1 - i)])
          memo[static_cast<std::size_t>(m)].push_back(join(l, r));
    }
  }
  return std::move(memo[static_cast<std::size_t>(n)]);
}

namespace {

// Balanced trees with exactly n nodes and height exactly h.
const std::vector<Tree>& balanced_nh(int n, int h,
                                     std::vector<std::vector<std::vector<Tree>>>& memo,
                                     std::vector<std::vector<bool>>& done) {
  auto& slot = memo[static_cast<std::size_t>(n)][static_cast<std::size_t>(h)];
  if (done[static_cast<std::size_t>(n)][static_cast<std::size_t>(h)]) return slot;
  done[static_cast<std::size_t>(n)][static_cast<std::size_t>(h)] = true;
  if (n == 0) {
    if (h == 0) slot = {Tree::leaf()};
    return slot;
  }
  if (h == 0) return slot;
  const std::pair<int, int> shapes[3] = {{h - 1, h - 1}, {h - 1, h - 2}, {h - 2, h - 1}};
  for (auto [hl, hr] : shapes) {
    if (hl < 0 || hr < 0) continue;
    for (int nl = 0; nl < n; ++nl) {
      int nr = n - 1 - nl;
      for (const Tree& l : balanced_nh(nl, hl, memo, done))
        for (const Tree& r : balanced_nh(nr, hr, memo, done)) slot.push_back(join(l, r));
    }
  }
  return slot;
}

}  // namespace

std::vector<Tree> all_balanced_trees(int n) {
  if (n < 0) throw std::invalid_argument("node count must be non-negative");
  int hmax = 0;
  while ((1 << hmax) - 1 < n) ++hmax;  // perfect tree is the densest
  // Loosest height for n nodes: grows Fibonacci-like; 2*log2 is a safe cap.
  int hcap = 2 * hmax + 2;
  std::vector<std::vector<std::vector<Tree>>> memo(
      static_cast<std::size_t>(n) + 1,
      std::vector<std::vector<Tree>>(static_cast<std::size_t>(hcap) + 1));
  std::vector<std::vector<bool>> done(static_cast<std::size_t>(n) + 1,
                                      std::vector<bool>(static_cast<std::size_t>(hcap) + 1, false));
  std::vector<Tree> out;
  for (int h = 0; h <= hcap; ++h) {
    const auto& v = balanced_nh(n, h, memo, done);
    out.insert(out.end(), v.begin(), v.end());
  }
  std::sort(out.begin(), out.end(), tree_less);
  return out;
}

namespace {

void serialize_into(const Tree& t, std::string& out) {
  if (t.is_leaf()) {
    out += "null";
    return;
  }
  out += "{\"l\":";
  serialize_into(t.left(), out);
  out += ",\"r\":";
  serialize_into(t.right(), out);
  out += '}';
}

struct Parser {
  std::string_view text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  void expect(std::string_view token) {
    skip_ws();
    if (text.substr(pos, token.size()) != token)
      throw std::invalid_argument("malformed tree: expected '" + std::string(token) +
                                  "' at offset " + std::to_string(pos));
    pos += token.size();
  }

  Tree parse_tree() {
    skip_ws();
    if (pos >= text.size()) throw std::invalid_argument("malformed tree: unexpected end of input");
    if (text[pos] == 'n') {
      expect("null");
      return Tree::leaf();
    }
    expect("{");
    expect("\"l\"");
    expect(":");
    Tree l = parse_tree();
    expect(",");
    expect("\"r\"");
    expect(":");
    Tree r = parse_tree();
    expect("}");
    return join(l, r);
  }
};

}  // namespace

std::string serialize(const Tree& t) {
  std::string out;
  serialize_into(t, out);
  return out;
}

Tree deserialize(std::string_view text) {
  Parser p{text};
  Tree t = p.parse_tree();
  p.skip_ws();
  if (p.pos != text.size())
    throw std::invalid_argument("malformed tree: trailing input at offset " + std::to_string(p.pos));
  return t;
}

}  // namespace tamari
