#include "tamari/grammar.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "tamari/balance.hpp"

namespace tamari {

BudTree BudTree::bud(int symbol) {
  if (symbol < 0) throw std::invalid_argument("bud symbol must be non-negative");
  BudTree t;
  auto impl = std::make_shared<Impl>();
  impl->symbol = symbol;
  t.impl_ = std::move(impl);
  return t;
}

BudTree BudTree::node(int label, bool marked, BudTree left, BudTree right) {
  BudTree t;
  auto impl = std::make_shared<Impl>();
  impl->symbol = -1;
  impl->label = label;
  impl->marked = marked;
  impl->left = std::make_shared<const BudTree>(std::move(left));
  impl->right = std::make_shared<const BudTree>(std::move(right));
  t.impl_ = std::move(impl);
  return t;
}

std::string BudTree::encode() const {
  if (is_bud()) return "b" + std::to_string(symbol());
  return std::string(marked() ? "M" : "N") + std::to_string(label()) + "(" + left().encode() +
         "," + right().encode() + ")";
}

SynchronousGrammar builtin_grammar(Family which) {
  auto B = [](int s) { return BudTree::bud(s); };
  auto N = [](int label, BudTree l, BudTree r) {
    return BudTree::node(label, false, std::move(l), std::move(r));
  };
  auto M = [](int label, BudTree l, BudTree r) {
    return BudTree::node(label, true, std::move(l), std::move(r));
  };
  SynchronousGrammar g;
  switch (which) {
    case Family::balanced: {
      // x -> (x ∧₋₁ y) + (x ∧₀ x) + (y ∧₁ x) ; y -> x
      enum { x, y };
      g.symbols = {"x", "y"};
      g.axiom = x;
      g.rules = {
          {N(-1, B(x), B(y)), N(0, B(x), B(x)), N(1, B(y), B(x))},
          {B(x)},
      };
      g.finalizable = {1, 0};
      break;
    }
    case Family::maximal: {
      // x -> (x ∧₀ x) + (y ∧₁ x) + (z ∧₋₁ y) ; y -> x ; z -> (y ∧₁ x)
      enum { x, y, z };
      g.symbols = {"x", "y", "z"};
      g.axiom = x;
      g.rules = {
          {N(0, B(x), B(x)), N(1, B(y), B(x)), N(-1, B(z), B(y))},
          {B(x)},
          {N(1, B(y), B(x))},
      };
      g.finalizable = {1, 0, 0};
      break;
    }
    case Family::intervals: {
      // x -> the balanced alternatives + z ; y -> x ;
      // z -> the two marked two-level templates (the mark is a root of a
      // conservative rotation: label -1 over a left child labeled 0 or -1).
      enum { x, y, z };
      g.symbols = {"x", "y", "z"};
      g.axiom = x;
      g.rules = {
          {N(-1, B(x), B(y)), N(0, B(x), B(x)), N(1, B(y), B(x)), B(z)},
          {B(x)},
          {M(-1, N(0, B(x), B(x)), B(x)), M(-1, N(-1, B(x), B(y)), B(x))},
      };
      g.finalizable = {1, 0, 0};
      break;
    }
    case Family::maximal_intervals: {
      // x -> (x ∧₀ x) + (y ∧₁ z1) + (z2 ∧₋₁ y) + t ; y -> x ;
      // z1 -> (z2 ∧₋₁ y) + t ; z2 -> (y ∧₁ z1) + t ; t -> marked templates
      enum { x, y, z1, z2, t };
      g.symbols = {"x", "y", "z1", "z2", "t"};
      g.axiom = x;
      g.rules = {
          {N(0, B(x), B(x)), N(1, B(y), B(z1)), N(-1, B(z2), B(y)), B(t)},
          {B(x)},
          {N(-1, B(z2), B(y)), B(t)},
          {N(1, B(y), B(z1)), B(t)},
          {M(-1, N(0, B(x), B(x)), B(x)), M(-1, N(-1, B(x), B(y)), B(x))},
      };
      g.finalizable = {1, 0, 0, 0, 0};
      break;
    }
    default:
      throw std::invalid_argument("unknown builtin grammar");
  }
  return g;
}

namespace {

// All possible one-step expansions of a subtree, deduplicated; memoized on
// the subtree encoding since expansion is position-independent.
struct Expander {
  const SynchronousGrammar& g;
  std::unordered_map<std::string, std::vector<BudTree>> memo;

  const std::vector<BudTree>& expand(const BudTree& t) {
    std::string key = t.encode();
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    std::vector<BudTree> out;
    if (t.is_bud()) {
      out = g.rules[static_cast<std::size_t>(t.symbol())];
    } else {
      const auto& lefts = expand(t.left());
      const auto& rights = expand(t.right());
      out.reserve(lefts.size() * rights.size());
      for (const BudTree& l : lefts)
        for (const BudTree& r : rights) out.push_back(BudTree::node(t.label(), t.marked(), l, r));
    }
    return memo.emplace(std::move(key), std::move(out)).first->second;
  }
};

void collect_buds(const BudTree& t, std::vector<int>& symbols) {
  if (t.is_bud()) {
    symbols.push_back(t.symbol());
    return;
  }
  collect_buds(t.left(), symbols);
  collect_buds(t.right(), symbols);
}

bool all_finalizable(const SynchronousGrammar& g, const BudTree& t) {
  if (t.is_bud()) return g.finalizable[static_cast<std::size_t>(t.symbol())] != 0;
  return all_finalizable(g, t.left()) && all_finalizable(g, t.right());
}

void finalize_into(const BudTree& t, Tree& shape, std::vector<int>& labels,
                   std::vector<int>& marks, int& next_pos) {
  if (t.is_bud()) {
    shape = Tree::leaf();
    return;
  }
  Tree l, r;
  finalize_into(t.left(), l, labels, marks, next_pos);
  int pos = ++next_pos;
  labels.push_back(t.label());
  if (t.marked()) marks.push_back(pos);
  finalize_into(t.right(), r, labels, marks, next_pos);
  shape = join(l, r);
}

}  // namespace

GeneratedTree finalize(const SynchronousGrammar& g, const BudTree& t) {
  if (!all_finalizable(g, t))
    throw std::invalid_argument("bud tree has non-finalizable buds");
  GeneratedTree out;
  int next_pos = 0;
  finalize_into(t, out.shape, out.labels, out.marks, next_pos);
  return out;
}

BudTree derive_step(const SynchronousGrammar& g, const BudTree& t, std::span<const int> choices) {
  std::vector<int> symbols;
  collect_buds(t, symbols);
  if (symbols.size() != choices.size())
    throw std::invalid_argument("derive_step: one choice per bud required");
  std::size_t next = 0;
  auto walk = [&](auto&& self, const BudTree& cur) -> BudTree {
    if (cur.is_bud()) {
      const auto& alts = g.rules[static_cast<std::size_t>(cur.symbol())];
      int choice = choices[next++];
      if (choice < 0 || choice >= static_cast<int>(alts.size()))
        throw std::invalid_argument("derive_step: rule choice out of range");
      return alts[static_cast<std::size_t>(choice)];
    }
    BudTree l = self(self, cur.left());
    BudTree r = self(self, cur.right());
    return BudTree::node(cur.label(), cur.marked(), std::move(l), std::move(r));
  };
  return walk(walk, t);
}

namespace {

bool generated_less(const GeneratedTree& a, const GeneratedTree& b) {
  if (a.shape.size() != b.shape.size()) return a.shape.size() < b.shape.size();
  if (a.shape != b.shape) return tree_less(a.shape, b.shape);
  if (a.labels != b.labels) return a.labels < b.labels;
  return a.marks < b.marks;
}

}  // namespace

std::vector<GeneratedTree> generate_bud_trees(const SynchronousGrammar& g, int steps) {
  if (steps < 0) throw std::invalid_argument("step count must be non-negative");
  Expander expander{g, {}};
  std::vector<BudTree> frontier{BudTree::bud(g.axiom)};
  std::vector<GeneratedTree> outputs;
  std::unordered_set<std::string> seen_outputs;

  auto snapshot = [&](const std::vector<BudTree>& trees) {
    for (const BudTree& t : trees) {
      if (!all_finalizable(g, t)) continue;
      GeneratedTree fin = finalize(g, t);
      std::string key = serialize(fin.shape);
      key += '|';
      for (int l : fin.labels) key += std::to_string(l) + ",";
      key += '|';
      for (int m : fin.marks) key += std::to_string(m) + ",";
      if (seen_outputs.insert(std::move(key)).second) outputs.push_back(std::move(fin));
    }
  };

  snapshot(frontier);
  for (int step = 0; step < steps; ++step) {
    std::vector<BudTree> next;
    std::unordered_set<std::string> seen;
    for (const BudTree& t : frontier) {
      for (const BudTree& e : expander.expand(t))
        if (seen.insert(e.encode()).second) next.push_back(e);
    }
    frontier = std::move(next);
    snapshot(frontier);
  }
  std::sort(outputs.begin(), outputs.end(), generated_less);
  return outputs;
}

void validate_marked(const MarkedTree& m) {
  if (!m.tree.balanced()) throw std::invalid_argument("marked tree must be balanced");
  if (!std::is_sorted(m.marks.begin(), m.marks.end()) ||
      std::adjacent_find(m.marks.begin(), m.marks.end()) != m.marks.end())
    throw std::invalid_argument("marks must be sorted and distinct");
  for (int pos : m.marks) {
    if (pos < 1 || pos > m.tree.size()) throw std::invalid_argument("mark position out of range");
    Tree y = subtree_at(m.tree, pos);
    if (y.left().is_leaf())
      throw std::invalid_argument("marked position is not a rotation site");
    int gy = y.right().height() - y.left().height();
    int gx = y.left().right().height() - y.left().left().height();
    if (!(gy == -1 && (gx == -1 || gx == 0)))
      throw std::invalid_argument("marked position is not a conservative rotation root");
    int left_child_pos = pos - y.left().right().size() - 1;
    if (std::binary_search(m.marks.begin(), m.marks.end(), left_child_pos))
      throw std::invalid_argument("the left child of a marked node is marked");
  }
}

MarkedTree interval_to_marked(const Interval& iv) {
  if (!iv.lower.balanced() || !iv.upper.balanced())
    throw std::invalid_argument("interval_to_marked requires balanced endpoints");
  std::vector<RotationSet> labels = hypercube_labeling(iv);
  int upper_index = -1;
  for (int i = 0; i < static_cast<int>(iv.elements.size()); ++i)
    if (iv.elements[static_cast<std::size_t>(i)] == iv.upper) upper_index = i;
  if (upper_index < 0) throw std::invalid_argument("interval does not contain its upper end");
  MarkedTree m{iv.lower, labels[static_cast<std::size_t>(upper_index)].positions};
  validate_marked(m);
  return m;
}

Interval marked_to_interval(const MarkedTree& m) {
  validate_marked(m);
  Tree upper = m.tree;
  for (int pos : m.marks) {
    if (!is_conservative(upper, RotationSite{pos}))
      throw std::invalid_argument("marked rotation is not conservative when applied");
    upper = rotate(upper, RotationSite{pos});
  }
  return interval(m.tree, upper);
}

}  // namespace tamari
