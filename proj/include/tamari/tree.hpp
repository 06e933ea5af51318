// Complete rooted planar binary trees: construction, traversal, height and
// imbalance queries, exhaustive generation, canonical JSON serialization.
#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace tamari {

// Immutable complete binary tree. A default-constructed Tree is the empty
// tree (a leaf); join() builds internal nodes. Node count, height, balance
// and a structural hash are cached at construction, so those queries are
// O(1). Values are freely shareable across threads.
//
// Internal nodes are addressed by their 1-based position in the infix
// traversal of internal nodes. Rotations preserve these positions, which is
// what makes them usable as stable node identities across the whole lattice.
class Tree {
 public:
  Tree() = default;  // leaf

  static Tree leaf() { return Tree(); }

  bool is_leaf() const { return node_ == nullptr; }
  const Tree& left() const;   // requires !is_leaf()
  const Tree& right() const;  // requires !is_leaf()

  int size() const { return node_ ? node_->size : 0; }  // internal nodes
  int height() const { return node_ ? node_->height : 0; }
  bool balanced() const { return node_ ? node_->balanced : true; }
  std::size_t hash() const { return node_ ? node_->hash : 0x9e3779b97f4a7c15ULL; }

  friend bool operator==(const Tree& a, const Tree& b);
  friend bool operator!=(const Tree& a, const Tree& b) { return !(a == b); }

  friend Tree join(const Tree& l, const Tree& r);

 private:
  struct Node {
    Tree left, right;
    std::int32_t size;
    std::int32_t height;
    bool balanced;
    std::size_t hash;
  };
  std::shared_ptr<const Node> node_;
};

// L ∧ R: the unique tree with left subtree L and right subtree R.
Tree join(const Tree& l, const Tree& r);

inline int height(const Tree& t) { return t.height(); }
inline int node_count(const Tree& t) { return t.size(); }

// Every internal node has imbalance in {-1, 0, 1}. Leaf counts as balanced.
inline bool is_balanced(const Tree& t) { return t.balanced(); }

// Subtree rooted at the internal node with the given infix position.
// Throws std::out_of_range if pos is not in 1..size().
Tree subtree_at(const Tree& t, int pos);

// Imbalance value at an internal node: ht(right) - ht(left).
int imbalance(const Tree& t, int pos);

// Imbalance of every internal node, in infix order (index 0 = position 1).
std::vector<int> imbalance_labels(const Tree& t);

// Tree of the same shape where each internal node carries its imbalance
// value. A leaf maps to nullptr.
struct LabeledTree;
using LabeledTreePtr = std::shared_ptr<const LabeledTree>;
struct LabeledTree {
  int label;
  LabeledTreePtr left, right;  // nullptr = leaf child
};
LabeledTreePtr label_with_imbalance(const Tree& t);

// Total order on trees: leaf before node, then left then right, recursively.
// On equal node counts this coincides with lexicographic order of the
// canonical JSON serializations.
bool tree_less(const Tree& a, const Tree& b);

struct TreeHash {
  std::size_t operator()(const Tree& t) const { return t.hash(); }
};

// All trees with n internal nodes, Catalan(n) many. Order: by left subtree
// size ascending, then recursively; stable across runs.
std::vector<Tree> all_trees(int n);

// All balanced trees with n internal nodes, built by the height-pair
// recursion (subtree heights (h-1,h-1), (h-1,h-2), (h-2,h-1)) rather than
// by filtering. Sorted by tree_less.
std::vector<Tree> all_balanced_trees(int n);

// Canonical JSON: leaf = null, node = {"l":<tree>,"r":<tree>}, no spaces.
std::string serialize(const Tree& t);

// Inverse of serialize. Accepts whitespace between tokens but otherwise
// requires the canonical shape; throws std::invalid_argument on malformed
// or incomplete input.
Tree deserialize(std::string_view text);

}  // namespace tamari
