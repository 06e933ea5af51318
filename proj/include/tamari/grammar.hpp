// Synchronous grammars on bud trees: simultaneous substitution, exhaustive
// generation with finalization, and the marked-tree encoding of balanced
// intervals.
#pragma once

#include <memory>
#include <span>
#include <string>
#include <vector>

#include "tamari/lattice.hpp"
#include "tamari/polynomial.hpp"
#include "tamari/tree.hpp"

namespace tamari {

// Incomplete tree whose external positions are buds awaiting substitution.
// Internal nodes carry an imbalance label and a mark flag.
class BudTree {
 public:
  static BudTree bud(int symbol);
  static BudTree node(int label, bool marked, BudTree left, BudTree right);

  bool is_bud() const { return impl_->symbol >= 0; }
  int symbol() const { return impl_->symbol; }     // buds only
  int label() const { return impl_->label; }       // nodes only
  bool marked() const { return impl_->marked; }    // nodes only
  const BudTree& left() const { return *impl_->left; }
  const BudTree& right() const { return *impl_->right; }

  // Canonical preorder encoding, used for dedup and as an equality key.
  std::string encode() const;
  friend bool operator==(const BudTree& a, const BudTree& b) {
    return a.encode() == b.encode();
  }

 private:
  struct Impl {
    int symbol = -1;  // >= 0 for buds
    int label = 0;
    bool marked = false;
    std::shared_ptr<const BudTree> left, right;
  };
  std::shared_ptr<const Impl> impl_;
};

// Substitution rules: every bud is replaced by one of its alternatives at
// every step, simultaneously. Alternatives are bud trees (a lone bud for
// delay transitions, one node with two bud children, or a marked two-level
// template). Finalization replaces buds of finalizable symbols by leaves.
struct SynchronousGrammar {
  std::vector<std::string> symbols;
  int axiom = 0;
  std::vector<std::vector<BudTree>> rules;  // per symbol
  std::vector<char> finalizable;            // per symbol
};

SynchronousGrammar builtin_grammar(Family which);

// A finalized derivation result: the tree shape, the label each internal
// node carried (infix order), and the marked infix positions.
struct GeneratedTree {
  Tree shape;
  std::vector<int> labels;
  std::vector<int> marks;  // sorted
  friend bool operator==(const GeneratedTree&, const GeneratedTree&) = default;
};

// All distinct finalized outputs reachable within the given number of
// synchronous steps (snapshots are taken after every step, the axiom
// included). Output is sorted: by leaf count, then shape, labels, marks.
// Exhaustive enumeration; cost grows steeply with the step count.
std::vector<GeneratedTree> generate_bud_trees(const SynchronousGrammar& g, int steps);

// One synchronous step with explicit rule choices, one per bud in infix
// order. Used to replay a specific derivation.
BudTree derive_step(const SynchronousGrammar& g, const BudTree& t, std::span<const int> choices);

// Replaces every bud by a leaf. Throws std::invalid_argument if some bud's
// symbol is not finalizable.
GeneratedTree finalize(const SynchronousGrammar& g, const BudTree& t);

// Balanced tree plus marked infix positions; marks must be roots of
// conservative balancing rotations and no mark may sit at the left child
// of another mark.
struct MarkedTree {
  Tree tree;
  std::vector<int> marks;  // sorted
  friend bool operator==(const MarkedTree&, const MarkedTree&) = default;
};

// Throws std::invalid_argument when a MarkedTree invariant is violated.
void validate_marked(const MarkedTree& m);

// The encoding of a balanced interval: lower tree plus the rotation roots
// transforming lower into upper. Inverse of marked_to_interval.
MarkedTree interval_to_marked(const Interval& iv);

// Applies the marked rotations (each must be conservative when applied) and
// rebuilds the interval.
Interval marked_to_interval(const MarkedTree& m);

}  // namespace tamari
