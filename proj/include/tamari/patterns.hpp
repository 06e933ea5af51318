// Tree patterns over imbalance-labeled trees: occurrence, avoidance, and
// the pattern characterizations of maximal/minimal balanced trees.
#pragma once

#include <functional>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "tamari/tree.hpp"

namespace tamari {

// Labeled, possibly incomplete binary tree. An absent child matches
// anything; a present child must match an internal node.
struct TreePattern;
using TreePatternPtr = std::shared_ptr<const TreePattern>;
struct TreePattern {
  int label = 0;
  TreePatternPtr left, right;  // nullptr = unconstrained
};

TreePatternPtr pattern_node(int label, TreePatternPtr left = nullptr,
                            TreePatternPtr right = nullptr);

// Compact text form: "(label)" with optional "L:" / "R:" children, e.g.
// "(-1 L:(-1))" is a node labeled -1 whose left child is labeled -1.
TreePatternPtr parse_pattern(std::string_view text);
std::string pattern_to_string(const TreePattern& p);

// True iff some connected component of the imbalance-labeled tree of t has
// the pattern's shape and labels, anchoring the pattern root at any node.
bool occurs(const Tree& t, const TreePattern& p);

// Finite list of patterns, or one of the predicate-defined infinite
// families used for tree classes.
class PatternSet {
 public:
  static PatternSet finite(std::vector<TreePatternPtr> patterns);
  // { single node labeled i : pred(i) }
  static PatternSet single_label(std::function<bool(int)> pred);
  // { two-node pattern along a left edge with any labels } — avoiding this
  // family characterizes the right combs.
  static PatternSet any_left_edge();

  bool occurs_in(const Tree& t) const;
  const std::vector<TreePatternPtr>& patterns() const { return patterns_; }

 private:
  enum class Kind { finite, single_label, any_left_edge };
  Kind kind_ = Kind::finite;
  std::vector<TreePatternPtr> patterns_;
  std::function<bool(int)> pred_;
};

bool avoids(const Tree& t, const PatternSet& ps);

// The named families from the classification of tree classes.
PatternSet unbalanced_label_family();  // {node i : i not in {-1,0,1}} — avoided by balanced trees
PatternSet nonzero_label_family();     // {node i : i != 0} — avoided by perfect trees

// P_max: left-edge patterns, parent labeled -1 with left child labeled -1
// or 0. P_min: right-edge patterns, parent labeled 1 with right child
// labeled 1 or 0.
PatternSet p_max();
PatternSet p_min();

// Maximal: every rotation leaves the balanced family; equivalently t avoids
// P_max. Minimal: every rotation arriving at t starts outside; equivalently
// t avoids P_min. The *_by_patterns forms are the pattern route, the
// *_by_rotations forms (in balance.hpp) the rotation route; the two must
// agree, which the test suite checks exhaustively. Throw std::domain_error
// on unbalanced input.
bool is_maximal_balanced(const Tree& t);
bool is_minimal_balanced(const Tree& t);
bool is_maximal_balanced_by_patterns(const Tree& t);
bool is_minimal_balanced_by_patterns(const Tree& t);

}  // namespace tamari
