// Right rotations, the Tamari order, Hasse diagram construction and
// interval extraction, plus DOT export of the resulting posets.
#pragma once

#include <cstdint>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "tamari/exec.hpp"
#include "tamari/tree.hpp"

namespace tamari {

// A node position eligible for right rotation: the root y of a subtree
// (A ∧ B) ∧ C, i.e. a node whose left child is internal.
struct RotationSite {
  int root_pos;
};

// All right-rotation sites of t, by ascending infix position.
std::vector<RotationSite> rotation_sites(const Tree& t);

// Sites of the inverse (left) rotation: nodes whose right child is internal.
std::vector<RotationSite> left_rotation_sites(const Tree& t);

// Right rotation at the given site: (A ∧ B) ∧ C becomes A ∧ (B ∧ C).
// Node count and infix positions are preserved. Throws std::invalid_argument
// if the site is not a rotation site of t.
Tree rotate(const Tree& t, RotationSite site);

// Left rotation, the inverse rewriting: A ∧ (B ∧ C) becomes (A ∧ B) ∧ C.
// The site is the node whose right child is internal.
Tree rotate_left(const Tree& t, RotationSite site);

// Tamari order: true iff t1 is reachable from t0 by a (possibly empty)
// sequence of right rotations. Throws std::invalid_argument on mismatched
// node counts. Memoized breadth-first search; intended for small sizes.
bool tamari_le(const Tree& t0, const Tree& t1);

// The Tamari lattice of order n as an explicit Hasse diagram. Elements are
// sorted by tree_less, so indices are stable across runs; covers (i, j)
// mean elements[i] ⋖ elements[j] by a single rotation, sorted ascending.
struct TamariPoset {
  int nodes = 0;
  std::vector<Tree> elements;
  std::vector<std::pair<int, int>> covers;
};
TamariPoset build_poset(int n, Exec exec = Exec::parallel);

// The interval [lower, upper]: every tree between the endpoints, with the
// covers restricted to it. Elements sorted by tree_less.
struct Interval {
  Tree lower, upper;
  std::vector<Tree> elements;
  std::vector<std::pair<int, int>> covers;
};

// Throws std::invalid_argument unless lower ≼ upper.
Interval interval(const Tree& lower, const Tree& upper);

enum class DotLabels { json, index };

// DOT digraph, edges directed from smaller to larger element. With
// DotLabels::index the node labels are element indices; pair the output
// with dot_sidecar() to recover the trees.
std::string to_dot(const TamariPoset& poset, DotLabels labels = DotLabels::json);
std::string to_dot(const Interval& iv, DotLabels labels = DotLabels::json);

// Tab-separated "index<TAB>json" table for index-labeled DOT output.
std::string dot_sidecar(const std::vector<Tree>& elements);

namespace detail {

using TreeSet = std::unordered_set<Tree, TreeHash>;

// Up-set of t in the full Tamari lattice: every tree reachable by right
// rotations, t included. Also collects the balanced members, sorted.
struct UpSet {
  TreeSet members;
  std::vector<Tree> balanced;
};
UpSet up_set(const Tree& t);

// Elements of [lower, upper] given the up-set of lower: backward
// breadth-first search from upper through left rotations, restricted to
// the up-set. Sorted by tree_less. upper must belong to the up-set.
std::vector<Tree> interval_elements(const Tree& upper, const TreeSet& upset_of_lower);

// Cover pairs among an element set sorted by tree_less.
std::vector<std::pair<int, int>> covers_within(const std::vector<Tree>& elements);

}  // namespace detail

}  // namespace tamari
