// Rotation classification (conservative vs unbalancing), the imbalance
// witness property, exhaustive closure verification, the balanced subposet,
// and the hypercube structure of balanced intervals.
#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tamari/exec.hpp"
#include "tamari/lattice.hpp"
#include "tamari/tree.hpp"

namespace tamari {

enum class RotationTag { B1, B2, U1, U2, U3, U4, U5, U6, U7 };

const char* to_string(RotationTag tag);

// One column of the nine-entry rotation table: the imbalance values
// (γ(x), γ(y)) of the rotation root y and its left child x, before and
// after the rotation. B1 and B2 are the conservative balancing cases.
struct RotationClass {
  RotationTag tag;
  std::pair<int, int> before;
  std::pair<int, int> after;
};

// The nine classes, in column order B1, U1, U2, B2, U3, U4, U5, U6, U7.
const std::array<RotationClass, 9>& rotation_table();

// Classifies the rotation at the given site by its (γ(x), γ(y)) pair.
// Requires both local imbalances to lie in {-1, 0, 1}; throws
// std::domain_error otherwise and std::invalid_argument on a bad site.
RotationClass classify_rotation(const Tree& t, RotationSite site);

// True iff rotating t at the site keeps the tree balanced; equivalently the
// before pair is (-1,-1) or (0,-1). Throws std::domain_error if t is not
// balanced.
bool is_conservative(const Tree& t, RotationSite site);

// Rotation sites whose rotation is conservative balancing. Requires t
// balanced.
std::vector<RotationSite> conservative_sites(const Tree& t);

// Sites of left rotations that come from a conservative rotation, i.e. the
// positions x with (γ(x), γ(y)) in {(1,1), (1,0)} where y is the right
// child of x. Requires t balanced.
std::vector<RotationSite> reverse_conservative_sites(const Tree& t);

// Balanced tree with no conservative rotation available / none arriving.
bool maximal_by_rotations(const Tree& t);
bool minimal_by_rotations(const Tree& t);

// The four-point unbalance witness at node x: γ(x) >= 2, the left subtree
// of x is balanced, every subtree entirely to the right of y is balanced,
// and the characteristic word of y is admissible, where y is the leftmost
// node of the left subtree of x. Throws std::invalid_argument when x has an
// empty left subtree.
bool imb_property(const Tree& t, int pos);

// First position (in infix order) where imb_property holds, if any.
std::optional<int> find_imb_witness(const Tree& t);

// Restriction of the Tamari order to the balanced trees of size n: covers
// are exactly the conservative balancing rotations.
struct BalancedPoset {
  int nodes = 0;
  std::vector<Tree> elements;  // sorted by tree_less
  std::vector<std::pair<int, int>> covers;
};
BalancedPoset balanced_subposet(int n);

// Sizes of the connected components of the cover graph, sorted ascending.
std::vector<int> component_sizes(int element_count, const std::vector<std::pair<int, int>>& covers);

// The hypercube poset of dimension k: subsets of {0, ..., k-1} ordered by
// inclusion, elements encoded as bit masks. Requires k <= 20.
struct HypercubePoset {
  int dimension = 0;
  std::vector<std::uint32_t> elements;  // all 2^k masks, ascending
  std::vector<std::pair<int, int>> covers() const;
};
HypercubePoset hypercube_poset(int k);

// The set of rotation-root positions transforming the lower end of a
// balanced interval into a given element.
struct RotationSet {
  std::vector<int> positions;  // sorted ascending
  friend bool operator==(const RotationSet&, const RotationSet&) = default;
};

// RotationSet of every interval element, parallel to iv.elements. Fails
// loudly (std::logic_error) if the labeling is inconsistent, which would
// falsify the hypercube isomorphism.
std::vector<RotationSet> hypercube_labeling(const Interval& iv);

// Dimension k of the hypercube the interval is isomorphic to. Verifies
// element count 2^k, injective RotationSet labeling, covers = single
// insertions in both directions, and rotation disjointness. Throws
// std::domain_error on unbalanced endpoints, std::logic_error if any
// isomorphism check fails.
int hypercube_dimension(const Interval& iv);

// One line of the verification reports: counts for a single size plus the
// outcome. detail carries the first counterexample, in canonical order.
struct SweepRow {
  int nodes = 0;
  std::uint64_t balanced_count = 0;
  std::uint64_t pair_count = 0;
  int max_k = 0;
  bool pass = true;
  std::string detail;
};

std::string format_row(const SweepRow& row);
bool all_pass(const std::vector<SweepRow>& rows);

// Checks that for every pair of balanced trees t0 ≼ t1 with n nodes, the
// interval [t0, t1] computed in the full Tamari lattice contains only
// balanced trees.
SweepRow verify_closure(int n, Exec exec = Exec::parallel);
std::vector<SweepRow> verify_closure_upto(int max_nodes, Exec exec = Exec::parallel);

// Checks the hypercube isomorphism for every balanced interval with n
// nodes, again inside the full lattice.
SweepRow verify_hypercubes(int n, Exec exec = Exec::parallel);
std::vector<SweepRow> verify_hypercubes_upto(int max_nodes, Exec exec = Exec::parallel);

// Exhaustive interval counts over the balanced subposet. Valid counts of
// the full-lattice balanced intervals once verify_closure has passed for
// the same size.
std::uint64_t count_balanced_intervals(int n);
std::uint64_t count_maximal_intervals(int n);  // minimal lower end, maximal upper end

}  // namespace tamari
