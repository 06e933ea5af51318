// Admissible words over the non-negative integers, their potential, and
// characteristic words of tree nodes.
#pragma once

#include <vector>

#include "tamari/tree.hpp"

namespace tamari {

using Word = std::vector<int>;

// One application of the pair substitution to the two leading letters:
//   z1.z2 -> max(z1, z2) + 1   when z1 - 1 <= z2 <= z1 + 1,
//   z1.z2 -> z2                otherwise.
// Requires at least two letters.
Word rewrite_step(const Word& w);

// A word is admissible when it has at most one letter, or z1 - 1 <= z2 and
// the rewritten word is admissible. Letters must be non-negative.
bool is_admissible(const Word& w);

// The single letter left after full rewriting. Throws std::invalid_argument
// on the empty word or a non-admissible word.
int potential(const Word& w);

// The right subtrees hanging off the ancestor chain of the node at pos:
// S_{x_1}, ..., S_{x_l} where x_1 is the node itself and x_2, ..., x_l are
// the ancestors whose right child is not itself an ancestor of the node
// (i.e. the ancestors reached by a left step), bottom to top. These are
// exactly the maximal subtrees lying entirely to the right of the node.
std::vector<Tree> right_hanging_subtrees(const Tree& t, int pos);

// Characteristic word of the node at pos: the heights of the
// right_hanging_subtrees, bottom to top.
Word characteristic_word(const Tree& t, int pos);

}  // namespace tamari
