#include "tamari/words.hpp"

#include <algorithm>
#include <stdexcept>

namespace tamari {

Word rewrite_step(const Word& w) {
  if (w.size() < 2) throw std::invalid_argument("rewrite_step needs at least two letters");
  Word out;
  out.reserve(w.size() - 1);
  int z1 = w[0], z2 = w[1];
  if (z1 - 1 <= z2 && z2 <= z1 + 1)
    out.push_back(std::max(z1, z2) + 1);
  else
    out.push_back(z2);
  out.insert(out.end(), w.begin() + 2, w.end());
  return out;
}

namespace {

// Folds the word down to one letter; returns -1 if the admissibility
// condition z1 - 1 <= z2 fails at some step.
int fold(const Word& w) {
  Word cur = w;
  while (cur.size() > 1) {
    if (cur[0] - 1 > cur[1]) return -1;
    int z1 = cur[0], z2 = cur[1];
    int head = (z1 - 1 <= z2 && z2 <= z1 + 1) ? std::max(z1, z2) + 1 : z2;
    cur.erase(cur.begin());
    cur[0] = head;
  }
  return cur.empty() ? 0 : cur[0];
}

}  // namespace

bool is_admissible(const Word& w) {
  for (int letter : w)
    if (letter < 0) throw std::invalid_argument("letters must be non-negative");
  if (w.size() <= 1) return true;
  return fold(w) >= 0;
}

int potential(const Word& w) {
  if (w.empty()) throw std::invalid_argument("potential of the empty word is undefined");
  if (!is_admissible(w)) throw std::invalid_argument("potential requires an admissible word");
  return fold(w);
}

std::vector<Tree> right_hanging_subtrees(const Tree& t, int pos) {
  if (pos < 1 || pos > t.size()) throw std::out_of_range("node position out of range");
  // Walk down to the node, remembering the right subtrees of the ancestors
  // we leave by a left step (their right child is off the path).
  std::vector<Tree> above;
  const Tree* cur = &t;
  int p = pos;
  while (true) {
    int nl = cur->left().size();
    if (p == nl + 1) break;
    if (p <= nl) {
      above.push_back(cur->right());
      cur = &cur->left();
    } else {
      p -= nl + 1;
      cur = &cur->right();
    }
  }
  std::vector<Tree> out{cur->right()};
  out.insert(out.end(), above.rbegin(), above.rend());
  return out;
}

Word characteristic_word(const Tree& t, int pos) {
  Word w;
  for (const Tree& s : right_hanging_subtrees(t, pos)) w.push_back(s.height());
  return w;
}

}  // namespace tamari
