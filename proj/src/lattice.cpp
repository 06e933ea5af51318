#include "tamari/lattice.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace tamari {

namespace {

void collect_sites(const Tree& t, int offset, bool left_side, std::vector<RotationSite>& out) {
  if (t.is_leaf()) return;
  collect_sites(t.left(), offset, left_side, out);
  int pos = offset + t.left().size() + 1;
  const Tree& child = left_side ? t.left() : t.right();
  if (!child.is_leaf()) out.push_back(RotationSite{pos});
  collect_sites(t.right(), pos, left_side, out);
}

Tree rotate_at(const Tree& t, int pos, bool right_rotation) {
  if (t.is_leaf()) throw std::invalid_argument("rotation site out of range");
  int nl = t.left().size();
  if (pos == nl + 1) {
    if (right_rotation) {
      if (t.left().is_leaf()) throw std::invalid_argument("not a right-rotation site: left child is a leaf");
      return join(t.left().left(), join(t.left().right(), t.right()));
    }
    if (t.right().is_leaf()) throw std::invalid_argument("not a left-rotation site: right child is a leaf");
    return join(join(t.left(), t.right().left()), t.right().right());
  }
  if (pos <= nl) return join(rotate_at(t.left(), pos, right_rotation), t.right());
  return join(t.left(), rotate_at(t.right(), pos - nl - 1, right_rotation));
}

}  // namespace

std::vector<RotationSite> rotation_sites(const Tree& t) {
  std::vector<RotationSite> out;
  collect_sites(t, 0, true, out);
  return out;
}

std::vector<RotationSite> left_rotation_sites(const Tree& t) {
  std::vector<RotationSite> out;
  collect_sites(t, 0, false, out);
  return out;
}

Tree rotate(const Tree& t, RotationSite site) {
  if (site.root_pos < 1 || site.root_pos > t.size())
    throw std::invalid_argument("rotation site out of range");
  return rotate_at(t, site.root_pos, true);
}

Tree rotate_left(const Tree& t, RotationSite site) {
  if (site.root_pos < 1 || site.root_pos > t.size())
    throw std::invalid_argument("rotation site out of range");
  return rotate_at(t, site.root_pos, false);
}

bool tamari_le(const Tree& t0, const Tree& t1) {
  if (t0.size() != t1.size())
    throw std::invalid_argument("tamari_le: trees must have the same node count");
  if (t0 == t1) return true;
  detail::TreeSet seen{t0};
  std::deque<Tree> queue{t0};
  while (!queue.empty()) {
    Tree cur = queue.front();
    queue.pop_front();
    for (RotationSite s : rotation_sites(cur)) {
      Tree next = rotate(cur, s);
      if (next == t1) return true;
      if (seen.insert(next).second) queue.push_back(next);
    }
  }
  return false;
}

namespace detail {

UpSet up_set(const Tree& t) {
  UpSet u;
  u.members.insert(t);
  if (t.balanced()) u.balanced.push_back(t);
  std::deque<Tree> queue{t};
  while (!queue.empty()) {
    Tree cur = queue.front();
    queue.pop_front();
    for (RotationSite s : rotation_sites(cur)) {
      Tree next = rotate(cur, s);
      if (u.members.insert(next).second) {
        if (next.balanced()) u.balanced.push_back(next);
        queue.push_back(next);
      }
    }
  }
  std::sort(u.balanced.begin(), u.balanced.end(), tree_less);
  return u;
}

std::vector<Tree> interval_elements(const Tree& upper, const TreeSet& upset_of_lower) {
  std::vector<Tree> out;
  TreeSet seen{upper};
  std::deque<Tree> queue{upper};
  out.push_back(upper);
  while (!queue.empty()) {
    Tree cur = queue.front();
    queue.pop_front();
    for (RotationSite s : left_rotation_sites(cur)) {
      Tree prev = rotate_left(cur, s);
      if (!upset_of_lower.contains(prev)) continue;
      if (seen.insert(prev).second) {
        out.push_back(prev);
        queue.push_back(prev);
      }
    }
  }
  std::sort(out.begin(), out.end(), tree_less);
  return out;
}

std::vector<std::pair<int, int>> covers_within(const std::vector<Tree>& elements) {
  std::unordered_map<Tree, int, TreeHash> index;
  index.reserve(elements.size());
  for (int i = 0; i < static_cast<int>(elements.size()); ++i) index.emplace(elements[i], i);
  std::vector<std::pair<int, int>> covers;
  for (int i = 0; i < static_cast<int>(elements.size()); ++i) {
    for (RotationSite s : rotation_sites(elements[i])) {
      auto it = index.find(rotate(elements[i], s));
      if (it != index.end()) covers.emplace_back(i, it->second);
    }
  }
  std::sort(covers.begin(), covers.end());
  covers.erase(std::unique(covers.begin(), covers.end()), covers.end());
  return covers;
}

}  // namespace detail

TamariPoset build_poset(int n, Exec exec) {
  TamariPoset poset;
  poset.nodes = n;
  poset.elements = all_trees(n);
  std::sort(poset.elements.begin(), poset.elements.end(), tree_less);
  std::unordered_map<Tree, int, TreeHash> index;
  index.reserve(poset.elements.size());
  for (int i = 0; i < static_cast<int>(poset.elements.size()); ++i)
    index.emplace(poset.elements[i], i);

  int count = static_cast<int>(poset.elements.size());
  std::vector<std::vector<std::pair<int, int>>> per_element(poset.elements.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 64) if (exec == Exec::parallel)
#endif
  for (int i = 0; i < count; ++i) {
    for (RotationSite s : rotation_sites(poset.elements[static_cast<std::size_t>(i)])) {
      Tree next = rotate(poset.elements[static_cast<std::size_t>(i)], s);
      per_element[static_cast<std::size_t>(i)].emplace_back(i, index.at(next));
    }
    auto& row = per_element[static_cast<std::size_t>(i)];
    std::sort(row.begin(), row.end());
  }
  (void)exec;
  for (auto& row : per_element)
    poset.covers.insert(poset.covers.end(), row.begin(), row.end());
  return poset;
}

Interval interval(const Tree& lower, const Tree& upper) {
  if (lower.size() != upper.size())
    throw std::invalid_argument("interval: endpoints must have the same node count");
  detail::UpSet up = detail::up_set(lower);
  if (!up.members.contains(upper))
    throw std::invalid_argument("interval: lower is not below upper in the Tamari order");
  Interval iv;
  iv.lower = lower;
  iv.upper = upper;
  iv.elements = detail::interval_elements(upper, up.members);
  iv.covers = detail::covers_within(iv.elements);
  return iv;
}

namespace {

std::string to_dot_impl(const std::vector<Tree>& elements,
                        const std::vector<std::pair<int, int>>& covers, DotLabels labels) {
  std::ostringstream out;
  out << "digraph tamari {\n";
  out << "  rankdir=BT;\n";
  out << "  node [shape=box, fontname=\"monospace\"];\n";
  for (int i = 0; i < static_cast<int>(elements.size()); ++i) {
    out << "  n" << i << " [label=\"";
    if (labels == DotLabels::json) {
      std::string s = serialize(elements[static_cast<std::size_t>(i)]);
      for (char c : s) {
        if (c == '"') out << '\\';
        out << c;
      }
    } else {
      out << i;
    }
    out << "\"];\n";
  }
  for (auto [a, b] : covers) out << "  n" << a << " -> n" << b << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace

std::string to_dot(const TamariPoset& poset, DotLabels labels) {
  return to_dot_impl(poset.elements, poset.covers, labels);
}

std::string to_dot(const Interval& iv, DotLabels labels) {
  return to_dot_impl(iv.elements, iv.covers, labels);
}

std::string dot_sidecar(const std::vector<Tree>& elements) {
  std::string out;
  for (int i = 0; i < static_cast<int>(elements.size()); ++i) {
    out += std::to_string(i);
    out += '\t';
    out += serialize(elements[static_cast<std::size_t>(i)]);
    out += '\n';
  }
  return out;
}

}  // namespace tamari
