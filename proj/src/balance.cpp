#include "tamari/balance.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <tuple>
#include <unordered_map>

#include "tamari/words.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace tamari {

const char* to_string(RotationTag tag) {
  switch (tag) {
    case RotationTag::B1: return "B1";
    case RotationTag::B2: return "B2";
    case RotationTag::U1: return "U1";
    case RotationTag::U2: return "U2";
    case RotationTag::U3: return "U3";
    case RotationTag::U4: return "U4";
    case RotationTag::U5: return "U5";
    case RotationTag::U6: return "U6";
    case RotationTag::U7: return "U7";
  }
  return "?";
}

const std::array<RotationClass, 9>& rotation_table() {
  static const std::array<RotationClass, 9> table = {{
      {RotationTag::B1, {-1, -1}, {1, 1}},
      {RotationTag::U1, {-1, 0}, {2, 2}},
      {RotationTag::U2, {-1, 1}, {3, 3}},
      {RotationTag::B2, {0, -1}, {1, 0}},
      {RotationTag::U3, {0, 0}, {2, 1}},
      {RotationTag::U4, {0, 1}, {3, 2}},
      {RotationTag::U5, {1, -1}, {2, 0}},
      {RotationTag::U6, {1, 0}, {3, 1}},
      {RotationTag::U7, {1, 1}, {4, 2}},
  }};
  return table;
}

RotationClass classify_rotation(const Tree& t, RotationSite site) {
  if (site.root_pos < 1 || site.root_pos > t.size())
    throw std::invalid_argument("rotation site out of range");
  Tree y = subtree_at(t, site.root_pos);
  if (y.left().is_leaf())
    throw std::invalid_argument("not a rotation site: left child is a leaf");
  const Tree& x = y.left();
  int gx = x.right().height() - x.left().height();
  int gy = y.right().height() - y.left().height();
  for (const RotationClass& rc : rotation_table())
    if (rc.before == std::pair{gx, gy}) return rc;
  throw std::domain_error("tree is not balanced at the rotation site");
}

bool is_conservative(const Tree& t, RotationSite site) {
  if (!t.balanced()) throw std::domain_error("is_conservative requires a balanced tree");
  RotationClass rc = classify_rotation(t, site);
  return rc.tag == RotationTag::B1 || rc.tag == RotationTag::B2;
}

namespace {

// Conservative sites can be read off locally: y with γ(y) = -1 whose left
// child x has γ(x) in {-1, 0}.
void collect_conservative(const Tree& t, int offset, std::vector<RotationSite>& out) {
  if (t.is_leaf()) return;
  collect_conservative(t.left(), offset, out);
  int pos = offset + t.left().size() + 1;
  if (!t.left().is_leaf()) {
    int gy = t.right().height() - t.left().height();
    const Tree& x = t.left();
    int gx = x.right().height() - x.left().height();
    if (gy == -1 && (gx == -1 || gx == 0)) out.push_back(RotationSite{pos});
  }
  collect_conservative(t.right(), pos, out);
}

// Reverse direction: x with γ(x) = 1 whose right child y has γ(y) in {1, 0}.
void collect_reverse_conservative(const Tree& t, int offset, std::vector<RotationSite>& out) {
  if (t.is_leaf()) return;
  collect_reverse_conservative(t.left(), offset, out);
  int pos = offset + t.left().size() + 1;
  if (!t.right().is_leaf()) {
    int gx = t.right().height() - t.left().height();
    const Tree& y = t.right();
    int gy = y.right().height() - y.left().height();
    if (gx == 1 && (gy == 1 || gy == 0)) out.push_back(RotationSite{pos});
  }
  collect_reverse_conservative(t.right(), pos, out);
}

}  // namespace

std::vector<RotationSite> conservative_sites(const Tree& t) {
  if (!t.balanced()) throw std::domain_error("conservative_sites requires a balanced tree");
  std::vector<RotationSite> out;
  collect_conservative(t, 0, out);
  return out;
}

std::vector<RotationSite> reverse_conservative_sites(const Tree& t) {
  if (!t.balanced()) throw std::domain_error("reverse_conservative_sites requires a balanced tree");
  std::vector<RotationSite> out;
  collect_reverse_conservative(t, 0, out);
  return out;
}

bool maximal_by_rotations(const Tree& t) {
  if (!t.balanced()) throw std::domain_error("maximality is defined on balanced trees");
  return conservative_sites(t).empty();
}

bool minimal_by_rotations(const Tree& t) {
  if (!t.balanced()) throw std::domain_error("minimality is defined on balanced trees");
  return reverse_conservative_sites(t).empty();
}

bool imb_property(const Tree& t, int pos) {
  Tree x = subtree_at(t, pos);
  if (x.left().is_leaf())
    throw std::invalid_argument("imb_property: node has an empty left subtree");
  int gx = x.right().height() - x.left().height();
  if (gx < 2) return false;
  if (!x.left().balanced()) return false;
  // y is the leftmost node of the left subtree of x; since y's subtree
  // interval starts at the position where x's does, y sits at the position
  // of x minus the left subtree size.
  int y_pos = pos - x.left().size();
  for (const Tree& s : right_hanging_subtrees(t, y_pos))
    if (!s.balanced()) return false;
  return is_admissible(characteristic_word(t, y_pos));
}

std::optional<int> find_imb_witness(const Tree& t) {
  for (int pos = 1; pos <= t.size(); ++pos) {
    Tree x = subtree_at(t, pos);
    if (x.left().is_leaf()) continue;
    if (imb_property(t, pos)) return pos;
  }
  return std::nullopt;
}

BalancedPoset balanced_subposet(int n) {
  BalancedPoset poset;
  poset.nodes = n;
  poset.elements = all_balanced_trees(n);
  std::unordered_map<Tree, int, TreeHash> index;
  for (int i = 0; i < static_cast<int>(poset.elements.size()); ++i)
    index.emplace(poset.elements[i], i);
  for (int i = 0; i < static_cast<int>(poset.elements.size()); ++i) {
    for (RotationSite s : conservative_sites(poset.elements[static_cast<std::size_t>(i)])) {
      Tree next = rotate(poset.elements[static_cast<std::size_t>(i)], s);
      poset.covers.emplace_back(i, index.at(next));
    }
  }
  std::sort(poset.covers.begin(), poset.covers.end());
  return poset;
}

std::vector<int> component_sizes(int element_count, const std::vector<std::pair<int, int>>& covers) {
  std::vector<int> parent(static_cast<std::size_t>(element_count));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int a) {
    while (parent[static_cast<std::size_t>(a)] != a) {
      parent[static_cast<std::size_t>(a)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(a)])];
      a = parent[static_cast<std::size_t>(a)];
    }
    return a;
  };
  for (auto [a, b] : covers) parent[static_cast<std::size_t>(find(a))] = find(b);
  std::unordered_map<int, int> sizes;
  for (int i = 0; i < element_count; ++i) ++sizes[find(i)];
  std::vector<int> out;
  for (auto [root, size] : sizes) out.push_back(size);
  std::sort(out.begin(), out.end());
  return out;
}

HypercubePoset hypercube_poset(int k) {
  if (k < 0 || k > 20) throw std::invalid_argument("hypercube dimension must be in 0..20");
  HypercubePoset h;
  h.dimension = k;
  h.elements.resize(std::size_t{1} << k);
  std::iota(h.elements.begin(), h.elements.end(), 0u);
  return h;
}

std::vector<std::pair<int, int>> HypercubePoset::covers() const {
  std::vector<std::pair<int, int>> out;
  for (std::uint32_t m : elements)
    for (int b = 0; b < dimension; ++b)
      if (!(m & (1u << b))) out.emplace_back(static_cast<int>(m), static_cast<int>(m | (1u << b)));
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

struct LabeledInterval {
  std::vector<RotationSet> labels;
  // Cover edges as (from, to, rotation root position).
  std::vector<std::tuple<int, int, int>> edges;
};

LabeledInterval label_interval(const Interval& iv) {
  std::unordered_map<Tree, int, TreeHash> index;
  for (int i = 0; i < static_cast<int>(iv.elements.size()); ++i) index.emplace(iv.elements[i], i);
  auto lower_it = index.find(iv.lower);
  if (lower_it == index.end()) throw std::logic_error("interval does not contain its lower end");

  LabeledInterval li;
  li.labels.assign(iv.elements.size(), RotationSet{});
  std::vector<char> known(iv.elements.size(), 0);
  known[static_cast<std::size_t>(lower_it->second)] = 1;

  // Breadth-first labeling along covers; every path to an element must
  // produce the same rotation set, otherwise the hypercube claim is false.
  std::vector<int> order{lower_it->second};
  for (std::size_t qi = 0; qi < order.size(); ++qi) {
    int i = order[static_cast<std::size_t>(qi)];
    const Tree& cur = iv.elements[static_cast<std::size_t>(i)];
    for (RotationSite s : rotation_sites(cur)) {
      auto it = index.find(rotate(cur, s));
      if (it == index.end()) continue;
      int j = it->second;
      RotationSet next = li.labels[static_cast<std::size_t>(i)];
      auto ins = std::lower_bound(next.positions.begin(), next.positions.end(), s.root_pos);
      if (ins != next.positions.end() && *ins == s.root_pos)
        throw std::logic_error("rotation root repeated along a chain");
      next.positions.insert(ins, s.root_pos);
      li.edges.emplace_back(i, j, s.root_pos);
      if (!known[static_cast<std::size_t>(j)]) {
        known[static_cast<std::size_t>(j)] = 1;
        li.labels[static_cast<std::size_t>(j)] = std::move(next);
        order.push_back(j);
      } else if (li.labels[static_cast<std::size_t>(j)] != next) {
        throw std::logic_error("inconsistent rotation sets: two chains disagree");
      }
    }
  }
  for (char k : known)
    if (!k) throw std::logic_error("interval element unreachable from the lower end");
  return li;
}

}  // namespace

std::vector<RotationSet> hypercube_labeling(const Interval& iv) {
  return label_interval(iv).labels;
}

int hypercube_dimension(const Interval& iv) {
  if (!iv.lower.balanced() || !iv.upper.balanced())
    throw std::domain_error("hypercube_dimension requires balanced endpoints");
  LabeledInterval li = label_interval(iv);

  std::unordered_map<Tree, int, TreeHash> index;
  for (int i = 0; i < static_cast<int>(iv.elements.size()); ++i) index.emplace(iv.elements[i], i);
  const RotationSet& top = li.labels[static_cast<std::size_t>(index.at(iv.upper))];
  int k = static_cast<int>(top.positions.size());

  if (iv.elements.size() != (std::uint64_t{1} << k))
    throw std::logic_error("element count is not 2^k");

  // Injectivity, and every label a subset of the top label.
  std::unordered_map<std::uint64_t, int> by_mask;
  auto mask_of = [&](const RotationSet& rs) -> std::uint64_t {
    std::uint64_t m = 0;
    for (int p : rs.positions) {
      auto it = std::lower_bound(top.positions.begin(), top.positions.end(), p);
      if (it == top.positions.end() || *it != p)
        throw std::logic_error("rotation set not contained in the top rotation set");
      m |= std::uint64_t{1} << (it - top.positions.begin());
    }
    return m;
  };
  for (int i = 0; i < static_cast<int>(li.labels.size()); ++i) {
    auto [it, fresh] = by_mask.emplace(mask_of(li.labels[static_cast<std::size_t>(i)]), i);
    if (!fresh) throw std::logic_error("rotation set labeling is not injective");
  }

  // Covers are exactly the single insertions.
  std::vector<std::pair<std::uint64_t, std::uint64_t>> cover_masks;
  for (auto [i, j, pos] : li.edges) {
    std::uint64_t mi = mask_of(li.labels[static_cast<std::size_t>(i)]);
    std::uint64_t mj = mask_of(li.labels[static_cast<std::size_t>(j)]);
    if ((mi & mj) != mi || std::popcount(mj) != std::popcount(mi) + 1)
      throw std::logic_error("cover is not a single insertion");
    cover_masks.emplace_back(mi, mj);
  }
  std::sort(cover_masks.begin(), cover_masks.end());
  cover_masks.erase(std::unique(cover_masks.begin(), cover_masks.end()), cover_masks.end());
  std::uint64_t expected = 0;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << k); ++m)
    expected += static_cast<std::uint64_t>(k - std::popcount(m));
  if (cover_masks.size() != expected)
    throw std::logic_error("missing single-insertion cover");

  // Disjointness of the applied rotations: no position in the top set is
  // the infix position of the left child of another rotation root, in the
  // lower tree.
  for (int p : top.positions) {
    Tree y = subtree_at(iv.lower, p);
    if (y.left().is_leaf()) throw std::logic_error("rotation root with a leaf left child");
    int left_child_pos = p - y.left().right().size() - 1;
    if (std::binary_search(top.positions.begin(), top.positions.end(), left_child_pos))
      throw std::logic_error("rotation roots are not disjoint");
  }
  return k;
}

std::string format_row(const SweepRow& row) {
  std::ostringstream out;
  out << "n=" << row.nodes << " balanced=" << row.balanced_count << " pairs=" << row.pair_count
      << " max_k=" << row.max_k << ' ' << (row.pass ? "PASS" : "FAIL");
  if (!row.pass && !row.detail.empty()) out << " (" << row.detail << ')';
  return out.str();
}

bool all_pass(const std::vector<SweepRow>& rows) {
  return std::all_of(rows.begin(), rows.end(), [](const SweepRow& r) { return r.pass; });
}

namespace {

struct PairScan {
  std::uint64_t pairs = 0;
  int max_k = 0;
  bool pass = true;
  std::string detail;
};

// Shared sweep driver: for one balanced lower end, walk every balanced
// upper end in its up-set and run `check` on the interval elements.
template <typename Check>
PairScan scan_from(const Tree& t0, const Check& check) {
  PairScan r;
  detail::UpSet up = detail::up_set(t0);
  for (const Tree& t1 : up.balanced) {
    std::vector<Tree> elements = detail::interval_elements(t1, up.members);
    ++r.pairs;
    std::string why;
    int k = 0;
    if (!check(t0, t1, elements, &k, &why)) {
      r.pass = false;
      r.detail = std::move(why);
      return r;
    }
    r.max_k = std::max(r.max_k, k);
  }
  return r;
}

template <typename Check>
SweepRow sweep(int n, Exec exec, const Check& check) {
  SweepRow row;
  row.nodes = n;
  std::vector<Tree> balanced = all_balanced_trees(n);
  row.balanced_count = balanced.size();
  int count = static_cast<int>(balanced.size());
  std::vector<PairScan> results(balanced.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (exec == Exec::parallel)
#endif
  for (int i = 0; i < count; ++i)
    results[static_cast<std::size_t>(i)] = scan_from(balanced[static_cast<std::size_t>(i)], check);
  (void)exec;
  for (const PairScan& r : results) {
    row.pair_count += r.pairs;
    row.max_k = std::max(row.max_k, r.max_k);
    if (!r.pass && row.pass) {  // first counterexample in canonical order
      row.pass = false;
      row.detail = r.detail;
    }
  }
  return row;
}

}  // namespace

SweepRow verify_closure(int n, Exec exec) {
  return sweep(n, exec,
               [](const Tree& t0, const Tree& t1, const std::vector<Tree>& elements, int* k,
                  std::string* why) {
                 for (const Tree& t : elements) {
                   if (!t.balanced()) {
                     *why = "unbalanced element " + serialize(t) + " in [" + serialize(t0) + ", " +
                            serialize(t1) + "]";
                     return false;
                   }
                 }
                 // Interval sizes are powers of two once the closure holds;
                 // report the exponent of the observed size.
                 std::uint64_t sz = elements.size();
                 *k = 0;
                 while ((std::uint64_t{1} << *k) < sz) ++*k;
                 return true;
               });
}

SweepRow verify_hypercubes(int n, Exec exec) {
  return sweep(n, exec,
               [](const Tree& t0, const Tree& t1, const std::vector<Tree>& elements, int* k,
                  std::string* why) {
                 Interval iv;
                 iv.lower = t0;
                 iv.upper = t1;
                 iv.elements = elements;
                 try {
                   *k = hypercube_dimension(iv);
                 } catch (const std::exception& e) {
                   *why = std::string(e.what()) + " in [" + serialize(t0) + ", " + serialize(t1) + "]";
                   return false;
                 }
                 return true;
               });
}

std::vector<SweepRow> verify_closure_upto(int max_nodes, Exec exec) {
  std::vector<SweepRow> rows;
  for (int n = 0; n <= max_nodes; ++n) rows.push_back(verify_closure(n, exec));
  return rows;
}

std::vector<SweepRow> verify_hypercubes_upto(int max_nodes, Exec exec) {
  std::vector<SweepRow> rows;
  for (int n = 0; n <= max_nodes; ++n) rows.push_back(verify_hypercubes(n, exec));
  return rows;
}

namespace {

// Reachability closure over the balanced subposet covers; row i holds the
// set of elements j with element_i ≼ element_j.
std::vector<std::vector<bool>> reachability(const BalancedPoset& poset) {
  std::size_t m = poset.elements.size();
  std::vector<std::vector<int>> succ(m);
  for (auto [a, b] : poset.covers) succ[static_cast<std::size_t>(a)].push_back(b);
  std::vector<std::vector<bool>> reach(m, std::vector<bool>(m, false));
  for (std::size_t i = 0; i < m; ++i) {
    std::vector<int> stack{static_cast<int>(i)};
    reach[i][i] = true;
    while (!stack.empty()) {
      int cur = stack.back();
      stack.pop_back();
      for (int nxt : succ[static_cast<std::size_t>(cur)])
        if (!reach[i][static_cast<std::size_t>(nxt)]) {
          reach[i][static_cast<std::size_t>(nxt)] = true;
          stack.push_back(nxt);
        }
    }
  }
  return reach;
}

}  // namespace

std::uint64_t count_balanced_intervals(int n) {
  BalancedPoset poset = balanced_subposet(n);
  auto reach = reachability(poset);
  std::uint64_t count = 0;
  for (const auto& row : reach)
    for (bool r : row) count += r ? 1 : 0;
  return count;
}

std::uint64_t count_maximal_intervals(int n) {
  BalancedPoset poset = balanced_subposet(n);
  auto reach = reachability(poset);
  std::size_t m = poset.elements.size();
  std::uint64_t count = 0;
  for (std::size_t i = 0; i < m; ++i) {
    if (!minimal_by_rotations(poset.elements[i])) continue;
    for (std::size_t j = 0; j < m; ++j)
      if (reach[i][j] && maximal_by_rotations(poset.elements[j])) ++count;
  }
  return count;
}

}  // namespace tamari
