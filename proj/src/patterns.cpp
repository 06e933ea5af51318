#include "tamari/patterns.hpp"

#include <cctype>
#include <stdexcept>

namespace tamari {

TreePatternPtr pattern_node(int label, TreePatternPtr left, TreePatternPtr right) {
  auto p = std::make_shared<TreePattern>();
  p->label = label;
  p->left = std::move(left);
  p->right = std::move(right);
  return p;
}

namespace {

struct PatternParser {
  std::string_view text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  void expect(char c) {
    skip_ws();
    if (pos >= text.size() || text[pos] != c)
      throw std::invalid_argument("pattern: expected '" + std::string(1, c) + "' at offset " +
                                  std::to_string(pos));
    ++pos;
  }

  int parse_int() {
    skip_ws();
    std::size_t start = pos;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start || (pos == start + 1 && !std::isdigit(static_cast<unsigned char>(text[start]))))
      throw std::invalid_argument("pattern: expected integer label at offset " +
                                  std::to_string(start));
    return std::stoi(std::string(text.substr(start, pos - start)));
  }

  TreePatternPtr parse() {
    expect('(');
    int label = parse_int();
    TreePatternPtr left, right;
    skip_ws();
    while (pos < text.size() && (text[pos] == 'L' || text[pos] == 'R')) {
      char side = text[pos];
      ++pos;
      expect(':');
      auto child = parse();
      if (side == 'L') {
        if (left) throw std::invalid_argument("pattern: duplicate left child");
        left = child;
      } else {
        if (right) throw std::invalid_argument("pattern: duplicate right child");
        right = child;
      }
      skip_ws();
    }
    expect(')');
    return pattern_node(label, left, right);
  }
};

}  // namespace

TreePatternPtr parse_pattern(std::string_view text) {
  PatternParser p{text};
  auto out = p.parse();
  p.skip_ws();
  if (p.pos != text.size())
    throw std::invalid_argument("pattern: trailing input at offset " + std::to_string(p.pos));
  return out;
}

std::string pattern_to_string(const TreePattern& p) {
  std::string out = "(" + std::to_string(p.label);
  if (p.left) out += " L:" + pattern_to_string(*p.left);
  if (p.right) out += " R:" + pattern_to_string(*p.right);
  out += ')';
  return out;
}

namespace {

int gamma_of(const Tree& t) { return t.right().height() - t.left().height(); }

// Match with the pattern root anchored at the root of t (t internal).
bool match_at(const Tree& t, const TreePattern& p) {
  if (gamma_of(t) != p.label) return false;
  if (p.left && (t.left().is_leaf() || !match_at(t.left(), *p.left))) return false;
  if (p.right && (t.right().is_leaf() || !match_at(t.right(), *p.right))) return false;
  return true;
}

bool occurs_anywhere(const Tree& t, const TreePattern& p) {
  if (t.is_leaf()) return false;
  return match_at(t, p) || occurs_anywhere(t.left(), p) || occurs_anywhere(t.right(), p);
}

bool any_node_label(const Tree& t, const std::function<bool(int)>& pred) {
  if (t.is_leaf()) return false;
  return pred(gamma_of(t)) || any_node_label(t.left(), pred) || any_node_label(t.right(), pred);
}

bool any_internal_left_child(const Tree& t) {
  if (t.is_leaf()) return false;
  return !t.left().is_leaf() || any_internal_left_child(t.left()) ||
         any_internal_left_child(t.right());
}

}  // namespace

bool occurs(const Tree& t, const TreePattern& p) { return occurs_anywhere(t, p); }

PatternSet PatternSet::finite(std::vector<TreePatternPtr> patterns) {
  PatternSet ps;
  ps.kind_ = Kind::finite;
  ps.patterns_ = std::move(patterns);
  return ps;
}

PatternSet PatternSet::single_label(std::function<bool(int)> pred) {
  PatternSet ps;
  ps.kind_ = Kind::single_label;
  ps.pred_ = std::move(pred);
  return ps;
}

PatternSet PatternSet::any_left_edge() {
  PatternSet ps;
  ps.kind_ = Kind::any_left_edge;
  return ps;
}

bool PatternSet::occurs_in(const Tree& t) const {
  switch (kind_) {
    case Kind::finite:
      for (const auto& p : patterns_)
        if (occurs_anywhere(t, *p)) return true;
      return false;
    case Kind::single_label:
      return any_node_label(t, pred_);
    case Kind::any_left_edge:
      return any_internal_left_child(t);
  }
  return false;
}

bool avoids(const Tree& t, const PatternSet& ps) { return !ps.occurs_in(t); }

PatternSet unbalanced_label_family() {
  return PatternSet::single_label([](int i) { return i < -1 || i > 1; });
}

PatternSet nonzero_label_family() {
  return PatternSet::single_label([](int i) { return i != 0; });
}

PatternSet p_max() {
  return PatternSet::finite({pattern_node(-1, pattern_node(-1)),
                             pattern_node(-1, pattern_node(0))});
}

PatternSet p_min() {
  return PatternSet::finite({pattern_node(1, nullptr, pattern_node(1)),
                             pattern_node(1, nullptr, pattern_node(0))});
}

bool is_maximal_balanced_by_patterns(const Tree& t) {
  if (!t.balanced()) throw std::domain_error("maximality is defined on balanced trees");
  static const PatternSet pmax = p_max();
  return avoids(t, pmax);
}

bool is_minimal_balanced_by_patterns(const Tree& t) {
  if (!t.balanced()) throw std::domain_error("minimality is defined on balanced trees");
  static const PatternSet pmin = p_min();
  return avoids(t, pmin);
}

bool is_maximal_balanced(const Tree& t) { return is_maximal_balanced_by_patterns(t); }

bool is_minimal_balanced(const Tree& t) { return is_minimal_balanced_by_patterns(t); }

}  // namespace tamari
