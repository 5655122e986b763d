#include <algorithm>
#include <cctype>
#include <functional>
#include <map>

#include "workbench/error.hpp"
#include "workbench/moduli.hpp"

namespace wb::moduli {

namespace {

struct Parser {
  std::string_view s;
  std::size_t pos = 0;
  std::vector<std::vector<Node>>& children;
  std::vector<int>& parent;
  int next_leaf = 1;

  [[noreturn]] void fail(const char* what) const {
    throw Error(Errc::invalid_input, std::string("tree encoding: ") + what + " at offset " + std::to_string(pos));
  }

  void skip() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }

  Node parse(int up) {
    skip();
    if (pos >= s.size()) fail("unexpected end");
    if (s[pos] == '(') {
      ++pos;
      const int v = static_cast<int>(children.size());
      children.emplace_back();
      parent.push_back(up);
      while (true) {
        Node c = parse(v);
        children[v].push_back(c);
        skip();
        if (pos >= s.size()) fail("unterminated vertex");
        if (s[pos] == ',') {
          ++pos;
          continue;
        }
        if (s[pos] == ')') {
          ++pos;
          break;
        }
        fail("expected ',' or ')'");
      }
      if (children[v].size() < 2) fail("interior vertex with fewer than two inputs");
      return {false, v};
    }
    int value = 0;
    const std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) value = value * 10 + (s[pos++] - '0');
    if (pos == start) fail("expected a leaf label");
    if (value != next_leaf) fail("leaves must appear as 1, 2, ..., k in order");
    ++next_leaf;
    return {true, value};
  }
};

void compositions(int total, std::vector<int>& current, std::vector<std::vector<int>>& out) {
  if (total == 0) {
    out.push_back(current);
    return;
  }
  for (int part = 1; part <= total; ++part) {
    current.push_back(part);
    compositions(total - part, current, out);
    current.pop_back();
  }
}

std::vector<std::string> interval_trees(int lo, int hi, std::map<std::pair<int, int>, std::vector<std::string>>& memo) {
  if (auto it = memo.find({lo, hi}); it != memo.end()) return it->second;
  std::vector<std::string> out;
  if (lo == hi) {
    out.push_back(std::to_string(lo));
  } else {
    std::vector<std::vector<int>> comps;
    std::vector<int> cur;
    compositions(hi - lo + 1, cur, comps);
    for (const auto& comp : comps) {
      if (comp.size() < 2) continue;
      std::vector<std::vector<std::string>> parts;
      int start = lo;
      for (int len : comp) {
        parts.push_back(interval_trees(start, start + len - 1, memo));
        start += len;
      }
      std::function<void(std::size_t, std::string)> rec = [&](std::size_t i, std::string acc) {
        if (i == parts.size()) {
          out.push_back(acc + ")");
          return;
        }
        for (const auto& p : parts[i]) rec(i + 1, acc + (i == 0 ? "" : ",") + p);
      };
      rec(0, "(");
    }
  }
  memo[{lo, hi}] = out;
  return out;
}

}  // namespace

RibbonTree RibbonTree::parse(std::string_view encoding) {
  RibbonTree t;
  Parser p{encoding, 0, t.children_, t.parent_};
  const Node root = p.parse(-1);
  p.skip();
  if (p.pos != encoding.size()) p.fail("trailing characters");
  if (root.leaf) throw Error(Errc::invalid_arity, "a stable tree needs at least two inputs");
  t.leaves_ = p.next_leaf - 1;
  const int nv = t.vertex_count();
  t.leaf_parent_.assign(t.leaves_, -1);
  t.first_leaf_.assign(nv, 0);
  t.last_leaf_.assign(nv, 0);
  for (int v = nv - 1; v >= 0; --v) {
    const auto& ch = t.children_[v];
    for (const Node& c : ch) {
      if (c.leaf) t.leaf_parent_[c.index - 1] = v;
    }
    t.first_leaf_[v] = ch.front().leaf ? ch.front().index : t.first_leaf_[ch.front().index];
    t.last_leaf_[v] = ch.back().leaf ? ch.back().index : t.last_leaf_[ch.back().index];
  }
  std::function<std::string(Node)> emit = [&](Node n) -> std::string {
    if (n.leaf) return std::to_string(n.index);
    std::string s = "(";
    for (std::size_t i = 0; i < t.children_[n.index].size(); ++i) {
      if (i) s += ",";
      s += emit(t.children_[n.index][i]);
    }
    return s + ")";
  };
  t.encoding_ = emit(root);
  return t;
}

std::vector<RibbonTree> enumerate_trees(int k) {
  if (k < 2) throw Error(Errc::invalid_arity, "trees need k >= 2 inputs");
  std::map<std::pair<int, int>, std::vector<std::string>> memo;
  std::vector<RibbonTree> trees;
  for (const auto& enc : interval_trees(1, k, memo)) trees.push_back(RibbonTree::parse(enc));
  std::stable_sort(trees.begin(), trees.end(), [](const RibbonTree& a, const RibbonTree& b) {
    if (a.vertex_count() != b.vertex_count()) return a.vertex_count() < b.vertex_count();
    return a.encoding() < b.encoding();
  });
  return trees;
}

Relation partial_order(const RibbonTree& tree) {
  const int n = tree.vertex_count();
  Relation rel(n, std::vector<bool>(n, false));
  for (int a = 0; a < n; ++a) {
    for (int b = a; b != -1; b = tree.parent(b)) rel[a][b] = true;
  }
  return rel;
}

int associahedron_dimension(const RibbonTree& tree) { return tree.k() - 1 - tree.vertex_count(); }

std::string_view class_name(VertexClass c) {
  switch (c) {
    case VertexClass::m: return "m";
    case VertexClass::f: return "f";
    case VertexClass::mprime: return "m'";
  }
  return "?";
}

}  // namespace wb::moduli
