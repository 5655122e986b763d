#include "workbench/relation_term.hpp"

#include <string>

namespace wb {

namespace {

std::string args(int from, int to) {
  std::string s;
  for (int i = from; i <= to; ++i) {
    if (i > from) s += ",";
    s += "x" + std::to_string(i);
  }
  return s;
}

}  // namespace

std::string RelationTerm::label() const {
  const char outer_family = family == TermFamily::functor ? 'f' : 'h';
  switch (kind) {
    case TermKind::inner: {
      std::string s = std::string(1, outer_family) + "^" + std::to_string(d - m + 1) + "(";
      std::string inside = args(1, n);
      if (!inside.empty()) inside += ",";
      inside += "m^" + std::to_string(m) + "(" + args(n + 1, n + m) + ")";
      if (n + m < d) inside += "," + args(n + m + 1, d);
      return s + inside + ")";
    }
    case TermKind::outer: {
      std::string s = "m^" + std::to_string(partition.size()) + "(";
      int next = 1;
      for (std::size_t i = 0; i < partition.size(); ++i) {
        char sym = 'f';
        if (family == TermFamily::homotopy) {
          const int slot = static_cast<int>(i) + 1;
          sym = slot < marked ? 'f' : (slot == marked ? 'h' : 'g');
        }
        if (i) s += ",";
        s += std::string(1, sym) + "^" + std::to_string(partition[i]) + "(" + args(next, next + partition[i] - 1) + ")";
        next += partition[i];
      }
      return s + ")";
    }
    case TermKind::endpoint_f: return "-f^" + std::to_string(d) + "(" + args(1, d) + ")";
    case TermKind::endpoint_g: return "g^" + std::to_string(d) + "(" + args(1, d) + ")";
  }
  return {};
}

}  // namespace wb
