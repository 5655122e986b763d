#include <algorithm>
#include <functional>

#include "workbench/ainfty.hpp"
#include "workbench/error.hpp"

namespace wb::ainfty {

namespace {

std::vector<std::vector<int>> all_compositions(int d) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int left) {
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    for (int p = 1; p <= left; ++p) {
      cur.push_back(p);
      rec(left - p);
      cur.pop_back();
    }
  };
  rec(d);
  return out;
}

std::vector<RelationTerm> expand(TermFamily fam, int d) {
  if (d < 1) throw Error(Errc::invalid_arity, "relation arity must be positive");
  std::vector<RelationTerm> out;
  for (int m = 1; m <= d; ++m) {
    for (int n = 0; n + m <= d; ++n) out.push_back({fam, TermKind::inner, d, n, m, {}, 0});
  }
  for (auto& parts : all_compositions(d)) {
    if (fam == TermFamily::functor) {
      out.push_back({fam, TermKind::outer, d, 0, 0, parts, 0});
    } else {
      for (int i = 1; i <= static_cast<int>(parts.size()); ++i) out.push_back({fam, TermKind::outer, d, 0, 0, parts, i});
    }
  }
  if (fam == TermFamily::homotopy) {
    out.push_back({fam, TermKind::endpoint_f, d, 0, 0, {}, 0});
    out.push_back({fam, TermKind::endpoint_g, d, 0, 0, {}, 0});
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<RelationTerm> functor_relation_terms(int d) { return expand(TermFamily::functor, d); }
std::vector<RelationTerm> homotopy_relation_terms(int d) { return expand(TermFamily::homotopy, d); }

}  // namespace wb::ainfty
