#include <algorithm>
#include <functional>

#include "workbench/error.hpp"
#include "workbench/moduli.hpp"

namespace wb::moduli {

int gamma_dimension(const RibbonTree& tree, std::span<const VertexClass> classes) {
  const auto fixed = std::count_if(classes.begin(), classes.end(), [](VertexClass c) { return c != VertexClass::f; });
  return tree.k() - 1 - static_cast<int>(fixed);
}

namespace {

// Class assignments monotone along the root path: m below f below m'.
void monotone_classes(const RibbonTree& tree, std::vector<std::vector<VertexClass>>& out) {
  const int n = tree.vertex_count();
  std::vector<VertexClass> cur(n);
  // preorder numbering: parents precede children, so assign top-down
  std::function<void(int)> rec = [&](int v) {
    if (v == n) {
      out.push_back(cur);
      return;
    }
    const int p = tree.parent(v);
    for (VertexClass c : {VertexClass::m, VertexClass::f, VertexClass::mprime}) {
      if (p >= 0 && static_cast<int>(c) > static_cast<int>(cur[p])) continue;
      cur[v] = c;
      rec(v + 1);
    }
  };
  rec(0);
}

}  // namespace

std::vector<Stratum> enumerate_strata_N(int k) {
  std::vector<Stratum> out;
  for (const RibbonTree& t : enumerate_trees(k)) {
    std::vector<std::vector<VertexClass>> assignments;
    monotone_classes(t, assignments);
    for (auto& cls : assignments) {
      const int dim = gamma_dimension(t, cls);
      out.push_back({t, std::move(cls), dim});
    }
  }
  return out;
}

std::vector<WeakOrder> refine_weak_orders(const Stratum& s) {
  const auto rel = partial_order(s.tree);
  std::vector<int> fv;
  for (int v = 0; v < s.tree.vertex_count(); ++v) {
    if (s.classes[v] == VertexClass::f) fv.push_back(v);
  }
  const int base = s.tree.k() - 1 - s.tree.vertex_count();
  const int nf = static_cast<int>(fv.size());
  if (nf == 0) return {{{}, base, false}};

  std::vector<WeakOrder> out;
  std::vector<int> assign(nf, 0);
  for (int nb = 1; nb <= nf; ++nb) {
    std::function<void(int)> surj = [&](int i) {
      if (i == nf) {
        std::vector<std::vector<int>> bl(nb);
        for (int j = 0; j < nf; ++j) bl[assign[j]].push_back(fv[j]);
        if (std::any_of(bl.begin(), bl.end(), [](const auto& b) { return b.empty(); })) return;
        for (int a = 0; a < nf; ++a) {
          for (int b = 0; b < nf; ++b) {
            if (a != b && rel[fv[a]][fv[b]] && assign[a] > assign[b]) return;
          }
        }
        out.push_back({std::move(bl), base + nb, nb < nf});
        return;
      }
      for (int b = 0; b < nb; ++b) {
        assign[i] = b;
        surj(i + 1);
      }
    };
    surj(0);
  }
  return out;
}

DecoratedTree::DecoratedTree(RibbonTree tree, std::vector<Rational> rho) : tree_(std::move(tree)), rho_(std::move(rho)) {
  if (static_cast<int>(rho_.size()) != tree_.vertex_count()) {
    throw Error(Errc::invalid_input, "time allocation needs one value per interior vertex");
  }
  for (const Rational& r : rho_) {
    if (r < Rational(0) || r > Rational(1)) throw Error(Errc::invalid_input, "time allocation values must lie in [0,1]");
  }
  for (int v = 0; v < tree_.vertex_count(); ++v) {
    const int p = tree_.parent(v);
    if (p >= 0 && rho_[v] > rho_[p]) {
      throw Error(Errc::invalid_input, "time allocation must be monotone towards the root");
    }
  }
}

VertexClass DecoratedTree::vertex_class(int v) const {
  const Rational& r = rho_.at(v);
  if (r == Rational(0)) return VertexClass::m;
  if (r == Rational(1)) return VertexClass::mprime;
  return VertexClass::f;
}

std::vector<VertexClass> DecoratedTree::classes() const {
  std::vector<VertexClass> out;
  for (int v = 0; v < tree_.vertex_count(); ++v) out.push_back(vertex_class(v));
  return out;
}

WeakOrder DecoratedTree::weak_order() const {
  std::vector<int> fv;
  for (int v = 0; v < tree_.vertex_count(); ++v) {
    if (vertex_class(v) == VertexClass::f) fv.push_back(v);
  }
  std::stable_sort(fv.begin(), fv.end(), [&](int a, int b) { return rho_[a] < rho_[b]; });
  WeakOrder w;
  for (std::size_t i = 0; i < fv.size(); ++i) {
    if (i == 0 || rho_[fv[i]] != rho_[fv[i - 1]]) w.blocks.emplace_back();
    w.blocks.back().push_back(fv[i]);
  }
  w.has_ties = w.blocks.size() < fv.size();
  w.dimension = tree_.k() - 1 - tree_.vertex_count() + static_cast<int>(w.blocks.size());
  return w;
}

std::vector<LStratum> enumerate_strata_L(int k) {
  std::vector<LStratum> out;
  for (Stratum& s : enumerate_strata_N(k)) {
    const RibbonTree& t = s.tree;
    const int dim = s.dimension + 1;
    for (int v = 0; v < t.vertex_count(); ++v) {
      if (s.classes[v] == VertexClass::f) out.push_back({s, {false, {false, v}}, dim});
    }
    auto upper_jumps = [&](int up) { return up < 0 || s.classes[up] == VertexClass::mprime; };
    for (int j = 1; j <= k; ++j) {
      if (upper_jumps(t.leaf_parent(j))) out.push_back({s, {true, {true, j}}, dim});
    }
    for (int v = 0; v < t.vertex_count(); ++v) {
      if (s.classes[v] == VertexClass::m && upper_jumps(t.parent(v))) out.push_back({s, {true, {false, v}}, dim});
    }
  }
  return out;
}

}  // namespace wb::moduli
