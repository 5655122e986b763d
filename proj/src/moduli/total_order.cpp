#include <algorithm>

#include "workbench/error.hpp"
#include "workbench/moduli.hpp"

namespace wb::moduli {

int j_tm(const RibbonTree& tree, int v) { return tree.first_leaf(v); }

TotalOrder total_order(const DecoratedTree& dt) {
  const RibbonTree& t = dt.tree();
  const auto rho = dt.rho();
  TotalOrder out;
  out.order.resize(t.vertex_count());
  for (int v = 0; v < t.vertex_count(); ++v) out.order[v] = v;
  auto key_less = [&](int a, int b) {
    if (j_tm(t, a) != j_tm(t, b)) return j_tm(t, a) < j_tm(t, b);
    return rho[a] < rho[b];
  };
  std::stable_sort(out.order.begin(), out.order.end(), key_less);
  for (std::size_t i = 1; i < out.order.size(); ++i) {
    const int a = out.order[i - 1], b = out.order[i];
    if (!key_less(a, b) && !key_less(b, a)) out.ties.emplace_back(a, b);
  }
  out.degenerate = !out.ties.empty();
  return out;
}

std::vector<Rational> s_parametrization(const DecoratedTree& dt, int delta, Rational s) {
  const int n = dt.tree().vertex_count();
  if (delta < 0 || delta >= n) throw Error(Errc::index_range, "distinguished vertex out of range");
  if (s < Rational(0) || s > Rational(1)) throw Error(Errc::invalid_input, "s must lie in [0,1]");
  const TotalOrder ord = total_order(dt);
  for (auto [a, b] : ord.ties) {
    if (a == delta || b == delta) {
      throw Error(Errc::invalid_input, "order-degenerate: the distinguished vertex is tied in the total order");
    }
  }
  std::vector<Rational> out(n, Rational(0));
  bool before = true;
  for (int v : ord.order) {
    if (v == delta) {
      out[v] = s;
      before = false;
    } else {
      out[v] = before ? Rational(1) : Rational(0);
    }
  }
  return out;
}

}  // namespace wb::moduli
