#include <doctest.h>

#include <algorithm>
#include <set>

#include "oracles.hpp"
#include "workbench/ainfty.hpp"
#include "workbench/error.hpp"
#include "workbench/moduli.hpp"

using namespace wb::moduli;

namespace {

std::vector<wb::RelationTerm> sorted_terms(const std::vector<Facet>& facets) {
  std::vector<wb::RelationTerm> t;
  for (const auto& f : facets) t.push_back(f.term);
  std::sort(t.begin(), t.end());
  return t;
}

}  // namespace

TEST_CASE("tree enumeration matches the laminar-interval brute force") {
  for (int k = 2; k <= 6; ++k) {
    CAPTURE(k);
    const auto trees = enumerate_trees(k);
    std::set<std::string> got;
    for (const auto& t : trees) got.insert(t.encoding());
    CHECK(got.size() == trees.size());
    CHECK(got == wb::oracle::laminar_tree_encodings(k));
    CHECK(static_cast<long long>(trees.size()) == wb::oracle::tree_count_by_compositions(k));
  }
  CHECK(enumerate_trees(2).size() == 1);
  CHECK(enumerate_trees(3).size() == 3);
  CHECK(enumerate_trees(4).size() == 11);
  CHECK_THROWS_AS(enumerate_trees(1), wb::Error);
}

TEST_CASE("trees are stable and round-trip through their encoding") {
  for (const auto& t : enumerate_trees(5)) {
    CHECK(RibbonTree::parse(t.encoding()) == t);
    CHECK(t.parent(0) == -1);
    for (int v = 0; v < t.vertex_count(); ++v) CHECK(t.children(v).size() >= 2);
  }
  CHECK_THROWS_AS(RibbonTree::parse("(1)"), wb::Error);
  CHECK_THROWS_AS(RibbonTree::parse("(2,1)"), wb::Error);
}

TEST_CASE("root-path partial order") {
  const auto single = partial_order(RibbonTree::parse("(1,2,3)"));
  CHECK(single == Relation{{true}});

  const auto chain = partial_order(RibbonTree::parse("((1,2),3)"));
  CHECK(chain[1][0]);
  CHECK_FALSE(chain[0][1]);

  const auto forked = partial_order(RibbonTree::parse("((1,2),(3,4))"));
  CHECK_FALSE(forked[1][2]);
  CHECK_FALSE(forked[2][1]);
  CHECK(forked[1][0]);
  CHECK(forked[2][0]);
}

TEST_CASE("stratum dimensions follow the vertex-class count") {
  for (int k = 2; k <= 6; ++k) {
    int top = -1;
    for (const auto& s : enumerate_strata_N(k)) {
      const auto fixed = std::count_if(s.classes.begin(), s.classes.end(), [](VertexClass c) { return c != VertexClass::f; });
      CHECK(s.dimension == k - 1 - fixed);
      top = std::max(top, s.dimension);
      for (int v = 1; v < s.tree.vertex_count(); ++v) {
        CHECK(static_cast<int>(s.classes[v]) <= static_cast<int>(s.classes[s.tree.parent(v)]));
      }
    }
    CHECK(top == k - 1);
  }
  const auto two = RibbonTree::parse("((1,2),3)");
  CHECK(gamma_dimension(two, std::vector{VertexClass::f, VertexClass::m}) == 1);
  CHECK(gamma_dimension(RibbonTree::parse("(1,2,3)"), std::vector{VertexClass::f}) == 2);
}

TEST_CASE("decorated trees classify vertices by time") {
  const DecoratedTree dt(RibbonTree::parse("((1,2),(3,4))"), {Rational(1), Rational(0), Rational(1, 3)});
  CHECK(dt.vertex_class(0) == VertexClass::mprime);
  CHECK(dt.vertex_class(1) == VertexClass::m);
  CHECK(dt.vertex_class(2) == VertexClass::f);
  CHECK_THROWS_AS(DecoratedTree(RibbonTree::parse("((1,2),3)"), {Rational(0), Rational(1)}), wb::Error);
}

TEST_CASE("total order sorts by leftmost leaf, then by time") {
  const DecoratedTree single(RibbonTree::parse("(1,2)"), {Rational(1, 2)});
  CHECK(total_order(single).order == std::vector<int>{0});

  const DecoratedTree forked(RibbonTree::parse("((1,2),(3,4))"), {Rational(9, 10), Rational(1, 2), Rational(1, 5)});
  const auto fo = total_order(forked).order;
  CHECK(std::find(fo.begin(), fo.end(), 1) < std::find(fo.begin(), fo.end(), 2));

  const DecoratedTree chain(RibbonTree::parse("((1,2),3)"), {Rational(7, 10), Rational(1, 5)});
  const auto co = total_order(chain);
  CHECK(co.order == std::vector<int>{1, 0});
  CHECK_FALSE(co.degenerate);

  const DecoratedTree tied(RibbonTree::parse("(((1,2),3),4)"), {Rational(1, 2), Rational(1, 2), Rational(1, 4)});
  CHECK(total_order(tied).degenerate);
}

TEST_CASE("total order refines the root-path order") {
  for (const auto& s : enumerate_strata_N(5)) {
    for (const auto& w : refine_weak_orders(s)) {
      if (w.has_ties) continue;
      std::vector<Rational> rho(s.tree.vertex_count(), Rational(0));
      for (int v = 0; v < s.tree.vertex_count(); ++v) {
        if (s.classes[v] == VertexClass::mprime) rho[v] = Rational(1);
      }
      for (std::size_t b = 0; b < w.blocks.size(); ++b) {
        for (int v : w.blocks[b]) rho[v] = Rational(static_cast<long long>(b + 1), static_cast<long long>(w.blocks.size() + 1));
      }
      const DecoratedTree dt(s.tree, rho);
      const auto order = total_order(dt).order;
      const auto rel = partial_order(s.tree);
      auto pos = [&](int v) { return std::find(order.begin(), order.end(), v) - order.begin(); };
      for (int a = 0; a < s.tree.vertex_count(); ++a) {
        for (int b = 0; b < s.tree.vertex_count(); ++b) {
          if (a != b && rel[a][b] && j_tm(s.tree, a) == j_tm(s.tree, b) && rho[a] < rho[b]) CHECK(pos(a) < pos(b));
        }
      }
    }
  }
}

TEST_CASE("s-parametrization splits around the distinguished vertex") {
  const DecoratedTree one(RibbonTree::parse("(1,2,3)"), {Rational(1, 2)});
  CHECK(s_parametrization(one, 0, Rational(1, 3)) == std::vector<Rational>{Rational(1, 3)});

  const DecoratedTree chain(RibbonTree::parse("(((1,2),3),4)"), {Rational(3, 4), Rational(1, 2), Rational(1, 4)});
  const auto top = s_parametrization(chain, 0, Rational(2, 5));
  CHECK(top == std::vector<Rational>{Rational(2, 5), Rational(1), Rational(1)});
  const auto bottom = s_parametrization(chain, 2, Rational(2, 5));
  CHECK(bottom == std::vector<Rational>{Rational(0), Rational(0), Rational(2, 5)});
  CHECK_THROWS_AS(s_parametrization(chain, 5, Rational(1, 2)), wb::Error);
}

TEST_CASE("relation term expansions agree with the cut-position oracle") {
  for (int d = 1; d <= 6; ++d) {
    CAPTURE(d);
    const auto fn = wb::ainfty::functor_relation_terms(d);
    const auto hn = wb::ainfty::homotopy_relation_terms(d);
    CHECK(fn == wb::oracle::functor_terms(d));
    CHECK(hn == wb::oracle::homotopy_terms(d));
    CHECK(static_cast<long long>(fn.size()) == wb::oracle::functor_term_count(d));
    CHECK(static_cast<long long>(hn.size()) == wb::oracle::homotopy_term_count(d));
  }
}

TEST_CASE("boundary facets are in bijection with relation terms") {
  for (int k = 2; k <= 4; ++k) {
    CAPTURE(k);
    const auto fn = boundary_facets_N(k);
    const auto fl = boundary_facets_L(k);
    CHECK(sorted_terms(fn) == wb::oracle::functor_terms(k));
    CHECK(sorted_terms(fl) == wb::oracle::homotopy_terms(k));
    for (const auto& f : fn) CHECK(f.parent_dimension - f.dimension == 1);
    for (const auto& f : fl) CHECK(f.parent_dimension - f.dimension == 1);
    const auto endpoints = std::count_if(fl.begin(), fl.end(), [](const Facet& f) { return f.type == FacetType::l_type_3; });
    CHECK(endpoints == 2);
  }
}

TEST_CASE("facet counts for larger arity") {
  const std::vector<std::size_t> n_counts{5, 10, 18, 31, 53}, l_counts{0, 16, 32, 65, 135};
  for (int k = 2; k <= 6; ++k) {
    CHECK(boundary_facets_N(k).size() == n_counts[k - 2]);
    if (k >= 3) CHECK(boundary_facets_L(k).size() == l_counts[k - 2]);
  }
}

TEST_CASE("constant-time corollas realize the extreme terms") {
  for (int k = 2; k <= 5; ++k) {
    const std::string corolla = enumerate_trees(k).front().encoding();
    int ones = 0, zeros = 0;
    for (const auto& f : boundary_facets_N(k)) {
      const bool ones_here = std::count(f.strata.begin(), f.strata.end(),
                                        corolla + " [" + std::string(class_name(VertexClass::mprime)) + "]");
      const bool zeros_here =
          std::count(f.strata.begin(), f.strata.end(), corolla + " [" + std::string(class_name(VertexClass::m)) + "]");
      if (ones_here) {
        ++ones;
        CHECK(f.term.partition == std::vector<int>(k, 1));
      }
      if (zeros_here) {
        ++zeros;
        CHECK(f.term.kind == wb::TermKind::inner);
        CHECK(f.term.n == 0);
        CHECK(f.term.m == k);
      }
    }
    CHECK(ones == 1);
    CHECK(zeros == 1);
  }
}

TEST_CASE("L-strata carry a distinguished component and one extra dimension") {
  for (int k = 2; k <= 4; ++k) {
    int top = -1;
    for (const auto& s : enumerate_strata_L(k)) {
      top = std::max(top, s.dimension);
      if (!s.delta.edge) CHECK(s.base.classes[s.delta.node.index] == VertexClass::f);
    }
    CHECK(top == k);
  }
}
