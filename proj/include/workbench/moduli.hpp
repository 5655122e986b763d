#pragma once

#include <boost/rational.hpp>
#include <compare>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "workbench/relation_term.hpp"

namespace wb::moduli {

using Rational = boost::rational<long long>;

// A child slot: either input leaf j (1-based) or interior vertex v.
struct Node {
  bool leaf = false;
  int index = 0;
  auto operator<=>(const Node&) const = default;
};

class RibbonTree {
 public:
  // Parenthesized leaf-sequence normal form, e.g. "(1,(2,3))".
  static RibbonTree parse(std::string_view encoding);

  int k() const { return leaves_; }
  int vertex_count() const { return static_cast<int>(children_.size()); }
  std::span<const Node> children(int v) const { return children_.at(v); }
  int parent(int v) const { return parent_.at(v); }
  int leaf_parent(int j) const { return leaf_parent_.at(j - 1); }
  // Smallest and largest input leaf below v.
  int first_leaf(int v) const { return first_leaf_.at(v); }
  int last_leaf(int v) const { return last_leaf_.at(v); }
  const std::string& encoding() const { return encoding_; }

  friend bool operator==(const RibbonTree& a, const RibbonTree& b) { return a.encoding_ == b.encoding_; }

 private:
  int leaves_ = 0;
  std::vector<std::vector<Node>> children_;
  std::vector<int> parent_;
  std::vector<int> leaf_parent_;
  std::vector<int> first_leaf_;
  std::vector<int> last_leaf_;
  std::string encoding_;
};

std::vector<RibbonTree> enumerate_trees(int k);

// rel[a][b] holds iff the path from a to the root passes through b (reflexive).
using Relation = std::vector<std::vector<bool>>;
Relation partial_order(const RibbonTree& tree);

// Dimension of the stratum of the associahedron indexed by the tree.
int associahedron_dimension(const RibbonTree& tree);

enum class VertexClass { m, f, mprime };
std::string_view class_name(VertexClass c);

struct Stratum {
  RibbonTree tree;
  std::vector<VertexClass> classes;
  int dimension = 0;
};

int gamma_dimension(const RibbonTree& tree, std::span<const VertexClass> classes);
std::vector<Stratum> enumerate_strata_N(int k);

struct WeakOrder {
  std::vector<std::vector<int>> blocks;  // f-vertices, ascending time
  int dimension = 0;
  bool has_ties = false;
};

// Ordered set partitions of the f-vertices compatible with the root-path order.
std::vector<WeakOrder> refine_weak_orders(const Stratum& stratum);

class DecoratedTree {
 public:
  DecoratedTree(RibbonTree tree, std::vector<Rational> rho);

  const RibbonTree& tree() const { return tree_; }
  std::span<const Rational> rho() const { return rho_; }
  VertexClass vertex_class(int v) const;
  std::vector<VertexClass> classes() const;
  WeakOrder weak_order() const;

 private:
  RibbonTree tree_;
  std::vector<Rational> rho_;
};

struct TotalOrder {
  std::vector<int> order;
  bool degenerate = false;
  std::vector<std::pair<int, int>> ties;
};

int j_tm(const RibbonTree& tree, int v);
TotalOrder total_order(const DecoratedTree& tree);
std::vector<Rational> s_parametrization(const DecoratedTree& tree, int delta, Rational s);

// Distinguished component of an L-stratum: an f-vertex, or a jump edge named by
// its lower end (a leaf or an m-vertex) whose upper end is an m'-vertex or the output.
struct Distinguished {
  bool edge = false;
  Node node;
  auto operator<=>(const Distinguished&) const = default;
};

struct LStratum {
  Stratum base;
  Distinguished delta;
  int dimension = 0;
};

std::vector<LStratum> enumerate_strata_L(int k);

enum class FacetType { n_type_1, n_type_2, l_type_1, l_type_2, l_type_3 };
std::string_view facet_type_name(FacetType t);

struct Component {
  char space = 'M';  // M, N, L or P (a point of {0,1})
  int inputs = 0;
  int dimension = 0;
};

struct Facet {
  FacetType type = FacetType::n_type_1;
  RelationTerm term;
  std::vector<Component> components;
  int parent_dimension = 0;
  int dimension = 0;
  bool strip_breaking = false;
  // Strata of the parent space realizing this facet (empty for strip breaking).
  std::vector<std::string> strata;
};

std::vector<Facet> boundary_facets_N(int k);
std::vector<Facet> boundary_facets_L(int k);

}  // namespace wb::moduli
