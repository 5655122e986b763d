#include <algorithm>
#include <map>

#include "workbench/error.hpp"
#include "workbench/moduli.hpp"

namespace wb::moduli {

namespace {

Component component(char space, int inputs) {
  switch (space) {
    case 'M': return {space, inputs, inputs - 2};
    case 'N': return {space, inputs, inputs - 1};
    case 'L': return {space, inputs, inputs};
    default: return {'P', 0, 0};
  }
}

std::vector<Component> components_of(const RelationTerm& t) {
  const bool homotopy = t.family == TermFamily::homotopy;
  switch (t.kind) {
    case TermKind::inner:
      return {component(homotopy ? 'L' : 'N', t.d - t.m + 1), component('M', t.m)};
    case TermKind::outer: {
      std::vector<Component> c{component('M', static_cast<int>(t.partition.size()))};
      for (std::size_t i = 0; i < t.partition.size(); ++i) {
        const bool h = homotopy && static_cast<int>(i) + 1 == t.marked;
        c.push_back(component(h ? 'L' : 'N', t.partition[i]));
      }
      return c;
    }
    case TermKind::endpoint_f:
    case TermKind::endpoint_g:
      return {component('P', 0), component('N', t.d)};
  }
  return {};
}

FacetType facet_type(const RelationTerm& t) {
  if (t.family == TermFamily::functor) return t.kind == TermKind::inner ? FacetType::n_type_1 : FacetType::n_type_2;
  switch (t.kind) {
    case TermKind::outer: return FacetType::l_type_1;
    case TermKind::inner: return FacetType::l_type_2;
    default: return FacetType::l_type_3;
  }
}

Facet make_facet(const RelationTerm& t, int parent_dimension, bool strip) {
  Facet f;
  f.type = facet_type(t);
  f.term = t;
  f.components = components_of(t);
  f.parent_dimension = parent_dimension;
  f.dimension = 0;
  for (const Component& c : f.components) f.dimension += c.dimension;
  f.strip_breaking = strip;
  return f;
}

std::string stratum_label(const Stratum& s) {
  std::string out = s.tree.encoding() + " [";
  for (std::size_t v = 0; v < s.classes.size(); ++v) {
    if (v) out += ",";
    out += class_name(s.classes[v]);
  }
  return out + "]";
}

std::string delta_label(const Distinguished& d) {
  if (!d.edge) return "delta=v" + std::to_string(d.node.index);
  return d.node.leaf ? "delta=edge(leaf " + std::to_string(d.node.index) + ")"
                     : "delta=edge(v" + std::to_string(d.node.index) + ")";
}

int only_fixed_vertex(const Stratum& s) {
  int found = -1;
  for (int v = 0; v < static_cast<int>(s.classes.size()); ++v) {
    if (s.classes[v] == VertexClass::f) continue;
    if (found >= 0) throw Error(Errc::invalid_input, "stratum has more than one non-f vertex");
    found = v;
  }
  return found;
}

std::vector<int> root_partition(const RibbonTree& t) {
  std::vector<int> parts;
  for (const Node& c : t.children(0)) parts.push_back(c.leaf ? 1 : t.last_leaf(c.index) - t.first_leaf(c.index) + 1);
  return parts;
}

// Slot of the root child containing vertex v or leaf j.
int root_slot(const RibbonTree& t, Node n) {
  const int leaf = n.leaf ? n.index : t.first_leaf(n.index);
  int slot = 1;
  for (const Node& c : t.children(0)) {
    const int lo = c.leaf ? c.index : t.first_leaf(c.index);
    const int hi = c.leaf ? c.index : t.last_leaf(c.index);
    if (leaf >= lo && leaf <= hi) return slot;
    ++slot;
  }
  throw Error(Errc::invalid_input, "node not below the root");
}

RelationTerm inner_term(TermFamily fam, int d, int n, int m) { return {fam, TermKind::inner, d, n, m, {}, 0}; }
RelationTerm outer_term(TermFamily fam, int d, std::vector<int> parts, int marked) {
  return {fam, TermKind::outer, d, 0, 0, std::move(parts), marked};
}

std::vector<Facet> collect(std::map<RelationTerm, Facet>& facets) {
  std::vector<Facet> out;
  for (auto& [term, f] : facets) {
    std::sort(f.strata.begin(), f.strata.end());
    out.push_back(std::move(f));
  }
  return out;
}

}  // namespace

std::string_view facet_type_name(FacetType t) {
  switch (t) {
    case FacetType::n_type_1: return "N-type-1";
    case FacetType::n_type_2: return "N-type-2";
    case FacetType::l_type_1: return "L-type-1";
    case FacetType::l_type_2: return "L-type-2";
    case FacetType::l_type_3: return "L-type-3";
  }
  return "?";
}

std::vector<Facet> boundary_facets_N(int k) {
  if (k < 2) throw Error(Errc::invalid_arity, "facets need k >= 2");
  const TermFamily fam = TermFamily::functor;
  std::map<RelationTerm, Facet> facets;
  auto add = [&](const RelationTerm& t, const std::string& stratum, bool strip) {
    auto it = facets.find(t);
    if (it == facets.end()) it = facets.emplace(t, make_facet(t, k - 1, strip)).first;
    if (!stratum.empty()) it->second.strata.push_back(stratum);
  };
  for (const Stratum& s : enumerate_strata_N(k)) {
    if (s.dimension != k - 2) continue;
    const int v = only_fixed_vertex(s);
    const RibbonTree& t = s.tree;
    if (s.classes[v] == VertexClass::m) {
      const int lo = t.first_leaf(v), hi = t.last_leaf(v);
      add(inner_term(fam, k, lo - 1, hi - lo + 1), stratum_label(s), false);
    } else {
      add(outer_term(fam, k, root_partition(t), 0), stratum_label(s), false);
    }
  }
  for (int n = 0; n < k; ++n) add(inner_term(fam, k, n, 1), "", true);
  add(outer_term(fam, k, {k}, 0), "", true);
  return collect(facets);
}

std::vector<Facet> boundary_facets_L(int k) {
  if (k < 2) throw Error(Errc::invalid_arity, "facets need k >= 2");
  const TermFamily fam = TermFamily::homotopy;
  std::map<RelationTerm, Facet> facets;
  auto add = [&](const RelationTerm& t, const std::string& stratum, bool strip) {
    auto it = facets.find(t);
    if (it == facets.end()) it = facets.emplace(t, make_facet(t, k, strip)).first;
    if (!stratum.empty()) it->second.strata.push_back(stratum);
  };
  for (const LStratum& ls : enumerate_strata_L(k)) {
    if (ls.dimension != k - 1) continue;
    const Stratum& s = ls.base;
    const int v = only_fixed_vertex(s);
    const RibbonTree& t = s.tree;
    const std::string label = stratum_label(s) + " " + delta_label(ls.delta);
    if (s.classes[v] == VertexClass::m) {
      const int lo = t.first_leaf(v), hi = t.last_leaf(v);
      add(inner_term(fam, k, lo - 1, hi - lo + 1), label, false);
    } else {
      add(outer_term(fam, k, root_partition(t), root_slot(t, ls.delta.node)), label, false);
    }
  }
  // the two ends of the homotopy parameter, read off the top stratum
  const RibbonTree corolla = enumerate_trees(k).front();
  const DecoratedTree top(corolla, {Rational(1, 2)});
  for (int end = 0; end <= 1; ++end) {
    const auto values = s_parametrization(top, 0, Rational(end));
    const bool all_one = std::all_of(values.begin(), values.end(), [](const Rational& r) { return r == Rational(1); });
    RelationTerm t{fam, all_one ? TermKind::endpoint_g : TermKind::endpoint_f, k, 0, 0, {}, 0};
    add(t, corolla.encoding() + " [f] s=" + std::to_string(end), false);
  }
  for (int n = 0; n < k; ++n) add(inner_term(fam, k, n, 1), "", true);
  add(outer_term(fam, k, {k}, 1), "", true);
  return collect(facets);
}

}  // namespace wb::moduli
