#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "workbench/chords.hpp"
#include "workbench/relation_term.hpp"
#include "workbench/signs.hpp"

namespace wb::ainfty {

using Coeff = long long;

struct Generator {
  std::string id;
  std::string source;
  std::string target;
  int degree = 0;
  std::optional<double> action;
  std::string label;
};

class GradedHom {
 public:
  std::size_t add(Generator g);
  std::size_t index(std::string_view id) const;
  bool contains(std::string_view id) const { return lookup_.contains(std::string(id)); }
  const Generator& operator[](std::size_t i) const { return basis_.at(i); }
  std::size_t size() const { return basis_.size(); }
  std::span<const Generator> basis() const { return basis_; }
  std::map<int, std::vector<std::size_t>> by_degree() const;
  std::vector<std::size_t> hom(std::string_view source, std::string_view target) const;

 private:
  std::vector<Generator> basis_;
  std::map<std::string, std::size_t> lookup_;
};

// Sparse integer vector; entries are never zero.
using Vec = std::map<std::size_t, Coeff>;
void axpy(Vec& y, Coeff a, const Vec& x);

using Word = std::vector<std::size_t>;

class MultilinearMap {
 public:
  explicit MultilinearMap(int arity = 1) : arity_(arity) {}
  int arity() const { return arity_; }
  void add(const Word& inputs, std::size_t output, Coeff c);
  void set(const Word& inputs, Vec value);
  const Vec* find(const Word& inputs) const;
  const std::map<Word, Vec>& table() const { return table_; }

 private:
  int arity_;
  std::map<Word, Vec> table_;
};

class MapFamily {
 public:
  int cap() const { return static_cast<int>(maps_.size()); }
  MultilinearMap& at(int arity);
  const MultilinearMap* get(int arity) const;
  // Zero when the arity is above the stored cap or the word has no entry.
  const Vec& apply(const Word& inputs) const;

 private:
  std::vector<MultilinearMap> maps_;
};

enum class FamilyKind { structure, functor, homotopy };
int degree_shift(FamilyKind kind, int arity);

struct Category {
  std::string name;
  std::vector<std::string> objects;
  GradedHom basis;
  MapFamily m;
};

struct Functor {
  std::string name;
  std::map<std::string, std::string> object_map;
  MapFamily f;
};

struct Homotopy {
  std::string name;
  MapFamily h;
};

// Composable words of length 1..max_length, target(x_j) = source(x_{j+1}).
std::vector<Word> composable_words(const GradedHom& basis, int max_length);

void check_category(const Category& cat);
void check_functor(const Functor& f, const Category& src, const Category& dst);
void check_homotopy(const Homotopy& h, const Functor& f, const Category& src, const Category& dst);

struct ResidualEntry {
  int arity = 0;
  Word inputs;
  std::size_t output = 0;
  Coeff value = 0;
};

struct ResidualReport {
  std::string relation;
  int k_max = 0;
  long long tuples = 0;
  std::vector<ResidualEntry> nonzero;
  bool ok() const { return nonzero.empty(); }
  Coeff max_abs() const;
};

ResidualReport verify_ainfty(const Category& cat, int k_max);
ResidualReport verify_functor(const Functor& f, const Category& src, const Category& dst, int k_max);

// prefix: sum_{i<=n} mu_i - n;  weighted: sum_i i*mu_i over all inputs;
// weighted_plus_arity: weighted + d.
enum class InnerSign { prefix, weighted, weighted_plus_arity };

struct HomotopySigns {
  InnerSign inner = InnerSign::prefix;
  signs::ClubReading club = signs::ClubReading::prefix_parts;
};

ResidualReport verify_homotopy(const Homotopy& h, const Functor& f, const Functor& g, const Category& src,
                               const Category& dst, int k_max, const HomotopySigns& convention = {});

Functor compose_functors(const Functor& f2, const Functor& f1, const Category& a, const Category& b,
                         const Category& c, int k_max);

Functor identity_functor(const Category& cat);

// Target structure on a copy of src's basis for which f is a functor; object map must be the identity
// and f^1 invertible over Z.
Category pushforward(const Category& src, const Functor& f, int k_max);

// Symbolic summands of the arity-d relations, in canonical order.
std::vector<RelationTerm> functor_relation_terms(int d);
std::vector<RelationTerm> homotopy_relation_terms(int d);

// Degrees of a word, in basis order.
std::vector<int> degrees(const GradedHom& basis, const Word& w);

// Cellular cochains of the square torus plus one generator per nonconstant chord.
struct MorseBottComplex {
  Category complex;
  std::vector<std::size_t> constant_part;
  std::vector<std::size_t> chord_part;
  // (action, generator) sorted by action
  std::vector<std::pair<double, std::size_t>> filtration;
  int torus_rank(int degree) const;
};

using ChordDegree = std::function<int(const chords::ChordClass&)>;
MorseBottComplex build_morse_bott_complex(const chords::Spectrum& spectrum, const ChordDegree& degree);

}  // namespace wb::ainfty
