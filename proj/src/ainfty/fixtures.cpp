#include <random>

#include "workbench/error.hpp"
#include "workbench/fixtures.hpp"

namespace wb::ainfty {

namespace {

Coeff koszul(int degree) { return degree % 2 == 0 ? 1 : -1; }

}  // namespace

Category from_dga(const Dga& dga) {
  Category cat;
  cat.name = dga.name;
  cat.objects = {"X"};
  for (const auto& [id, deg] : dga.generators) cat.basis.add({id, "X", "X", deg, std::nullopt, id});
  MultilinearMap& m1 = cat.m.at(1);
  for (const auto& [x, y, c] : dga.differential) {
    const std::size_t i = cat.basis.index(x);
    m1.add({i}, cat.basis.index(y), koszul(cat.basis[i].degree) * c);
  }
  MultilinearMap& m2 = cat.m.at(2);
  for (const auto& [x, y, z, c] : dga.product) {
    const std::size_t i = cat.basis.index(x);
    m2.add({i, cat.basis.index(y)}, cat.basis.index(z), koszul(cat.basis[i].degree) * c);
  }
  check_category(cat);
  return cat;
}

Dga exterior_algebra() {
  return {"ext(a,b)",
          {{"1", 0}, {"a", 1}, {"b", 1}, {"ab", 2}},
          {},
          {{"1", "1", "1", 1},
           {"1", "a", "a", 1},
           {"a", "1", "a", 1},
           {"1", "b", "b", 1},
           {"b", "1", "b", 1},
           {"1", "ab", "ab", 1},
           {"ab", "1", "ab", 1},
           {"a", "b", "ab", 1},
           {"b", "a", "ab", -1}}};
}

Dga interval_cochains() {
  return {"C(interval)",
          {{"v0", 0}, {"v1", 0}, {"e", 1}},
          {{"v0", "e", -1}, {"v1", "e", 1}},
          {{"v0", "v0", "v0", 1}, {"v1", "v1", "v1", 1}, {"v0", "e", "e", 1}, {"e", "v1", "e", 1}}};
}

ChainHomotopyFixture chain_homotopy_fixture() {
  ChainHomotopyFixture fx;
  Category& c = fx.complex;
  c.name = "two-term";
  c.objects = {"X"};
  const std::size_t x = c.basis.add({"x", "X", "X", 0, std::nullopt, "x"});
  const std::size_t y = c.basis.add({"y", "X", "X", 1, std::nullopt, "y"});
  c.m.at(1).add({x}, y, 1);
  fx.f = identity_functor(c);
  fx.f.name = "id";
  fx.g.name = "zero";
  fx.g.object_map = fx.f.object_map;
  fx.g.f.at(1);
  fx.h.name = "h";
  fx.h.h.at(1).add({y}, x, 1);
  return fx;
}

Functor random_gauge(const Category& cat, std::uint64_t seed, int k_max, const std::string& name) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> small(-1, 1);
  Functor f;
  f.name = name;
  for (const std::string& o : cat.objects) f.object_map[o] = o;
  MultilinearMap& one = f.f.at(1);
  for (std::size_t i = 0; i < cat.basis.size(); ++i) one.add({i}, i, 1);

  // Elementary row operations inside each (source, target, degree) block keep f^1 unimodular.
  std::map<std::tuple<std::string, std::string, int>, std::vector<std::size_t>> blocks;
  for (std::size_t i = 0; i < cat.basis.size(); ++i) {
    const Generator& g = cat.basis[i];
    blocks[{g.source, g.target, g.degree}].push_back(i);
  }
  for (const auto& [key, members] : blocks) {
    if (members.size() < 2) continue;
    for (int step = 0; step < 3; ++step) {
      const std::size_t a = members[rng() % members.size()];
      const std::size_t b = members[rng() % members.size()];
      if (a == b) continue;
      const Coeff c = small(rng);
      for (const auto& [w, v] : std::map<Word, Vec>(one.table())) {
        auto it = v.find(b);
        if (it != v.end()) one.add(w, a, c * it->second);
      }
    }
  }
  for (int r = 2; r <= k_max; ++r) {
    MultilinearMap& fr = f.f.at(r);
    for (const Word& w : composable_words(cat.basis, r)) {
      if (static_cast<int>(w.size()) != r) continue;
      const int target_degree =
          [&] {
            int s = 0;
            for (std::size_t i : w) s += cat.basis[i].degree;
            return s;
          }() +
          degree_shift(FamilyKind::functor, r);
      for (std::size_t o : cat.basis.hom(cat.basis[w.front()].source, cat.basis[w.back()].target)) {
        if (cat.basis[o].degree == target_degree && rng() % 2 == 0) fr.add(w, o, small(rng));
      }
    }
  }
  return f;
}

void flip_coefficient(MapFamily& family, int arity, Coeff delta) {
  const MultilinearMap* m = family.get(arity);
  if (!m || m->table().empty()) throw Error(Errc::invalid_input, "no table entry to flip at this arity");
  const auto& [word, value] = *m->table().begin();
  const Word w = word;
  const std::size_t out = value.begin()->first;
  family.at(arity).add(w, out, delta);
}

}  // namespace wb::ainfty
