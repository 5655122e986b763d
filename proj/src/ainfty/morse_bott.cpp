#include <algorithm>

#include "workbench/ainfty.hpp"

namespace wb::ainfty {

namespace {

std::string datum_text(const std::vector<int>& datum) {
  std::string s;
  for (std::size_t i = 0; i < datum.size(); ++i) s += (i ? "," : "") + std::to_string(datum[i]);
  return s;
}

}  // namespace

int MorseBottComplex::torus_rank(int degree) const {
  return static_cast<int>(std::count_if(constant_part.begin(), constant_part.end(),
                                        [&](std::size_t i) { return complex.basis[i].degree == degree; }));
}

MorseBottComplex build_morse_bott_complex(const chords::Spectrum& spectrum, const ChordDegree& degree) {
  MorseBottComplex out;
  Category& cat = out.complex;
  cat.name = "CW(" + spectrum.model + ")";
  cat.objects = {"L"};
  const std::pair<const char*, int> cells[] = {{"pt", 0}, {"dx", 1}, {"dy", 1}, {"dxdy", 2}};
  for (const auto& [id, deg] : cells) {
    out.constant_part.push_back(cat.basis.add({id, "L", "L", deg, 0.0, std::string("cell ") + id}));
  }
  for (const chords::ChordClass& c : spectrum.classes) {
    if (c.constant_family) continue;
    const std::string id = "chord[" + datum_text(c.datum) + "]";
    out.chord_part.push_back(cat.basis.add({id, "L", "L", degree(c), c.action, id}));
  }
  cat.m.at(1);
  for (std::size_t i = 0; i < cat.basis.size(); ++i) out.filtration.emplace_back(*cat.basis[i].action, i);
  std::stable_sort(out.filtration.begin(), out.filtration.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

}  // namespace wb::ainfty
