#pragma once

#include <cstdint>
#include <string>
#include <tuple>
#include <vector>

#include "workbench/ainfty.hpp"

namespace wb::ainfty {

// Single-object differential graded algebra, turned into an A-infinity category with
// m^1(x) = (-1)^|x| dx and m^2(x1, x2) = (-1)^|x1| x1 x2.
struct Dga {
  std::string name;
  std::vector<std::pair<std::string, int>> generators;
  std::vector<std::tuple<std::string, std::string, Coeff>> differential;
  std::vector<std::tuple<std::string, std::string, std::string, Coeff>> product;
};

Category from_dga(const Dga& dga);

// Exterior algebra on two degree-one generators.
Dga exterior_algebra();
// Simplicial cochains of the interval with the cup product.
Dga interval_cochains();

// Two-term complex x -> y with f = id, g = 0, h(y) = x.
struct ChainHomotopyFixture {
  Category complex;
  Functor f;
  Functor g;
  Homotopy h;
};
ChainHomotopyFixture chain_homotopy_fixture();

// Endofunctor with unimodular f^1 (identity on objects) and random higher components up to k_max.
Functor random_gauge(const Category& cat, std::uint64_t seed, int k_max, const std::string& name = "F");

// Adds delta to one existing table entry (the first in table order at the given arity).
void flip_coefficient(MapFamily& family, int arity, Coeff delta = 1);

}  // namespace wb::ainfty
