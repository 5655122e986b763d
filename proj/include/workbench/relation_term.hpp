#pragma once

#include <compare>
#include <string>
#include <vector>

namespace wb {

// One summand of the arity-d functor relation or homotopy relation.
//   inner:      outer family of arity d-m+1 with m^m inserted after n inputs
//   outer:      m^r applied to the blocks of `partition`; for homotopies `marked` is the h slot
//   endpoint_f: the -f^d term,  endpoint_g: the g^d term
enum class TermFamily { functor, homotopy };
enum class TermKind { inner, outer, endpoint_f, endpoint_g };

struct RelationTerm {
  TermFamily family = TermFamily::functor;
  TermKind kind = TermKind::inner;
  int d = 0;
  int n = 0;
  int m = 0;
  std::vector<int> partition;
  int marked = 0;

  auto operator<=>(const RelationTerm&) const = default;

  std::string label() const;
};

}  // namespace wb
