#include "workbench/error.hpp"

namespace wb {

std::string_view to_string(Errc code) {
  switch (code) {
    case Errc::invalid_domain: return "invalid_domain";
    case Errc::numeric_failure: return "numeric_failure";
    case Errc::singular_point: return "singular_point";
    case Errc::incompatible_weights: return "incompatible_weights";
    case Errc::invalid_arity: return "invalid_arity";
    case Errc::composability: return "composability";
    case Errc::index_range: return "index_range";
    case Errc::malformed_partition: return "malformed_partition";
    case Errc::undefined_gap: return "undefined_gap";
    case Errc::invalid_cutoff: return "invalid_cutoff";
    case Errc::not_positive_definite: return "not_positive_definite";
    case Errc::degenerate_crossing: return "degenerate_crossing";
    case Errc::degenerate_window: return "degenerate_window";
    case Errc::outside_chart: return "outside_chart";
    case Errc::invalid_input: return "invalid_input";
    case Errc::usage: return "usage";
  }
  return "unknown";
}

}  // namespace wb
