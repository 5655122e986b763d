#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace wb {

enum class Errc {
  invalid_domain,
  numeric_failure,
  singular_point,
  incompatible_weights,
  invalid_arity,
  composability,
  index_range,
  malformed_partition,
  undefined_gap,
  invalid_cutoff,
  not_positive_definite,
  degenerate_crossing,
  degenerate_window,
  outside_chart,
  invalid_input,
  usage,
};

std::string_view to_string(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace wb
