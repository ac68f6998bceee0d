#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace dqgraph {

enum class Errc {
  not_appreciable,
  not_unit,
  not_pure,
  shape_mismatch,
  loop_arc,
  duplicate_arc,
  vertex_out_of_range,
  non_unit_weight,
  non_appreciable_weight,
  weight_type_mismatch,
  invalid_walk,
  not_connected,
  not_unit_weight_type,
  non_invertible_theta,
  arc_not_found,
  parse_error,
  invalid_argument,
};

std::string_view to_string(Errc code) noexcept;

/// Single exception type for the library; `code()` tells callers which
/// precondition failed.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace dqgraph
