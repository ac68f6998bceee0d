#include "dqgraph/errors.hpp"

namespace dqgraph {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::not_appreciable: return "NotAppreciable";
    case Errc::not_unit: return "NotUnit";
    case Errc::not_pure: return "NotPure";
    case Errc::shape_mismatch: return "ShapeMismatch";
    case Errc::loop_arc: return "LoopArc";
    case Errc::duplicate_arc: return "DuplicateArc";
    case Errc::vertex_out_of_range: return "VertexOutOfRange";
    case Errc::non_unit_weight: return "NonUnitWeight";
    case Errc::non_appreciable_weight: return "NonAppreciableWeight";
    case Errc::weight_type_mismatch: return "WeightTypeMismatch";
    case Errc::invalid_walk: return "InvalidWalk";
    case Errc::not_connected: return "NotConnected";
    case Errc::not_unit_weight_type: return "NotUnitWeightType";
    case Errc::non_invertible_theta: return "NonInvertibleTheta";
    case Errc::arc_not_found: return "ArcNotFound";
    case Errc::parse_error: return "ParseError";
    case Errc::invalid_argument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace dqgraph
