#include "seifert/error.hpp"

namespace seifert {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidParameters: return "invalid-parameters";
    case ErrorCode::Overflow: return "overflow";
    case ErrorCode::InternalIntegrality: return "internal-integrality-failure";
    case ErrorCode::NonTransverse: return "non-transverse-intersection";
    case ErrorCode::TriplePoint: return "triple-point";
    case ErrorCode::IntersectionAtVertex: return "intersection-at-vertex";
    case ErrorCode::InvalidCycle: return "invalid-cycle";
    case ErrorCode::OffsetTooLarge: return "offset-too-large";
    case ErrorCode::DuplicateHeights: return "duplicate-heights";
    case ErrorCode::CrossingCountMismatch: return "crossing-count-mismatch";
    case ErrorCode::SlotAlreadyPaired: return "slot-already-paired";
    case ErrorCode::SelfSlot: return "self-slot";
    case ErrorCode::InvalidFace: return "invalid-face";
    case ErrorCode::GenusOfNonorientable: return "genus-of-nonorientable";
    case ErrorCode::PlacementFailure: return "placement-failure";
    case ErrorCode::UncappableComponents: return "uncappable-components";
    case ErrorCode::AssemblyInvariant: return "assembly-invariant-violation";
    case ErrorCode::InapplicableClass: return "inapplicable-class";
    case ErrorCode::GenerationFailure: return "generation-failure";
    case ErrorCode::ResourceLimit: return "resource-limit";
    case ErrorCode::Parse: return "parse-error";
    case ErrorCode::Io: return "io-error";
  }
  return "unknown";
}

const char* to_string(Stage stage) {
  switch (stage) {
    case Stage::Algebra: return "algebra";
    case Stage::Geometry: return "geometry";
    case Stage::Validation: return "validation";
    case Stage::Placement: return "placement";
    case Stage::Assembly: return "assembly";
    case Stage::Capping: return "capping";
    case Stage::Verify: return "verify";
    case Stage::Parse: return "parse";
    case Stage::Io: return "io";
  }
  return "unknown";
}

}  // namespace seifert
