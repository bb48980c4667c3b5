#pragma once

#include <stdexcept>
#include <string>

namespace seifert {

enum class ErrorCode {
  InvalidParameters,
  Overflow,
  InternalIntegrality,
  NonTransverse,
  TriplePoint,
  IntersectionAtVertex,
  InvalidCycle,
  OffsetTooLarge,
  DuplicateHeights,
  CrossingCountMismatch,
  SlotAlreadyPaired,
  SelfSlot,
  InvalidFace,
  GenusOfNonorientable,
  PlacementFailure,
  UncappableComponents,
  AssemblyInvariant,
  InapplicableClass,
  GenerationFailure,
  ResourceLimit,
  Parse,
  Io,
};

enum class Stage { Algebra, Geometry, Validation, Placement, Assembly, Capping, Verify, Parse, Io };

const char* to_string(ErrorCode code);
const char* to_string(Stage stage);

/// Every failure in the library is reported through this type. The code is
/// stable and machine-readable; `what()` carries the human-readable locus.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string message, Stage stage = Stage::Geometry)
      : std::runtime_error(std::move(message)), code_(code), stage_(stage) {}

  ErrorCode code() const noexcept { return code_; }
  Stage stage() const noexcept { return stage_; }

 private:
  ErrorCode code_;
  Stage stage_;
};

}  // namespace seifert
