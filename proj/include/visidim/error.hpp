#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace visidim {

enum class ErrorKind {
  Parse,
  Validation,
  OpenSetViolation,
  EmptySystem,
  NonContractive,
  GroupCapExceeded,
  DepthCapExceeded,
  OrbitMismatch,
  UnclassifiedProjection,
  PlaneIntersectsSet,
  InsufficientSamples,
  ScaleOrder,
  EmptyGraph,
  IrrationalInput,
  UnknownScenario,
  Io,
  ResourceLimit,
};

std::string_view to_string(ErrorKind kind);

/// Every failure surfaced by the library. The kind drives CLI exit codes.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace visidim
