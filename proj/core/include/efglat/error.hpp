#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace efglat {

enum class Errc {
  // order_core
  DuplicateLabel,
  UnknownLabel,
  InvalidLabel,
  SelfCover,
  CycleDetected,
  IndexOutOfRange,
  TooLarge,
  NotAFilter,
  // lattice_core
  NotALattice,
  EmptyPoset,
  // efg_engine
  Disconnected,
  BadSink,
  SelfLoop,
  DuplicateEdge,
  ArityMismatch,
  NotFireable,
  ShotSetConflict,
  // birkhoff_bridge
  NotDistributive,
  NotBijective,
  OrderMismatch,
  FireableMismatch,
  PropViolation,
  // documents
  SyntaxError,
  OrientationMismatch,
};

std::string_view to_string(Errc code) noexcept;

// Every failure raised by the library is an Error carrying one of the codes
// above; the message names the offending witness where there is one.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message),
        code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace efglat
