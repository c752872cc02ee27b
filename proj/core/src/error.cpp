#include "efglat/error.hpp"

namespace efglat {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::DuplicateLabel: return "DuplicateLabel";
    case Errc::UnknownLabel: return "UnknownLabel";
    case Errc::InvalidLabel: return "InvalidLabel";
    case Errc::SelfCover: return "SelfCover";
    case Errc::CycleDetected: return "CycleDetected";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::TooLarge: return "TooLarge";
    case Errc::NotAFilter: return "NotAFilter";
    case Errc::NotALattice: return "NotALattice";
    case Errc::EmptyPoset: return "EmptyPoset";
    case Errc::Disconnected: return "Disconnected";
    case Errc::BadSink: return "BadSink";
    case Errc::SelfLoop: return "SelfLoop";
    case Errc::DuplicateEdge: return "DuplicateEdge";
    case Errc::ArityMismatch: return "ArityMismatch";
    case Errc::NotFireable: return "NotFireable";
    case Errc::ShotSetConflict: return "ShotSetConflict";
    case Errc::NotDistributive: return "NotDistributive";
    case Errc::NotBijective: return "NotBijective";
    case Errc::OrderMismatch: return "OrderMismatch";
    case Errc::FireableMismatch: return "FireableMismatch";
    case Errc::PropViolation: return "PropViolation";
    case Errc::SyntaxError: return "SyntaxError";
    case Errc::OrientationMismatch: return "OrientationMismatch";
  }
  return "Unknown";
}

}  // namespace efglat
