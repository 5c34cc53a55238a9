#include "noncent/error.hpp"

namespace noncent {

const char* to_string(Errc code) noexcept {
  switch (code) {
    case Errc::NotAGroup: return "NotAGroup";
    case Errc::ClosureExceeded: return "ClosureExceeded";
    case Errc::NotNormal: return "NotNormal";
    case Errc::TooLarge: return "TooLarge";
    case Errc::TrivialGroup: return "TrivialGroup";
    case Errc::ParseError: return "ParseError";
    case Errc::UndeclaredGenerator: return "UndeclaredGenerator";
    case Errc::CosetLimitExceeded: return "CosetLimitExceeded";
    case Errc::AbelianGroup: return "AbelianGroup";
    case Errc::NotMaximal: return "NotMaximal";
    case Errc::NotASubgroup: return "NotASubgroup";
    case Errc::NotRegular2Group: return "NotRegular2Group";
    case Errc::UnknownFormat: return "UnknownFormat";
    case Errc::FormatError: return "FormatError";
    case Errc::DuplicateLabel: return "DuplicateLabel";
    case Errc::OrderMismatch: return "OrderMismatch";
    case Errc::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace noncent
