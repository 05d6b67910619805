#include "rtl/errors.hpp"

namespace rtl {

std::string_view error_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::SelfLoop: return "SelfLoop";
    case ErrorKind::DuplicateEdge: return "DuplicateEdge";
    case ErrorKind::ImproperColouring: return "ImproperColouring";
    case ErrorKind::InvalidVertex: return "InvalidVertex";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::BoundExceeded: return "BoundExceeded";
    case ErrorKind::InvalidParam: return "InvalidParam";
    case ErrorKind::InvalidCycle: return "InvalidCycle";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::InsufficientPoints: return "InsufficientPoints";
    case ErrorKind::OutOfTheoremRange: return "OutOfTheoremRange";
    case ErrorKind::NoPrimitiveElement: return "NoPrimitiveElement";
    case ErrorKind::IoError: return "IoError";
  }
  return "Unknown";
}

}  // namespace rtl
