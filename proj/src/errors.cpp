#include "indec/errors.hpp"

namespace indec {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::IllegalParameter: return "IllegalParameter";
    case ErrorKind::NotTotallyReal: return "NotTotallyReal";
    case ErrorKind::Reducible: return "Reducible";
    case ErrorKind::FieldMismatch: return "FieldMismatch";
    case ErrorKind::ZeroElement: return "ZeroElement";
    case ErrorKind::NotGalois: return "NotGalois";
    case ErrorKind::NonIntegralTrace: return "NonIntegralTrace";
    case ErrorKind::UnsupportedFamily: return "UnsupportedFamily";
    case ErrorKind::OutOfTriangle: return "OutOfTriangle";
    case ErrorKind::OutOfDomain: return "OutOfDomain";
    case ErrorKind::DegenerateSpan: return "DegenerateSpan";
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::UnboundedRegion: return "UnboundedRegion";
    case ErrorKind::NotSquarefree: return "NotSquarefree";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::CertificateFailure: return "CertificateFailure";
    case ErrorKind::BoundTooLarge: return "BoundTooLarge";
    case ErrorKind::GuardExceeded: return "GuardExceeded";
    case ErrorKind::IllegalRank: return "IllegalRank";
    case ErrorKind::DescentStuck: return "DescentStuck";
    case ErrorKind::Internal: return "Internal";
  }
  return "Unknown";
}

}  // namespace indec
