#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace indec {

enum class ErrorKind {
  IllegalParameter,
  NotTotallyReal,
  Reducible,
  FieldMismatch,
  ZeroElement,
  NotGalois,
  NonIntegralTrace,
  UnsupportedFamily,
  OutOfTriangle,
  OutOfDomain,
  DegenerateSpan,
  OutOfRange,
  UnboundedRegion,
  NotSquarefree,
  IndexOutOfRange,
  CertificateFailure,
  BoundTooLarge,
  GuardExceeded,
  IllegalRank,
  DescentStuck,
  Internal,
};

std::string_view to_string(ErrorKind kind);

// Every failure raised by the library carries a kind so callers (the CLI in
// particular) can map it to a stable exit code.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

inline void require(bool ok, ErrorKind kind, const std::string& what) {
  if (!ok) fail(kind, what);
}

}  // namespace indec
