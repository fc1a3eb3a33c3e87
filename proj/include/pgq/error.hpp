#pragma once

#include <stdexcept>
#include <string>

namespace pgq {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

#define PGQ_DEFINE_ERROR(Name)   \
  struct Name : Error {          \
    using Error::Error;          \
  }

PGQ_DEFINE_ERROR(UnsupportedOrder);
PGQ_DEFINE_ERROR(DimensionTooSmall);
PGQ_DEFINE_ERROR(UnsupportedDimension);
PGQ_DEFINE_ERROR(TooLarge);
PGQ_DEFINE_ERROR(EqualPoints);
PGQ_DEFINE_ERROR(EqualLines);
PGQ_DEFINE_ERROR(RepeatedPoints);
PGQ_DEFINE_ERROR(NotAPlane);
PGQ_DEFINE_ERROR(PointNotInPlane);
PGQ_DEFINE_ERROR(InvalidStructure);
PGQ_DEFINE_ERROR(BudgetExceeded);
PGQ_DEFINE_ERROR(IncompatibleSpaces);
PGQ_DEFINE_ERROR(NotLineConsistent);
PGQ_DEFINE_ERROR(PreconditionViolated);
PGQ_DEFINE_ERROR(NotInStar);
PGQ_DEFINE_ERROR(BadConfiguration);

#undef PGQ_DEFINE_ERROR

/// Malformed GRASSMAP or GRAPH text. `line()` is 1-based.
class ParseError : public Error {
 public:
  ParseError(int line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

}  // namespace pgq
