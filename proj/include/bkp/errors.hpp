#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace bkp {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CycleError : Error { using Error::Error; };
struct RangeError : Error { using Error::Error; };
struct ParamError : Error { using Error::Error; };
struct StrictnessError : Error { using Error::Error; };
struct CapError : Error { using Error::Error; };
struct ShapeError : Error { using Error::Error; };
struct NotStandardError : Error { using Error::Error; };
struct IndexError : Error { using Error::Error; };
struct ComponentError : Error { using Error::Error; };
struct DivisionError : Error { using Error::Error; };
struct UnknownGeneratorError : Error { using Error::Error; };

// Thrown when |L(P)| exceeds the configured cap. `count` is exact when the
// full count was computable, otherwise a lower bound.
struct DegreeCapError : Error {
  DegreeCapError(const std::string& msg, long long count_, bool exact_)
      : Error(msg), count(count_), exact(exact_) {}
  long long count;
  bool exact;
};

}  // namespace bkp
