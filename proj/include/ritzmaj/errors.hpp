#pragma once

#include <stdexcept>
#include <string>

namespace ritzmaj {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InvalidInput : Error {
  using Error::Error;
};

struct NumericalFailure : Error {
  using Error::Error;
};

struct RankDeficient : Error {
  using Error::Error;
};

struct NotPSD : Error {
  using Error::Error;
};

struct NotPD : Error {
  using Error::Error;
};

// Zero-padding of unequal-length vectors is only meaningful for nonnegative
// entries; mixing signs would misplace the padded zeros.
struct ConventionViolation : Error {
  using Error::Error;
};

struct IoError : Error {
  using Error::Error;
};

}  // namespace ritzmaj
