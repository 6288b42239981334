#pragma once

#include <stdexcept>
#include <string>

namespace bsp {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  /// Short machine-readable tag, e.g. "NotSpanning".
  virtual const char* kind() const noexcept { return "Error"; }
};

#define BSP_DEFINE_ERROR(Name)                                   \
  class Name : public Error {                                    \
   public:                                                       \
    using Error::Error;                                          \
    const char* kind() const noexcept override { return #Name; } \
  }

BSP_DEFINE_ERROR(ParseError);
BSP_DEFINE_ERROR(DimensionMismatch);
BSP_DEFINE_ERROR(SingularBasis);
BSP_DEFINE_ERROR(NotSpanning);
BSP_DEFINE_ERROR(BadParameter);
BSP_DEFINE_ERROR(NotTwoLevel);
BSP_DEFINE_ERROR(NotFullDimensional);
BSP_DEFINE_ERROR(NormalizationFailed);
BSP_DEFINE_ERROR(CounterexampleFound);
BSP_DEFINE_ERROR(CheckpointCorrupt);
BSP_DEFINE_ERROR(MalformedSlack);
BSP_DEFINE_ERROR(ArithmeticOverflow);

#undef BSP_DEFINE_ERROR

}  // namespace bsp
