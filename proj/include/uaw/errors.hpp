#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace uaw {

// Base class for every error raised by the library. Callers that only care
// about "something went wrong inside uaw" catch this.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define UAW_DEFINE_ERROR(Name)                   \
  class Name : public Error {                    \
   public:                                       \
    using Error::Error;                          \
  }

// cyclotomic
UAW_DEFINE_ERROR(DisallowedOrder);
UAW_DEFINE_ERROR(DivisionByZero);
UAW_DEFINE_ERROR(ContextMismatch);
// chebyshev / qracah
UAW_DEFINE_ERROR(ZeroParameter);
UAW_DEFINE_ERROR(TypeDInput);
// ncalgebra
UAW_DEFINE_ERROR(DegreeOverflow);
UAW_DEFINE_ERROR(CompletionFailure);
// repkit
UAW_DEFINE_ERROR(ShapeMismatch);
UAW_DEFINE_ERROR(NotScalar);
UAW_DEFINE_ERROR(VanishingFails);
UAW_DEFINE_ERROR(NoQRacahMatch);
UAW_DEFINE_ERROR(NotIrreducible);
// modulegen
UAW_DEFINE_ERROR(NoSolution);
UAW_DEFINE_ERROR(SolverDegreeExceeded);

#undef UAW_DEFINE_ERROR

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace uaw
