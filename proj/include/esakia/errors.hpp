#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace esakia {

// Base of every domain error. kind() is the stable type name printed by the CLI.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& what)
      : std::runtime_error(what), kind_(std::move(kind)) {}
  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

#define ESAKIA_DEFINE_ERROR(Name)                                   \
  class Name : public Error {                                       \
   public:                                                          \
    explicit Name(const std::string& what) : Error(#Name, what) {} \
  };

ESAKIA_DEFINE_ERROR(UnknownElement)
ESAKIA_DEFINE_ERROR(InvalidPoset)
ESAKIA_DEFINE_ERROR(NotMonotone)
ESAKIA_DEFINE_ERROR(IncompatibleMaps)
ESAKIA_DEFINE_ERROR(NotAnUpset)
ESAKIA_DEFINE_ERROR(UnboundVariable)
ESAKIA_DEFINE_ERROR(NotGOpen)
ESAKIA_DEFINE_ERROR(MissingElement)
ESAKIA_DEFINE_ERROR(ImageNotInLayer)
ESAKIA_DEFINE_ERROR(NotPMorphism)
ESAKIA_DEFINE_ERROR(NotPrelinear)
ESAKIA_DEFINE_ERROR(NotDiscrete)
ESAKIA_DEFINE_ERROR(StabilizationFailure)
ESAKIA_DEFINE_ERROR(ConsistencyFailure)
ESAKIA_DEFINE_ERROR(InsufficientDepth)
ESAKIA_DEFINE_ERROR(UnknownSubcommand)
ESAKIA_DEFINE_ERROR(InvalidInput)

#undef ESAKIA_DEFINE_ERROR

// Raised whenever an enumeration would exceed a configured cap.
class SizeLimitExceeded : public Error {
 public:
  explicit SizeLimitExceeded(const std::string& what)
      : Error("SizeLimitExceeded", what) {}
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error("ParseError", what + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace esakia
