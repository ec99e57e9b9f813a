#ifndef COXSHUFFLE_ENUMERATION_HPP
#define COXSHUFFLE_ENUMERATION_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace coxshuffle {

/// Thrown when an exhaustive enumeration would exceed its size bound.
class EnumerationBoundError : public std::runtime_error {
 public:
  EnumerationBoundError(const std::string& what, std::int64_t required_, std::int64_t bound_)
      : std::runtime_error(what + ": " + std::to_string(required_) + " items required, bound is " +
                           std::to_string(bound_)),
        required(required_),
        bound(bound_) {}
  std::int64_t required;
  std::int64_t bound;
};

}  // namespace coxshuffle

#endif  // COXSHUFFLE_ENUMERATION_HPP
