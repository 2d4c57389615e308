#pragma once

#include <stdexcept>
#include <string>

namespace ffq {

// The requested computation needs numbers outside the transitively ordered
// range of the field in use. The message names the k that would be required.
class RangeOverflow : public std::runtime_error {
  public:
    explicit RangeOverflow(const std::string& what, std::string needed_k = "")
        : std::runtime_error(what), needed_k_(std::move(needed_k)) {}
    const std::string& needed_k() const { return needed_k_; }

  private:
    std::string needed_k_;
};

// Input is valid but beyond the supported computation range (e.g. prime
// counting past the sieve limit).
class CapacityError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Measurement was attempted on the zero vector.
class NonPhysicalState : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

} // namespace ffq
