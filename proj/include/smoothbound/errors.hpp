#ifndef SMOOTHBOUND_ERRORS_HPP
#define SMOOTHBOUND_ERRORS_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace smoothbound {

// Input outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Query beyond what a finite table (sieve limit, solver mesh) can answer.
class RangeError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// A configured work or memory cap was hit. Carries the partial result when
// one is meaningful (e.g. lattice points visited before the cap).
class ResourceError : public std::runtime_error {
 public:
  explicit ResourceError(const std::string& what,
                         std::optional<std::uint64_t> partial = std::nullopt)
      : std::runtime_error(what), partial_(partial) {}

  std::optional<std::uint64_t> partial() const { return partial_; }

 private:
  std::optional<std::uint64_t> partial_;
};

}  // namespace smoothbound

#endif  // SMOOTHBOUND_ERRORS_HPP
