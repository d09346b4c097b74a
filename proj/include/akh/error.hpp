#pragma once

#include <stdexcept>
#include <string>

namespace akh {

class ParseError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class CapacityError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// An internal law was violated. `witness` names the offending object
// (a generator index, a crossing, ...) when one is available.
class InvariantError : public std::runtime_error {
public:
  InvariantError(const std::string& what, std::string witness = {})
      : std::runtime_error(witness.empty() ? what : what + " [witness: " + witness + "]"),
        witness_(std::move(witness)) {}
  const std::string& witness() const noexcept { return witness_; }

private:
  std::string witness_;
};

// Valid input that the requested operation does not accept.
class DomainError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

inline constexpr int kDefaultCap = 24;
inline constexpr int kHardCap = 26;

}  // namespace akh
