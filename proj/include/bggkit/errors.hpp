#pragma once

#include <stdexcept>
#include <string>

namespace bggkit {

/// Bad input data: malformed files, invalid permutations, failed validators.
/// `invariant()` names the violated rule so callers can report it.
class InputError : public std::runtime_error {
 public:
  InputError(std::string invariant, const std::string& what)
      : std::runtime_error(invariant + ": " + what), invariant_(std::move(invariant)) {}
  const std::string& invariant() const { return invariant_; }

 private:
  std::string invariant_;
};

/// A group or table exceeds a configured size cap.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An identity that must hold for consistent data failed to hold.
class InconsistencyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The brute-force oracle disagrees with the closed-form formulas.
class OracleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace bggkit
