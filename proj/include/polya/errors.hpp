#pragma once

#include <stdexcept>
#include <string>

namespace polya {

/// Raised when an argument lies outside the domain of an operation.
///
/// `tag()` carries a short machine-readable reason for the cases callers
/// may want to branch on (e.g. "bs-degenerate" for the singular structure
/// function at gamma = 0, eta = 1).
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what, std::string tag = {})
      : std::domain_error(what), tag_(std::move(tag)) {}

  const std::string& tag() const noexcept { return tag_; }

 private:
  std::string tag_;
};

}  // namespace polya
