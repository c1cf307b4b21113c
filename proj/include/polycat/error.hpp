#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace polycat {

/// Raised when an input violates a structural contract (shape mismatch,
/// non-total map, unlawful comonoid, ...). `code` is a short machine-readable
/// tag; `location` points at the offending component when one is known.
class ValidationError : public std::runtime_error {
 public:
  ValidationError(std::string code, const std::string& message, std::string location = {})
      : std::runtime_error(message), code_(std::move(code)), location_(std::move(location)) {}

  const std::string& code() const noexcept { return code_; }
  const std::string& location() const noexcept { return location_; }

 private:
  std::string code_;
  std::string location_;
};

/// Raised when an intermediate set would exceed the configured element budget.
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(const std::string& what, std::size_t requested, std::size_t limit)
      : std::runtime_error(what + ": " + std::to_string(requested) +
                           " elements exceeds budget of " + std::to_string(limit)),
        requested_(requested),
        limit_(limit) {}

  std::size_t requested() const noexcept { return requested_; }
  std::size_t limit() const noexcept { return limit_; }

 private:
  std::size_t requested_;
  std::size_t limit_;
};

/// Cap on the size of any set materialized by an enumeration.
struct Budget {
  static constexpr std::size_t kDefault = 100000;
  std::size_t max_elements = kDefault;

  void check(const std::string& what, std::size_t requested) const {
    if (requested > max_elements) throw BudgetExceeded(what, requested, max_elements);
  }
};

/// Saturating arithmetic for size estimates that may overflow.
std::size_t saturating_mul(std::size_t a, std::size_t b);
std::size_t saturating_add(std::size_t a, std::size_t b);
std::size_t saturating_pow(std::size_t base, std::size_t exp);

}  // namespace polycat
