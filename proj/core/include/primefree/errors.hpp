#ifndef PRIMEFREE_ERRORS_HPP
#define PRIMEFREE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace primefree {

// Raised when a computation would exceed a configured resource bound
// (digit budget, class count). Carries enough context to name the
// offending input in diagnostics.
class limit_error : public std::runtime_error {
 public:
  explicit limit_error(const std::string& what) : std::runtime_error(what) {}
};

// Raised when certificate JSON cannot be decoded into a Certificate.
// Distinct from an *invalid* certificate: a parse failure means the
// input is not a certificate at all.
class certificate_format_error : public std::runtime_error {
 public:
  explicit certificate_format_error(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace primefree

#endif  // PRIMEFREE_ERRORS_HPP
