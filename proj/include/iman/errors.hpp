#pragma once

#include <stdexcept>
#include <string>

namespace iman {

// Malformed input: unparseable CSV, out-of-range cell values, inconsistent
// row widths. Maps to CLI exit code 2.
class DataError : public std::runtime_error {
 public:
  explicit DataError(const std::string& what) : std::runtime_error(what) {}
};

// The sample is too small for the requested analysis (e.g. every
// conditioning context is below the minimum stratum count). CLI exit code 3.
class InsufficientDataError : public std::runtime_error {
 public:
  explicit InsufficientDataError(const std::string& what)
      : std::runtime_error(what) {}
};

// A closed-form reversibility predicate was asked about a modulus it does
// not cover (theorem: non-prime-power m; lemma: m outside {2,3,4}).
class UnsupportedModulusError : public std::invalid_argument {
 public:
  explicit UnsupportedModulusError(const std::string& what)
      : std::invalid_argument(what) {}
};

}  // namespace iman
