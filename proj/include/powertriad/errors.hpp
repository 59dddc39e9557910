#pragma once

#include <stdexcept>
#include <string>

namespace powertriad {

/// Malformed or inconsistent input data (bad CSV, non-uniform time grid,
/// non-finite samples, mismatched lengths read from files).
class DataError : public std::runtime_error {
public:
  explicit DataError(const std::string& what) : std::runtime_error(what) {}
};

/// Input is well-formed but numerically invalid for the requested operation
/// (Nyquist violation, carrier out of range, impulse-response grid too coarse).
class NumericValidityError : public std::runtime_error {
public:
  explicit NumericValidityError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace powertriad
