#ifndef ADAV_ERRORS_HPP
#define ADAV_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace adav {

// Error taxonomy maps onto CLI exit codes: config 2, format 3, contract 4.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Bad or missing configuration (paths, flags, grids).
struct ConfigError : Error {
  explicit ConfigError(const std::string& msg) : Error(msg) {}
};

// Ill-formed artifact files (bad magic, truncated payload).
struct FormatError : Error {
  explicit FormatError(const std::string& msg) : Error(msg) {}
};

// Violated operation precondition (shape mismatch, short warm-up, ...).
struct ContractError : Error {
  explicit ContractError(const std::string& msg) : Error(msg) {}
};

}  // namespace adav

#endif
