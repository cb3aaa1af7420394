#pragma once

#include <stdexcept>
#include <string>

namespace decwa {

// Base of every error raised by the library. The category decides the CLI
// exit status (configuration -> 1, data and pipeline -> 2).
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Invalid hyperparameter, flag value or mismatched shapes.
class ConfigError : public Error {
public:
  using Error::Error;
};

// Malformed or non-finite input data.
class DataError : public Error {
public:
  using Error::Error;
};

// A stage received a degenerate intermediate result (for example an
// edgeless forest).
class PipelineError : public Error {
public:
  using Error::Error;
};

} // namespace decwa
