#pragma once

#include <stdexcept>
#include <string>

namespace cpeval {

// Malformed input data: manifests, fixtures, unknown ids, violated invariants.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Broken installation or configuration (missing toolchain, bad config file).
// Distinct from guest verdicts such as COMPILE_ERROR.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Infrastructure failure inside the harness itself. Never recorded as a
// guest verdict; callers retry per policy before surfacing it.
class HarnessError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace cpeval
