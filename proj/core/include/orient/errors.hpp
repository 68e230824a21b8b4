#ifndef ORIENT_ERRORS_HPP
#define ORIENT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace orient {

/// Invalid argument or malformed input file. CLI exit code 3.
class InputError : public std::invalid_argument {
 public:
  explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

/// Instance exceeds a hard cap of an exhaustive routine. CLI exit code 2.
class CapacityError : public std::runtime_error {
 public:
  explicit CapacityError(const std::string& what) : std::runtime_error(what) {}
};

/// Random generation gave up after the configured number of attempts.
class GenerationError : public std::runtime_error {
 public:
  explicit GenerationError(const std::string& what) : std::runtime_error(what) {}
};

/// A greedy or combinatorial construction starved. The message names the
/// first violated condition or starved step.
class ConstructionError : public std::runtime_error {
 public:
  explicit ConstructionError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace orient

#endif
