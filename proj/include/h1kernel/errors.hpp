#pragma once

#include <stdexcept>
#include <string>

namespace h1kernel {

// Invalid user input: malformed spec documents, incompatible twists,
// out-of-range ranks. The CLI maps this to exit code 2.
class spec_error : public std::runtime_error {
public:
  explicit spec_error(const std::string& what) : std::runtime_error(what) {}
};

// Two independent computation routes produced different answers.
// Never recoverable; the CLI maps this to exit code 3.
class consistency_error : public std::runtime_error {
public:
  explicit consistency_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace h1kernel
