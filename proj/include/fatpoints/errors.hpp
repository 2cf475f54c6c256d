#pragma once

#include <stdexcept>

namespace fatpoints {

// Violation of an internal invariant. Always indicates a bug in the engine,
// never bad user input; the CLI maps it to exit code 2.
struct internal_error : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace fatpoints
