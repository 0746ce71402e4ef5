#pragma once

#include <stdexcept>
#include <string>

namespace dendrite {

// Bad caller input: malformed JSON, out-of-range vertices, violated preconditions.
struct input_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A structural check the construction relies on failed. The message carries a
// concrete witness; nothing is silently repaired.
struct model_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace dendrite
