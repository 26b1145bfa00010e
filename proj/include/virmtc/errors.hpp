#pragma once

#include <stdexcept>
#include <string>

namespace virmtc {

// Bad user input: non-coprime pair, unknown label, unsupported p.  CLI exit 2.
struct ValidationError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A mathematical invariant failed at runtime.  CLI exit 3.
struct InvariantError : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace virmtc
