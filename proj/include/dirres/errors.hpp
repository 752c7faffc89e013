#pragma once

#include <stdexcept>

namespace dirres {

// One exception type per failure condition so that callers (and the CLI exit
// code mapping) can distinguish them without parsing messages.

struct NotConnected : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SingularSystem : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DimensionMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InvalidSize : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct IndexOutOfRange : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct MalformedInput : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NonpositiveWeight : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct EmptyPath : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InvalidParam : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct MissingPrior : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct OutOfValidityRange : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace dirres
