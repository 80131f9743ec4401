#pragma once

#include <stdexcept>

namespace debruijn {

// Mathematically invalid input: letter out of range, order too small for the
// requested operator, h > j, unknown basis id, ...
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Structurally incompatible operands: order, q, or coordinate-frame mismatch.
class ShapeError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Requested dense object exceeds the configured size budget.
class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Filesystem-level failure during import/export.
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace debruijn
