#pragma once

#include <stdexcept>
#include <string>

namespace lightsout {

// Operand shapes disagree (vector lengths, matrix/vector sizes, non-square input).
class DimensionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A structural invariant of an input value is violated (bad index, bad spec).
class ValidationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// The caller broke an operation's stated hypothesis, e.g. passing an
// asymmetric matrix where symmetry is required.
class PreconditionError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// Input exceeds a hard enumeration limit.
class SizeLimitError : public std::length_error {
public:
    using std::length_error::length_error;
};

// A guaranteed mathematical outcome did not happen. Always an implementation bug.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace lightsout
