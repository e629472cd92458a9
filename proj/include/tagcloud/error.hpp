#pragma once

#include <stdexcept>
#include <string>

namespace tagcloud {

/// Caller supplied data that violates a precondition. The CLI maps this to exit code 1.
class InvalidInput : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A multi-tag line whose tags and spaces exceed the target width.
class InfeasibleLine : public InvalidInput {
public:
    using InvalidInput::InvalidInput;
};

/// Broken internal invariant (a bug, not bad input). The CLI maps this to exit code 2.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace tagcloud
