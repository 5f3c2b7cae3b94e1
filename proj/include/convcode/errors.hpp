#pragma once

#include <stdexcept>
#include <string>

namespace convcode {

// Base class of everything this library throws on purpose.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Input text could not be parsed.  Positions are 1-based; 0 means unknown.
struct ParseError : Error {
    ParseError(const std::string& message, int line = 0, int column = 0);

    int line;
    int column;
};

// An operation was invoked outside its contract: rank-deficient input,
// mismatched shapes or fields, non-nilpotent dynamics, and the like.
struct PreconditionError : Error {
    using Error::Error;
};

// A search or enumeration would exceed its configured size cap.
struct CapExceededError : PreconditionError {
    using PreconditionError::PreconditionError;
};

// A decision procedure refuses to answer because the hypothesis of the
// theorem backing it does not hold for the given input.  This is distinct
// from a negative verdict.
struct HypothesisError : PreconditionError {
    using PreconditionError::PreconditionError;
};

}  // namespace convcode
