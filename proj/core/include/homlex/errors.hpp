#ifndef HOMLEX_ERRORS_HPP
#define HOMLEX_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace homlex {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Input text (a code string, a graph JSON document, a range) failed to parse.
struct ParseError : Error {
    using Error::Error;
};

/// The graph cannot be peeled into a dominating/isolated construction sequence.
struct NotThresholdError : Error {
    using Error::Error;
};

/// A counting routine would exceed its configured node-visit budget.
struct InstanceTooLargeError : Error {
    using Error::Error;
};

/// The image code is not one of the closed-form patterns 0^q, 1^p, 0^q1^p.
struct PatternUnsupportedError : Error {
    using Error::Error;
};

/// Parameters lie outside the operation's feasibility window.
struct InfeasibleError : Error {
    using Error::Error;
};

/// A witness set was truncated, so a uniqueness assertion cannot be decided.
struct WitnessOverflowError : Error {
    using Error::Error;
};

} // namespace homlex

#endif
