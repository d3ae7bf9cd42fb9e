#ifndef LDPC_ERRORS_HPP
#define LDPC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ldpc {

// Base class for every recoverable validation/domain error in the library.
// CLI maps these to exit code 1; anything else is an internal error (2).
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Left and right socket totals differ; no configuration exists.
struct SocketMismatch : Error {
    explicit SocketMismatch(const std::string& msg) : Error(msg) {}
};

// A node degree below 1.
struct ZeroDegree : Error {
    explicit ZeroDegree(const std::string& msg) : Error(msg) {}
};

// sigma == 0: the condition value involves log(0).
struct DegenerateSigma : Error {
    explicit DegenerateSigma(const std::string& msg) : Error(msg) {}
};

// beta outside (0, sigma).
struct BetaOutOfRange : Error {
    explicit BetaOutOfRange(const std::string& msg) : Error(msg) {}
};

// Instance exceeds an exhaustive-search cap.
struct TooLarge : Error {
    explicit TooLarge(const std::string& msg) : Error(msg) {}
};

// Side sizes of a candidate bisection differ by more than one.
struct Unbalanced : Error {
    explicit Unbalanced(const std::string& msg) : Error(msg) {}
};

// Invalid (Y, Z) pair for the factorial product bound.
struct BadRange : Error {
    explicit BadRange(const std::string& msg) : Error(msg) {}
};

// Bisection size parameter outside 0 <= a < sigma*n.
struct ConditionViolated : Error {
    explicit ConditionViolated(const std::string& msg) : Error(msg) {}
};

// Gap-to-capacity ratio outside (0, 1).
struct EtaOutOfRange : Error {
    explicit EtaOutOfRange(const std::string& msg) : Error(msg) {}
};

}  // namespace ldpc

#endif
