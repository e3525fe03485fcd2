#pragma once

#include <stdexcept>
#include <string>

namespace spiderweb {

// Parameters outside the regime a computation is defined for
// (q on the wrong side of 1/b, depth below scale, non-convergence).
class RegimeError : public std::runtime_error {
public:
    explicit RegimeError(const std::string& what) : std::runtime_error(what) {}
};

// q sits exactly on the critical threshold, where the limit is not defined.
class ThresholdError : public RegimeError {
public:
    explicit ThresholdError(const std::string& what) : RegimeError(what) {}
};

// A brute-force enumeration would exceed its configured cap.
class CapError : public std::runtime_error {
public:
    explicit CapError(const std::string& what) : std::runtime_error(what) {}
};

// Internal consistency violation (e.g. a probability bound outside [0,1]).
// Always on; a tripped check is a bug, not an input error.
#define SPIDERWEB_ASSERT(cond, msg)                                  \
    do {                                                             \
        if (!(cond)) throw std::logic_error(std::string("internal check failed: ") + (msg)); \
    } while (0)

} // namespace spiderweb
