#pragma once

#include <stdexcept>
#include <string>

namespace catalan {

// Bad input: a documented precondition does not hold. Maps to a usage error
// at the CLI boundary.
class rejected_input : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A claim that should hold unconditionally failed to verify. Seeing one of
// these means either a bug or a falsified lemma, so it is never swallowed.
class verification_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Approximate evaluation could not separate two values at the maximum
// working precision. Reported instead of guessing.
class precision_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline void require(bool cond, const std::string& what) {
    if (!cond) throw rejected_input(what);
}

inline void verify(bool cond, const std::string& what) {
    if (!cond) throw verification_error(what);
}

} // namespace catalan
