#pragma once

#include <stdexcept>
#include <string>

namespace cdo {

// Precondition violations on public operations (bad partitions, wrong
// flavor, l(λ0,μ0) out of range, ...).  CLI maps these to exit code 1.
struct domain_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A structural assertion failed (truncation instability, Lemma-shape
// violation).  Always a bug, never a user error.  CLI exit code 3.
struct internal_error : std::logic_error {
    using std::logic_error::logic_error;
};

// A supplied dimension table lacks a requested weight.  Never silently 0.
struct missing_dimension_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline void check(bool cond, const std::string& msg) {
    if (!cond) throw internal_error(msg);
}

inline void require(bool cond, const std::string& msg) {
    if (!cond) throw domain_error(msg);
}

}  // namespace cdo
