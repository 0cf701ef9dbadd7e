#pragma once

#include <stdexcept>

namespace cycperm {

// Bad values handed to a constructor or operation.
struct InvalidInput : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// An enumeration request beyond the configured factorial-scan cap.
struct ResourceLimit : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A series operation that would need a transcendental scaling, e.g.
// exponentiating a series whose constant term is nonzero.
struct ConventionViolation : std::domain_error {
    using std::domain_error::domain_error;
};

}  // namespace cycperm
