#pragma once

#include <stdexcept>
#include <string>

namespace wm {

// Base class for all library errors.  Subclasses map to distinct CLI exit
// codes: format/usage problems exit 2, resource limits exit 3.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Input data could not be parsed (bad set file, bad matrix file, ...).
struct format_error : error {
    using error::error;
};

// An index or shift walks past the horizon of a finite set.
struct horizon_error : error {
    using error::error;
};

// A configured combinatorial budget (tuple count, search nodes, columns)
// would be exceeded.
struct budget_error : error {
    using error::error;
};

// A precondition on operation arguments is violated.
struct precondition_error : error {
    using error::error;
};

}  // namespace wm
