#pragma once

#include <stdexcept>
#include <string>

namespace turan {

/// Thrown when an input exceeds the size this tool is built for.
struct capacity_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Thrown when a checkpoint file cannot be read, written, or does not
/// belong to the run that tries to resume from it.
struct checkpoint_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Thrown when a documented precondition of an operation is violated.
/// `clause` names the specific precondition that failed.
struct precondition_error : std::invalid_argument {
    std::string clause;
    precondition_error(std::string clause_, const std::string& what_)
        : std::invalid_argument(what_), clause(std::move(clause_)) {}
};

/// Thrown when an internal contract that should be guaranteed by
/// construction turns out to be false. Always indicates a defect.
struct internal_invariant_error : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace turan
