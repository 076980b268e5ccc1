#ifndef NCG_ERRORS_HPP
#define NCG_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ncg {

// Base class for every error the library throws on purpose.
struct NcgError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Raised when values bound to different coefficient fields are combined.
struct FieldMismatchError : NcgError {
    using NcgError::NcgError;
};

// Raised on division by an exactly-zero scalar.
struct DivisionByZeroError : NcgError {
    using NcgError::NcgError;
};

// Raised when a parameter assignment sends a denominator to zero.
struct SpecializationSingularError : NcgError {
    using NcgError::NcgError;
};

// Raised when a relation fails a required homogeneity check.
struct HomogeneityError : NcgError {
    using NcgError::NcgError;
};

// Raised on structurally invalid input (bad weights, bad index, bad option).
struct InvalidInputError : NcgError {
    using NcgError::NcgError;
};

// Raised when an elimination step meets two incompatible values for the
// same unknown; the message names the offending pair.
struct SystemInconsistentError : NcgError {
    using NcgError::NcgError;
};

// Raised when a candidate solution leaves a nonzero residual; the message
// names the first failing equation.
struct VerificationFailedError : NcgError {
    using NcgError::NcgError;
};

// Raised when a casebook replay deviates from its recorded outcome; the
// message names the stage that went off script.
struct ReproductionFailureError : NcgError {
    using NcgError::NcgError;
};

// Raised on a structurally unusable candidate, e.g. a singular linear
// substitution offered as an automorphism.
struct InvalidCandidateError : NcgError {
    using NcgError::NcgError;
};

// Raised by the text reader with a 1-based source position.
struct ParseError : NcgError {
    std::size_t line;
    std::size_t col;
    ParseError(const std::string& msg, std::size_t line_, std::size_t col_)
        : NcgError("parse error at " + std::to_string(line_) + ":" +
                   std::to_string(col_) + ": " + msg),
          line(line_), col(col_) {}
};

} // namespace ncg

#endif
