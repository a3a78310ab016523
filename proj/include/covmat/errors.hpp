#ifndef COVMAT_ERRORS_HPP_
#define COVMAT_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace covmat {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// An element name that does not belong to the universe.
struct UnknownElementError : Error {
    explicit UnknownElementError(const std::string& name)
        : Error("unknown element '" + name + "'") {}
};

/// A covering block with no members.
struct EmptyBlockError : Error {
    explicit EmptyBlockError(std::size_t block_index)
        : Error("block " + std::to_string(block_index + 1) + " is empty") {}
};

/// The union of the blocks does not reach every element.
struct NotACoveringError : Error {
    explicit NotACoveringError(const std::string& uncovered)
        : Error("blocks do not cover element '" + uncovered + "'") {}
};

struct DimensionMismatchError : Error {
    using Error::Error;
};

/// Two values built over different universes were combined.
struct UniverseMismatchError : Error {
    UniverseMismatchError() : Error("operands belong to different universes") {}
};

/// Exhaustive subset enumeration requested on a universe above the cap.
struct UniverseTooLargeError : Error {
    UniverseTooLargeError(std::size_t n, std::size_t limit)
        : Error("exhaustive verification is limited to " + std::to_string(limit) +
                " elements (universe has " + std::to_string(n) + ")") {}
};

/// Malformed covering text; the message names the offending line or element.
struct CoveringParseError : Error {
    CoveringParseError(std::size_t line, const std::string& what_arg)
        : Error("line " + std::to_string(line) + ": " + what_arg), line_number(line) {}
    std::size_t line_number;
};

}  // namespace covmat

#endif  // COVMAT_ERRORS_HPP_
