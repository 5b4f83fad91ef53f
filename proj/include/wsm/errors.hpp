#ifndef WSM_ERRORS_HPP
#define WSM_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace wsm {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Pattern and text were built over different alphabets.
class AlphabetMismatchError : public Error {
public:
    using Error::Error;
};

class PatternLongerThanTextError : public Error {
public:
    using Error::Error;
};

// Every position of the string is black: no black-free run exists.
class NoCleanRunError : public Error {
public:
    using Error::Error;
};

// heavy_projection was asked to project a range containing a black position.
class BlackInRangeError : public Error {
public:
    using Error::Error;
};

// partition_fragments cannot produce non-empty fragments (ell >= m).
class FragmentTooShortError : public Error {
public:
    using Error::Error;
};

enum class ParseErrorKind {
    EmptyFile,
    MalformedHeader,
    MalformedToken,
    UnknownLetter,
    DuplicateLetter,
    SumOutOfTolerance,
};

// Diagnostic for sequence-file parsing; line and column are 1-based.
class ParseError : public Error {
public:
    ParseError(ParseErrorKind kind, std::size_t line, std::size_t column,
               const std::string& message)
        : Error(message + " (line " + std::to_string(line) + ", column " +
                std::to_string(column) + ")"),
          kind_(kind), line_(line), column_(column) {}

    ParseErrorKind kind() const { return kind_; }
    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    ParseErrorKind kind_;
    std::size_t line_;
    std::size_t column_;
};

} // namespace wsm

#endif
