#ifndef CANFORM_ERRORS_HPP
#define CANFORM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace canform {

// Base class of everything the library throws on purpose.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A precondition on an argument was violated (wrong content, bad rank, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

// A linear denominator factor vanished identically (substitution) or at a point (eval).
class PoleError : public Error {
public:
    using Error::Error;
};

class DivisionByZero : public Error {
public:
    using Error::Error;
};

// The canonical normal form and the randomized evaluation disagree.
class NormalizationError : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(const std::string &what, std::size_t offset)
        : Error(what + " at offset " + std::to_string(offset)), message_(what), offset_(offset)
    {
    }
    std::size_t offset() const { return offset_; }
    // The message without the offset.
    const std::string &message() const { return message_; }

private:
    std::string message_;
    std::size_t offset_;
};

} // namespace canform

#endif
