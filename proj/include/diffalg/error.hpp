#ifndef DIFFALG_ERROR_HPP
#define DIFFALG_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace diffalg {

/// Base class of everything thrown by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Bad argument: ambient mismatch, violated type invariant, arity error.
class ParameterError : public Error {
public:
    using Error::Error;
};

/// Operation undefined on the given value (leading part of 0, leader of a
/// constant, degree of a zero component).
class DomainError : public Error {
public:
    using Error::Error;
};

/// Input text rejected by the expression grammar; carries a byte offset.
class ParseError : public ParameterError {
public:
    ParseError(const std::string& what, std::size_t position)
        : ParameterError(what + " at position " + std::to_string(position)),
          position_(position) {}

    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

/// A configured resource cap (degree bound, candidate bound) was exceeded.
class ResourceError : public Error {
public:
    using Error::Error;
};

/// A certificate check that must hold failed; never a silent pass.
class CertificationError : public Error {
public:
    using Error::Error;
};

}  // namespace diffalg

#endif
