#pragma once

#include <stdexcept>
#include <string>

namespace pilat {

/// Base for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed partition literal, ordinal, expression or model file.
class ParseError : public Error {
public:
    using Error::Error;
};

/// Operation precondition violated (ground-set mismatch, non-chain input, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

/// A size cap (enumeration, search, census) would be exceeded.
class CapExceeded : public Error {
public:
    CapExceeded(const std::string& what, long requested, long cap)
        : Error(what + ": requested " + std::to_string(requested) + " exceeds cap " +
                std::to_string(cap)),
          requested_(requested), cap_(cap) {}

    long requested() const noexcept { return requested_; }
    long cap() const noexcept { return cap_; }

private:
    long requested_;
    long cap_;
};

/// Result does not fit in 64 bits.
class OverflowError : public Error {
public:
    using Error::Error;
};

}  // namespace pilat
