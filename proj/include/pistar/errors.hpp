#pragma once

#include <stdexcept>
#include <string>

namespace pistar {

// Base for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class NotCoprime : public Error {
public:
    using Error::Error;
};

class NotInvertible : public Error {
public:
    using Error::Error;
};

// A bound or function evaluated outside its validity range.
class DomainError : public Error {
public:
    using Error::Error;
};

// A configured resource cap (e.g. the brute-force S limit) was exceeded.
class LimitExceeded : public Error {
public:
    using Error::Error;
};

class CheckpointCorrupt : public Error {
public:
    using Error::Error;
};

class IoError : public Error {
public:
    using Error::Error;
};

}  // namespace pistar
