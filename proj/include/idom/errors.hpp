#pragma once

#include <stdexcept>
#include <string>

namespace idom {

// Base of everything the library throws on bad input or violated preconditions.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string &what)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

class RangeError : public Error {
public:
    using Error::Error;
};

// A method was called on a graph outside its domain (not acyclic, odd period, ...).
class PreconditionError : public Error {
public:
    using Error::Error;
};

// Brute-force oracles refuse instances above their size cap.
class CapExceeded : public Error {
public:
    using Error::Error;
};

// A generator produced a graph that fails its own structural assertions.
class ConstructionError : public Error {
public:
    using Error::Error;
};

} // namespace idom
