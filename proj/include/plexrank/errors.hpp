#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace plexrank {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class IoError : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t line_number)
        : Error(what + " (line " + std::to_string(line_number) + ")"),
          line_number_(line_number) {}
    explicit ParseError(const std::string& what) : Error(what), line_number_(0) {}

    std::size_t line_number() const { return line_number_; }

private:
    std::size_t line_number_;
};

class NodeNotInLayer : public Error {
public:
    using Error::Error;
};

class NodeNotInTable : public Error {
public:
    using Error::Error;
};

class EmptyLayer : public Error {
public:
    using Error::Error;
};

class EmptyCommonSet : public Error {
public:
    using Error::Error;
};

class InvalidArity : public Error {
public:
    using Error::Error;
};

class ArityMismatch : public Error {
public:
    using Error::Error;
};

}  // namespace plexrank
