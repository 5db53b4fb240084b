#ifndef MORPHCLUST_ERRORS_HPP
#define MORPHCLUST_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace morphclust {

// Base of everything thrown by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed or unusable input (files, datasets, arguments). CLI exit code 2.
class DataError : public Error {
public:
    using Error::Error;
};

// The algorithm cannot proceed on otherwise well-formed input. CLI exit code 3.
class AlgorithmError : public Error {
public:
    using Error::Error;
};

class InvalidData : public DataError {
public:
    using DataError::DataError;
};

class ParseError : public DataError {
public:
    ParseError(std::size_t line, const std::string& what)
        : DataError("line " + std::to_string(line) + ": " + what), line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

class ShapeError : public DataError {
public:
    using DataError::DataError;
};

class IoError : public DataError {
public:
    using DataError::DataError;
};

class Unsupported : public DataError {
public:
    using DataError::DataError;
};

class EmptyGrid : public AlgorithmError {
public:
    using AlgorithmError::AlgorithmError;
};

class CellOutOfRange : public AlgorithmError {
public:
    using AlgorithmError::AlgorithmError;
};

class InvalidElement : public AlgorithmError {
public:
    using AlgorithmError::AlgorithmError;
};

class NoComponents : public AlgorithmError {
public:
    using AlgorithmError::AlgorithmError;
};

class InsufficientComponents : public AlgorithmError {
public:
    using AlgorithmError::AlgorithmError;
};

class InsufficientPoints : public AlgorithmError {
public:
    using AlgorithmError::AlgorithmError;
};

} // namespace morphclust

#endif
