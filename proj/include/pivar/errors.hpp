#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pivar {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class UnmappedVariable : public Error {
public:
    explicit UnmappedVariable(int var)
        : Error("substitution does not map variable " + std::to_string(var)), variable(var) {}
    int variable;
};

class NotMultihomogeneous : public Error {
public:
    NotMultihomogeneous() : Error("polynomial is not multihomogeneous") {}
};

class WeightMismatch : public Error {
public:
    WeightMismatch(int shape_weight, int content_weight)
        : Error("shape has weight " + std::to_string(shape_weight) + " but content has weight " +
                std::to_string(content_weight)) {}
};

class DegreeCapExceeded : public Error {
public:
    using Error::Error;
};

// A negative multiplicity means the span or Kostka layer is inconsistent.
class NegativeMultiplicity : public Error {
public:
    using Error::Error;
};

class UnknownName : public Error {
public:
    explicit UnknownName(const std::string& name) : Error("unknown name: " + name) {}
};

class UnassignedVariable : public Error {
public:
    explicit UnassignedVariable(int var)
        : Error("assignment does not cover variable " + std::to_string(var)), variable(var) {}
    int variable;
};

class AssociativityError : public Error {
public:
    using Error::Error;
};

class SyntaxError : public Error {
public:
    SyntaxError(const std::string& what, std::size_t line, std::size_t column)
        : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + what),
          line(line), column(column) {}
    std::size_t line;
    std::size_t column;
};

class ArityError : public SyntaxError {
public:
    using SyntaxError::SyntaxError;
};

} // namespace pivar
