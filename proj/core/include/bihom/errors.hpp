#pragma once

#include <stdexcept>
#include <string>

namespace bihom {

/// Base class of everything this library throws.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Malformed input: bad files, bad JSON, bad parameters. CLI maps these to exit code 2.
class InputError : public Error {
public:
    using Error::Error;
};

/// Mathematically invalid input: a precondition identity fails. CLI maps these to exit code 1.
class DomainError : public Error {
public:
    using Error::Error;
};

class ParseError : public InputError {
public:
    using InputError::InputError;
};

class DimensionMismatch : public InputError {
public:
    using InputError::InputError;
};

/// alpha*beta != beta*alpha in a parsed file.
class NonCommutingTwistMaps : public InputError {
public:
    using InputError::InputError;
};

class ParameterOutOfDomain : public InputError {
public:
    using InputError::InputError;
};

class SingularMatrix : public DomainError {
public:
    using DomainError::DomainError;
};

/// A twisting pair whose maps do not commute with each other or the algebra's maps.
class NonCommutingTwists : public DomainError {
public:
    using DomainError::DomainError;
};

class NotAMorphism : public DomainError {
public:
    using DomainError::DomainError;
};

class NotAnIdeal : public DomainError {
public:
    using DomainError::DomainError;
};

class NotAssociative : public DomainError {
public:
    using DomainError::DomainError;
};

class NotALieAlgebra : public DomainError {
public:
    using DomainError::DomainError;
};

class NotRegular : public DomainError {
public:
    using DomainError::DomainError;
};

class TwistNotEndomorphism : public DomainError {
public:
    using DomainError::DomainError;
};

class HypothesisViolated : public DomainError {
public:
    using DomainError::DomainError;
};

class ModuleCheckFailed : public DomainError {
public:
    using DomainError::DomainError;
};

} // namespace bihom
