#pragma once

#include <stdexcept>
#include <string>

namespace ogglab {

/// Base class for every error the library raises on purpose.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class NonSquareError : public Error {
public:
    NonSquareError() : Error("matrix is not square") {}
};

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

/// Ideal-class enumeration ran out of search budget before the mass closed.
class BudgetExceeded : public Error {
public:
    using Error::Error;
};

/// Hecke matrices handed to the algebra builder do not commute.
class NonCommuting : public Error {
public:
    using Error::Error;
};

/// Ogg's kernel prediction only exists for p in {2, 3, 5, 7, 13}.
class NotApplicable : public Error {
public:
    using Error::Error;
};

class BadReduction : public Error {
public:
    using Error::Error;
};

class GeneratorCountMismatch : public Error {
public:
    using Error::Error;
};

class InvalidInput : public Error {
public:
    using Error::Error;
};

}  // namespace ogglab
