#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace conegauge {

/** Base of every error raised by the library. */
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/** Malformed input: parse failures, dimension mismatches, unresolved references. */
class InputError : public Error {
public:
    using Error::Error;
};

class DimensionMismatch : public InputError {
public:
    using InputError::InputError;
};

class BadIndex : public InputError {
public:
    using InputError::InputError;
};

class NotSimplex : public Error {
public:
    using Error::Error;
};

class PointOutsideAffineHull : public Error {
public:
    using Error::Error;
};

class PointOutsideK : public Error {
public:
    using Error::Error;
};

/** A function that must be strictly positive on K is not. */
class NotPositive : public Error {
public:
    using Error::Error;
};

class CardinalityMismatch : public InputError {
public:
    using InputError::InputError;
};

class NotEndomap : public Error {
public:
    using Error::Error;
};

class WrongMode : public Error {
public:
    using Error::Error;
};

class Singular : public Error {
public:
    using Error::Error;
};

}  // namespace conegauge
