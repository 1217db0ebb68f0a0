// SPDX-License-Identifier: Apache-2.0
//
// fr3-ris: RIS-assisted FR3 downlink resource allocation
// ------------------------------------------------------------------------

#pragma once

#include <stdexcept>
#include <string>

namespace fr3
{

// Base class for every error raised by the library. `exit_code()` is the
// process status the CLI maps the error to.
class Error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
    virtual int exit_code() const noexcept { return 1; }
};

class ConfigError : public Error
{
public:
    using Error::Error;
    int exit_code() const noexcept override { return 2; }
};

class NumericError : public Error
{
public:
    using Error::Error;
    int exit_code() const noexcept override { return 3; }
};

// Mismatched vector/matrix shapes.
class DimensionError : public NumericError
{
public:
    using NumericError::NumericError;
};

// Argument outside the mathematical domain of an operation (e.g. d -> 0).
class DomainError : public NumericError
{
public:
    using NumericError::NumericError;
};

// Zero effective channel where a direction is required.
class DegenerateChannelError : public NumericError
{
public:
    using NumericError::NumericError;
};

class IoError : public Error
{
public:
    using Error::Error;
    int exit_code() const noexcept override { return 4; }
};

// Combinatorial enumeration larger than the configured cap.
class SizeError : public Error
{
public:
    using Error::Error;
    int exit_code() const noexcept override { return 5; }
};

} // namespace fr3
