// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 wavecp contributors

#pragma once

#include <stdexcept>
#include <string>

namespace wavecp {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class UnsupportedFilter : public Error {
public:
    using Error::Error;
};

class LengthNotDivisible : public Error {
public:
    using Error::Error;
};

class FilterMismatch : public Error {
public:
    using Error::Error;
};

class InsufficientData : public Error {
public:
    using Error::Error;
};

class ZeroEnergy : public Error {
public:
    using Error::Error;
};

class InvalidScales : public Error {
public:
    using Error::Error;
};

class DegenerateWavelet : public Error {
public:
    using Error::Error;
};

class DegenerateDesign : public Error {
public:
    using Error::Error;
};

class TooShort : public Error {
public:
    using Error::Error;
};

class TargetTooLarge : public Error {
public:
    using Error::Error;
};

class InvalidParams : public Error {
public:
    using Error::Error;
};

class InputNotFound : public Error {
public:
    using Error::Error;
};

/// CSV parse failure; carries the 1-based row number of the offending line.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t row)
        : Error(what + " (row " + std::to_string(row) + ")"), row_(row) {}
    std::size_t row() const { return row_; }

private:
    std::size_t row_;
};

}  // namespace wavecp
