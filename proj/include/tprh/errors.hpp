// Copyright 2026 The tprh Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace tprh {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input: non-positive frequency, bad labels, bad truncation.
class ParameterError : public Error {
public:
    using Error::Error;
};

/// Coupling outside the normalizable region |lambda| < 1/2, or |sigma| >= 1.
class DomainError : public Error {
public:
    using Error::Error;
};

class ConvergenceError : public Error {
public:
    using Error::Error;
};

/// Singular or ill-conditioned linear algebra, non-finite input.
class NumericalError : public Error {
public:
    using Error::Error;
};

class VerificationError : public Error {
public:
    using Error::Error;
};

/// Parity expectation could not be rounded to a fourth root of unity.
class LabelingError : public Error {
public:
    using Error::Error;
};

/// Two independent classification rules disagree.
class ConsistencyError : public Error {
public:
    using Error::Error;
};

}  // namespace tprh
