// Copyright 2026 The qrws Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace qrws {

/// Broad failure class; the command-line tool maps each one to an exit code.
enum class ErrorKind {
    Validation,       // exit 1
    Numerical,        // exit 2
    MissingArtifact,  // exit 3
};

class Error : public std::runtime_error {
  public:
    Error(ErrorKind kind, const std::string &what) : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const noexcept { return kind_; }

  private:
    ErrorKind kind_;
};

struct InvalidDimension : Error {
    explicit InvalidDimension(const std::string &what) : Error(ErrorKind::Validation, what) {}
};

struct ConfigError : Error {
    explicit ConfigError(const std::string &what) : Error(ErrorKind::Validation, what) {}
};

struct DomainError : Error {
    explicit DomainError(const std::string &what) : Error(ErrorKind::Validation, what) {}
};

/// Malformed or mismatched CSV/JSON artifact.
struct SchemaError : Error {
    explicit SchemaError(const std::string &what) : Error(ErrorKind::Validation, what) {}
};

struct InvariantError : Error {
    explicit InvariantError(const std::string &what) : Error(ErrorKind::Numerical, what) {}
};

struct FitFailure : Error {
    explicit FitFailure(const std::string &what) : Error(ErrorKind::Numerical, what) {}
};

struct ExtrapolationError : Error {
    explicit ExtrapolationError(const std::string &what) : Error(ErrorKind::Numerical, what) {}
};

struct DegenerateNormalization : Error {
    explicit DegenerateNormalization(const std::string &what) : Error(ErrorKind::Numerical, what) {}
};

struct InsufficientResolution : Error {
    explicit InsufficientResolution(const std::string &what) : Error(ErrorKind::Numerical, what) {}
};

struct MissingArtifact : Error {
    explicit MissingArtifact(const std::string &what) : Error(ErrorKind::MissingArtifact, what) {}
};

}  // namespace qrws
