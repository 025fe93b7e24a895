// Copyright 2026 The pgrade Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace pgrade {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands live over different orbital bases or particle sectors.
class ShapeError : public Error {
 public:
  using Error::Error;
};

/// An argument is outside the documented domain (p out of range, bad weights, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A dense sector would exceed the configured size ceiling.
class ResourceCeilingError : public Error {
 public:
  using Error::Error;
};

/// A declared orthogonality grade did not survive verification.
class VerificationError : public Error {
 public:
  VerificationError(const std::string& what, int violating_p)
      : Error(what), violating_p_(violating_p) {}

  int violating_p() const noexcept { return violating_p_; }

 private:
  int violating_p_;
};

/// Malformed state or operator file; carries the offending 1-based line.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  int line() const noexcept { return line_; }

 private:
  int line_;
};

}  // namespace pgrade
