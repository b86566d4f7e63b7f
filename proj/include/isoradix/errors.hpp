// Copyright (c) 2026 the isoradix authors
//
// Licensed under the Apache License, Version 2.0
// (see https://www.apache.org/licenses/LICENSE-2.0).

#pragma once

#include <stdexcept>
#include <string>

namespace isoradix {

// Base of the project's exception family.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad input: unknown label, out-of-range prime, malformed file.  The CLI
// maps these to exit code 1.
class UserError : public Error {
 public:
  using Error::Error;
};

// Broken internal invariant or violated call contract.  Exit code 2.
class InternalError : public Error {
 public:
  using Error::Error;
};

// A scan over an empty prime range; nothing can be concluded from it.
class EmptySampleError : public UserError {
 public:
  explicit EmptySampleError(const std::string& what) : UserError("EmptySample: " + what) {}
};

}  // namespace isoradix
