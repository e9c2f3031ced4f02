// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 the parqa authors
#ifndef PARQA_ERRORS_HPP
#define PARQA_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace parqa {

// Base class for everything thrown on purpose. The CLI maps subclasses to
// process exit codes; see tools/parqa.cpp.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Bad arguments, out-of-domain values, malformed configuration.
class ParameterError : public Error {
  public:
    using Error::Error;
};

// A file that exists but does not parse or fails schema checks. The message
// carries the path and the offending field.
class ParseError : public ParameterError {
  public:
    using ParameterError::ParameterError;
};

// The request does not fit: clique too large for the target graph, brute
// force over too many variables, more parts than embeddings.
class CapacityError : public Error {
  public:
    using Error::Error;
};

// A structural invariant does not hold (graphs, embeddings, sample sets).
class ValidationError : public Error {
  public:
    using Error::Error;
};

// Time-to-solution is undefined for the given success probability.
class UndefinedTtsError : public Error {
  public:
    using Error::Error;
};

}  // namespace parqa

#endif
