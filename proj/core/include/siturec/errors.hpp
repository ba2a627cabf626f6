#pragma once

#include <stdexcept>

namespace siturec {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input document: taxonomy file, case-base file, config,
/// mapping table, scenario line.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Structurally valid input that violates a domain invariant.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Concept id not present in the taxonomy it was looked up in.
class UnknownConceptError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

}  // namespace siturec
