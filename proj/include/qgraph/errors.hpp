// Copyright 2026 The qgraph Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace qgraph {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class SingularMatrix : public Error {
 public:
  using Error::Error;
};

class NotUnitary : public Error {
 public:
  using Error::Error;
};

class NotAdmissible : public Error {
 public:
  using Error::Error;
};

/// The rank of B sits too close to the decision threshold to pick m reliably.
class RankAmbiguous : public Error {
 public:
  using Error::Error;
};

/// The coupling constant of a connected pair {j,k} is undefined at this edge
/// length because the signed modulus of the pair denominator vanishes.
/// Perturbing d resolves it.
class DegenerateDenominator : public Error {
 public:
  DegenerateDenominator(const std::string& what, double d_value)
      : Error(what), d(d_value) {}
  double d;
};

class KappaTooSmall : public Error {
 public:
  using Error::Error;
};

class SingularM : public Error {
 public:
  using Error::Error;
};

class DomainViolation : public Error {
 public:
  using Error::Error;
};

class QuadratureNotConverged : public Error {
 public:
  using Error::Error;
};

class InsufficientPoints : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace qgraph
