// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 slpris authors

#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace slpris {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// Iterative solver hit its iteration cap; carries the best iterate seen.
class ConvergenceFailure : public Error {
 public:
  ConvergenceFailure(const std::string& msg, std::vector<double> best)
      : Error(msg), best_iterate(std::move(best)) {}
  std::vector<double> best_iterate;
};

// Inequality system has no solution; carries the rows of the certificate.
class InfeasibleSystem : public Error {
 public:
  InfeasibleSystem(const std::string& msg, std::vector<int> rows)
      : Error(msg), violated_rows(std::move(rows)) {}
  std::vector<int> violated_rows;
};

class SingularChannel : public Error {
 public:
  using Error::Error;
};

class UnsupportedConstellation : public Error {
 public:
  using Error::Error;
};

class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

// Configuration error; names the offending field.
class ConfigError : public Error {
 public:
  ConfigError(const std::string& field, const std::string& what)
      : Error(field + ": " + what), field(field) {}
  std::string field;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace slpris
