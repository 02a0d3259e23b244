// Copyright 2026 The clusterqis Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CLUSTERQIS_ERRORS_H
#define CLUSTERQIS_ERRORS_H

#include <cstddef>
#include <stdexcept>
#include <string>

namespace clusterqis {

/// Bad parameters or preconditions: malformed amplitudes, qubit indices out of
/// range, channel coefficients that violate normalization, and so on.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The POVM built from (beta, gamma, rho) has a K3 element that is not
/// positive semidefinite.
class PovmInvalidError : public ConfigError {
 public:
  PovmInvalidError(const std::string& what, double min_eigenvalue)
      : ConfigError(what), min_eigenvalue_(min_eigenvalue) {}

  double min_eigenvalue() const { return min_eigenvalue_; }

 private:
  double min_eigenvalue_;
};

/// Classical channel misuse: out-of-order sequence numbers, stage machine
/// violations, Eve as sender, lost deliveries.
class ProtocolError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A party touched qubits it does not own.
class AccessError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

}  // namespace clusterqis

#endif  // CLUSTERQIS_ERRORS_H
