// Copyright 2026 The cvbell Authors
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

#pragma once

#include <stdexcept>
#include <string>

namespace cvbell {

/// Failure categories. The numeric values double as CLI exit codes where
/// one is defined (config = 2, domain = 3, convergence = 4).
enum class ErrorKind : int {
    InvalidArgument = 1,
    Config = 2,
    Domain = 3,
    NotConverged = 4,
    Io = 5,
};

class Error : public std::runtime_error {
   public:
    Error(ErrorKind kind, const std::string &what) : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const noexcept { return kind_; }

   private:
    ErrorKind kind_;
};

/// A parameter outside the validity range of an operation.
struct InvalidArgument : Error {
    explicit InvalidArgument(const std::string &what) : Error(ErrorKind::InvalidArgument, what) {}
};

/// Bad or unknown keys/values in a scenario configuration.
struct ConfigError : Error {
    explicit ConfigError(const std::string &what) : Error(ErrorKind::Config, what) {}
};

/// Physically meaningless request, e.g. conditioning on an event that
/// never happens.
struct DomainError : Error {
    explicit DomainError(const std::string &what) : Error(ErrorKind::Domain, what) {}
};

/// Conditioning on a detector click whose probability is (numerically) zero.
struct ZeroProbabilityError : DomainError {
    explicit ZeroProbabilityError(const std::string &what) : DomainError(what) {}
};

/// Truncated Fock space too small for the requested state or displacement.
struct CutoffError : DomainError {
    explicit CutoffError(const std::string &what) : DomainError(what) {}
};

struct ConvergenceError : Error {
    ConvergenceError(const std::string &what, double achieved)
        : Error(ErrorKind::NotConverged, what), achieved_error(achieved) {}
    double achieved_error;
};

struct IoError : Error {
    explicit IoError(const std::string &what) : Error(ErrorKind::Io, what) {}
};

}  // namespace cvbell
