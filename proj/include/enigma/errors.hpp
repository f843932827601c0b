// Copyright 2026 The Enigma Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace enigma {

/// Base class for every error raised by the library. `code()` is a stable
/// snake_case identifier used in the CLI's machine-readable error output.
class Error : public std::runtime_error {
 public:
    Error(std::string code, const std::string& what)
            : std::runtime_error(what), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

 private:
    std::string code_;
};

// Sizes of configurations, keys and models disagree.
class DimensionError : public Error {
 public:
    explicit DimensionError(const std::string& what) : Error("dimension_error", what) {}
};

// An argument lies outside its mathematical domain.
class DomainError : public Error {
 public:
    explicit DomainError(const std::string& what) : Error("domain_error", what) {}
};

// Requested problem exceeds a hard size cap.
class ResourceError : public Error {
 public:
    explicit ResourceError(const std::string& what) : Error("resource_error", what) {}
};

class PlacementError : public Error {
 public:
    explicit PlacementError(const std::string& what) : Error("placement_error", what) {}
};

class InvalidKeyError : public Error {
 public:
    explicit InvalidKeyError(const std::string& what) : Error("invalid_key", what) {}
};

class UndefinedMetricError : public Error {
 public:
    explicit UndefinedMetricError(const std::string& what) : Error("undefined_metric", what) {}
};

class InvalidWheelError : public Error {
 public:
    explicit InvalidWheelError(const std::string& what) : Error("invalid_wheel", what) {}
};

// Malformed or inconsistent JSON input.
class SchemaError : public Error {
 public:
    explicit SchemaError(const std::string& what) : Error("schema_error", what) {}
};

// A construction that should be infallible failed. Indicates a bug.
class InternalError : public Error {
 public:
    explicit InternalError(const std::string& what) : Error("internal_error", what) {}
};

}  // namespace enigma
