// Copyright 2026 The arrowperm Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace arrowperm {

// Base class for every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DegreeError : public Error {
 public:
  using Error::Error;
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

class IndexError : public Error {
 public:
  using Error::Error;
};

class ResourceLimitError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class InvalidPermutationError : public Error {
 public:
  using Error::Error;
};

// Matrix is not monomial with entries in {0, +1, -1}.
class NotSignedPermutationMatrixError : public Error {
 public:
  NotSignedPermutationMatrixError(const std::string& what, bool is_row, int index)
      : Error(what), is_row_(is_row), index_(index) {}
  bool is_row() const { return is_row_; }
  // 1-based row or column index of the offending line.
  int index() const { return index_; }

 private:
  bool is_row_;
  int index_;
};

class NotInvertibleError : public Error {
 public:
  NotInvertibleError(const std::string& what, double det_magnitude)
      : Error(what), det_magnitude_(det_magnitude) {}
  double det_magnitude() const { return det_magnitude_; }

 private:
  double det_magnitude_;
};

class NotOrthogonalError : public Error {
 public:
  using Error::Error;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

class NoRootFoundError : public Error {
 public:
  NoRootFoundError(const std::string& what, double best_residual)
      : Error(what), best_residual_(best_residual) {}
  double best_residual() const { return best_residual_; }

 private:
  double best_residual_;
};

class InputError : public Error {
 public:
  using Error::Error;
};

class TruncatedTableError : public Error {
 public:
  using Error::Error;
};

class NotASubgroupError : public Error {
 public:
  using Error::Error;
};

// An invariant that should hold by construction was violated.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace arrowperm
