// Copyright 2026 The ecclab Authors
//
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

#ifndef ECCLAB_ERROR_HPP_
#define ECCLAB_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace ecclab {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed arguments or files.
class InputError : public Error {
 public:
  using Error::Error;
};

class CyclicError : public Error {
 public:
  CyclicError() : Error("graph contains a directed cycle") {}
};

class CapacityError : public Error {
 public:
  using Error::Error;
};

// A tree decomposition (or other certificate) failed its invariant check.
class ValidationError : public Error {
 public:
  using Error::Error;
};

}  // namespace ecclab

#endif  // ECCLAB_ERROR_HPP_
