// Copyright 2026 The imix authors
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

#pragma once

#include <cstdio>
#include <stdexcept>
#include <string>

namespace imix {

// Base class for all domain errors. Messages name the violated invariant
// and, where meaningful, its magnitude.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotSquare : public Error {
 public:
  using Error::Error;
};

class NotHermitian : public Error {
 public:
  using Error::Error;
};

class TraceNotOne : public Error {
 public:
  using Error::Error;
};

class NotPsd : public Error {
 public:
  using Error::Error;
};

class BlochNormExceeded : public Error {
 public:
  using Error::Error;
};

class WrongDimension : public Error {
 public:
  using Error::Error;
};

class InvalidMixedness : public Error {
 public:
  using Error::Error;
};

class BelowThreshold : public Error {
 public:
  using Error::Error;
};

class InvalidP : public Error {
 public:
  using Error::Error;
};

class InvalidMask : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class IncompleteKraus : public Error {
 public:
  using Error::Error;
};

class UnknownKind : public Error {
 public:
  using Error::Error;
};

class GridOutOfRange : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

namespace detail {

inline std::string fmt_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

}  // namespace detail

}  // namespace imix
