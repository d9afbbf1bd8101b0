// include/tse/errors.h
//
// Copyright 2026  The tse authors
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

#ifndef TSE_ERRORS_H_
#define TSE_ERRORS_H_

#include <stdexcept>
#include <string>

namespace tse {

// Base class for all library errors. Commands map these to exit code 1
// (runtime failure); config/usage problems are raised as ConfigError and
// map to exit code 2.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

#define TSE_DEFINE_ERROR(NAME)                                    \
  class NAME : public Error {                                     \
   public:                                                        \
    explicit NAME(const std::string& msg) : Error(#NAME ": " + msg) {} \
  }

TSE_DEFINE_ERROR(ZeroPowerError);
TSE_DEFINE_ERROR(LengthError);
TSE_DEFINE_ERROR(IoError);
TSE_DEFINE_ERROR(FormatError);
TSE_DEFINE_ERROR(DurationError);
TSE_DEFINE_ERROR(InsufficientUtterancesError);
TSE_DEFINE_ERROR(ZeroReferenceError);
TSE_DEFINE_ERROR(EmptyInputError);
TSE_DEFINE_ERROR(IndexError);
TSE_DEFINE_ERROR(TooShortError);
TSE_DEFINE_ERROR(ShapeError);
TSE_DEFINE_ERROR(EmptyEnrollmentSetError);
TSE_DEFINE_ERROR(SubsetTooLargeError);
TSE_DEFINE_ERROR(LabelOutOfRangeError);
TSE_DEFINE_ERROR(DivergenceError);
TSE_DEFINE_ERROR(DegenerateError);
TSE_DEFINE_ERROR(InsufficientClassesError);

#undef TSE_DEFINE_ERROR

// Configuration / usage errors; the CLI exits with code 2 on these.
class ConfigError : public Error {
 public:
  explicit ConfigError(const std::string& msg) : Error("ConfigError: " + msg) {}
};

}  // namespace tse

#endif  // TSE_ERRORS_H_
