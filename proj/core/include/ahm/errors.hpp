// Copyright 2026 The ahmclass Authors
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

#ifndef AHM_ERRORS_HPP
#define AHM_ERRORS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace ahm {

// Arithmetic errors.
class DivisionByZero : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Raised when a computation cannot be completed at the current precision.
// Escalation loops treat it as a retryable failure.
class PrecisionFault : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class PrecisionExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidDiscriminant : public std::invalid_argument {
 public:
  explicit InvalidDiscriminant(std::int64_t delta)
      : std::invalid_argument("InvalidDiscriminant: " + std::to_string(delta) +
                              " is not a negative discriminant (0 or 1 mod 4)"),
        delta_(delta) {}
  std::int64_t delta() const noexcept { return delta_; }

 private:
  std::int64_t delta_;
};

class PoleAtPoint : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class PoleAtHeegnerPoint : public PoleAtPoint {
 public:
  PoleAtHeegnerPoint(std::int64_t a, std::int64_t b, std::int64_t c)
      : PoleAtPoint("PoleAtHeegnerPoint: f has a pole at the Heegner point of (" +
                    std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")"),
        a_(a), b_(b), c_(c) {}
  std::int64_t a() const noexcept { return a_; }
  std::int64_t b() const noexcept { return b_; }
  std::int64_t c() const noexcept { return c_; }

 private:
  std::int64_t a_, b_, c_;
};

class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::invalid_argument("ParseError at offset " + std::to_string(position) + ": " + what),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class DegreeBoundExceeded : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NonconstantRequired : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NotDivisible : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class NotAPerfectPower : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ReconstructionFailed : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DuplicateNodes : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace ahm

#endif  // AHM_ERRORS_HPP
