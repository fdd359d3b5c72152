/*
   Copyright 2026 The bicanon Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef BICANON_ERRORS_HPP
#define BICANON_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bicanon {

/// Base of every exception thrown by the engine.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class division_by_zero : public error {
public:
    division_by_zero() : error("division by zero") {}
    explicit division_by_zero(const std::string &what) : error(what) {}
};

/// Polynomial division left a nonzero remainder. The remainder is kept in
/// printed form so the exception stays independent of the polynomial types.
class indivisible_error : public error {
public:
    indivisible_error(const std::string &what, std::string remainder)
        : error(what), remainder_(std::move(remainder)) {}
    const std::string &remainder() const noexcept { return remainder_; }

private:
    std::string remainder_;
};

/// An intermediate polynomial exceeded the configured total-degree cap.
class degree_overflow : public error {
public:
    using error::error;
};

class parse_error : public error {
public:
    parse_error(const std::string &msg, std::size_t position)
        : error(msg + " at position " + std::to_string(position)), message_(msg), position_(position) {}
    std::size_t position() const noexcept { return position_; }
    /// The message without the position suffix.
    const std::string &message() const noexcept { return message_; }

private:
    std::string message_;
    std::size_t position_;
};

/// Input is well formed but does not follow the file schema.
class schema_error : public error {
public:
    using error::error;
};

/// A domain object violates one of its invariants.
class invariant_error : public error {
public:
    using error::error;
};

/// A mathematical check that was expected to succeed did not.
class verification_error : public error {
public:
    using error::error;
};

} // namespace bicanon

#endif
