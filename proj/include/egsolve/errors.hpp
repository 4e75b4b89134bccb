/*
 * Copyright 2026 The egsolve authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef EGSOLVE_ERRORS_HPP
#define EGSOLVE_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace eg {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Checked integer arithmetic left the 64-bit signed range.
struct OverflowError : Error {
    using Error::Error;
};

/// A value-level contract was broken (bad argument, indeterminate sum, ...).
struct ValueError : Error {
    using Error::Error;
};

/// Malformed arena or potential text; carries the 1-based input line.
struct ParseError : Error {
    ParseError(std::size_t line_number, const std::string& reason)
        : Error("line " + std::to_string(line_number) + ": " + reason), line(line_number) {}
    std::size_t line;
};

/// A zero-sum cycle was detected where the algorithm requires simplicity.
struct NonSimpleError : Error {
    using Error::Error;
};

/// An internal invariant failed; this always indicates an implementation bug.
struct InternalError : Error {
    using Error::Error;
};

} // namespace eg

#endif
