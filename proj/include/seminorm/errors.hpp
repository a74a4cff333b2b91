/*
   Copyright 2026 The seminorm authors

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

#ifndef SEMINORM_ERRORS_HPP
#define SEMINORM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace seminorm {

// Bad user input: malformed text, duplicate variables, composite modulus,
// mixed rings, ill-formed maps.
class ValueError : public std::runtime_error {
   public:
    explicit ValueError(const std::string& msg) : std::runtime_error(msg) {}
};

class ParseError : public ValueError {
   public:
    ParseError(const std::string& msg, std::size_t line, std::size_t column)
        : ValueError(msg + " (line " + std::to_string(line) + ", column " + std::to_string(column) + ")"),
          line_(line),
          column_(column) {}
    explicit ParseError(const std::string& msg) : ValueError(msg), line_(0), column_(0) {}
    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

   private:
    std::size_t line_;
    std::size_t column_;
};

class NotReduced : public ValueError {
   public:
    explicit NotReduced(const std::string& msg) : ValueError(msg) {}
};

class NotFinite : public ValueError {
   public:
    explicit NotFinite(const std::string& msg) : ValueError(msg) {}
};

class NotSurjective : public ValueError {
   public:
    explicit NotSurjective(const std::string& msg) : ValueError(msg) {}
};

class NameCollision : public ValueError {
   public:
    explicit NameCollision(const std::string& msg) : ValueError(msg) {}
};

// Resource-style failures: the computation is honest but out of the
// supported envelope.
class UnsupportedDegree : public std::runtime_error {
   public:
    explicit UnsupportedDegree(const std::string& msg) : std::runtime_error(msg) {}
};

class IncompleteDecomposition : public std::runtime_error {
   public:
    explicit IncompleteDecomposition(const std::string& msg) : std::runtime_error(msg) {}
};

class ResourceLimitExceeded : public std::runtime_error {
   public:
    explicit ResourceLimitExceeded(const std::string& msg) : std::runtime_error(msg) {}
};

class InjectivityFailure : public std::runtime_error {
   public:
    explicit InjectivityFailure(const std::string& msg) : std::runtime_error(msg) {}
};

// A postcondition the library itself guarantees failed to hold; always a bug.
class InvariantViolation : public std::logic_error {
   public:
    explicit InvariantViolation(const std::string& msg) : std::logic_error(msg) {}
};

inline void invariant(bool cond, const char* msg) {
    if (!cond) throw InvariantViolation(msg);
}

}  // namespace seminorm

#endif
