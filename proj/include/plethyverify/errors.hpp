/*
   Copyright 2026 The plethyverify authors

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

#pragma once

#include <stdexcept>
#include <string>

namespace plethy {

struct DivisionByZero : std::domain_error {
    explicit DivisionByZero(const std::string& what) : std::domain_error(what) {}
};

struct FieldMismatch : std::invalid_argument {
    explicit FieldMismatch(const std::string& what) : std::invalid_argument(what) {}
};

struct InexactDivision : std::domain_error {
    explicit InexactDivision(const std::string& what) : std::domain_error(what) {}
};

struct ShapeTooLong : std::invalid_argument {
    explicit ShapeTooLong(const std::string& what) : std::invalid_argument(what) {}
};

struct ShapeMismatch : std::invalid_argument {
    explicit ShapeMismatch(const std::string& what) : std::invalid_argument(what) {}
};

struct NotInSpace : std::invalid_argument {
    explicit NotInSpace(const std::string& what) : std::invalid_argument(what) {}
};

struct WrongCharacteristic : std::invalid_argument {
    explicit WrongCharacteristic(const std::string& what) : std::invalid_argument(what) {}
};

struct DegreeTooHigh : std::invalid_argument {
    explicit DegreeTooHigh(const std::string& what) : std::invalid_argument(what) {}
};

struct RepeatedNode : std::invalid_argument {
    explicit RepeatedNode(const std::string& what) : std::invalid_argument(what) {}
};

struct OutOfRange : std::out_of_range {
    explicit OutOfRange(const std::string& what) : std::out_of_range(what) {}
};

struct NotRotatable : std::invalid_argument {
    explicit NotRotatable(const std::string& what) : std::invalid_argument(what) {}
};

struct NotGeneric : std::invalid_argument {
    explicit NotGeneric(const std::string& what) : std::invalid_argument(what) {}
};

struct DenominatorNotCleared : std::domain_error {
    explicit DenominatorNotCleared(const std::string& what) : std::domain_error(what) {}
};

struct ParseError : std::invalid_argument {
    explicit ParseError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace plethy
