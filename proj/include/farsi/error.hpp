// Copyright 2026 The farsi-std Authors.
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

#ifndef FARSI_ERROR_HPP_
#define FARSI_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace farsi {

// Raised by the loaders of the line-oriented data files (mapping tables,
// affix lexicons, abbreviation and word lists). Line numbers are 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace farsi

#endif  // FARSI_ERROR_HPP_
