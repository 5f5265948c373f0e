// Copyright 2026 The resil Authors
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

// Plain-text graph format:
//
//   n m
//   u v        (m lines, u < v, ASCII decimal)
//
// WriteGraphText emits edges in sorted order, so write(read(text)) == text
// for any file that was produced by WriteGraphText.

#ifndef RESIL_GRAPH_IO_H_
#define RESIL_GRAPH_IO_H_

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>

#include "resil/graph.h"

namespace resil {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

Graph ReadGraphText(std::istream& in);
Graph ReadGraphFile(const std::filesystem::path& path);

void WriteGraphText(std::ostream& out, const Graph& g);
std::string GraphToText(const Graph& g);
void WriteGraphFile(const std::filesystem::path& path, const Graph& g);

}  // namespace resil

#endif  // RESIL_GRAPH_IO_H_
