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

#include "resil/graph_io.h"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

namespace resil {
namespace {

// Splits a line into exactly two unsigned decimals.
bool ParsePair(const std::string& line, std::uint64_t& a, std::uint64_t& b) {
  const char* p = line.data();
  const char* end = p + line.size();
  auto skip_ws = [&] {
    while (p < end && (*p == ' ' || *p == '\t' || *p == '\r')) ++p;
  };
  skip_ws();
  auto r1 = std::from_chars(p, end, a);
  if (r1.ec != std::errc() || r1.ptr == p) return false;
  p = r1.ptr;
  if (p == end || (*p != ' ' && *p != '\t')) return false;
  skip_ws();
  auto r2 = std::from_chars(p, end, b);
  if (r2.ec != std::errc() || r2.ptr == p) return false;
  p = r2.ptr;
  skip_ws();
  return p == end;
}

}  // namespace

Graph ReadGraphText(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  std::uint64_t n = 0, m = 0;
  if (!std::getline(in, line)) throw ParseError(1, "missing header \"n m\"");
  ++lineno;
  if (!ParsePair(line, n, m)) throw ParseError(lineno, "expected \"n m\"");
  if (n > (std::uint64_t{1} << 31)) throw ParseError(lineno, "n too large");
  std::vector<Edge> edges;
  std::vector<std::size_t> lines;
  for (std::uint64_t i = 0; i < m; ++i) {
    if (!std::getline(in, line)) {
      throw ParseError(lineno + 1, "expected " + std::to_string(m) +
                                       " edges, found " + std::to_string(i));
    }
    ++lineno;
    std::uint64_t u = 0, v = 0;
    if (!ParsePair(line, u, v)) throw ParseError(lineno, "expected \"u v\"");
    if (u >= v) throw ParseError(lineno, "edge must satisfy u < v");
    if (v >= n) throw ParseError(lineno, "endpoint out of range");
    edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
    lines.push_back(lineno);
  }
  std::vector<std::size_t> order(edges.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return edges[a] < edges[b] || (edges[a] == edges[b] && a < b);
  });
  for (std::size_t i = 1; i < order.size(); ++i) {
    if (edges[order[i]] == edges[order[i - 1]]) {
      throw ParseError(lines[order[i]], "duplicate edge");
    }
  }
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") != std::string::npos) {
      throw ParseError(lineno, "trailing content after edge list");
    }
  }
  return Graph(n, edges);
}

Graph ReadGraphFile(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  return ReadGraphText(in);
}

void WriteGraphText(std::ostream& out, const Graph& g) {
  out << g.n() << ' ' << g.m() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

std::string GraphToText(const Graph& g) {
  std::ostringstream out;
  WriteGraphText(out, g);
  return out.str();
}

void WriteGraphFile(const std::filesystem::path& path, const Graph& g) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  WriteGraphText(out, g);
}

}  // namespace resil
