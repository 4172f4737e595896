// Copyright 2026 The nmgraph Authors
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

#include "nmgraph/matrix_io.h"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "nmgraph/errors.h"

namespace nmgraph {

namespace {

constexpr std::string_view kMatrixMarketBanner =
    "%%MatrixMarket matrix coordinate integer general";
constexpr std::string_view kLabelsTag = "labels:";

struct Line {
  std::size_t number;
  std::string text;
};

std::vector<std::string_view> Tokens(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    const std::size_t start = i;
    while (i < s.size() && !std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    if (i > start) out.push_back(s.substr(start, i - start));
  }
  return out;
}

template <typename T>
T ParseNumber(std::string_view token, std::size_t line) {
  T value{};
  auto [ptr, ec] =
      std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw ParseError(line, "not an integer: '" + std::string(token) + "'");
  }
  return value;
}

// Parses "<comment-char> labels: a b c" if `text` is such a line.
std::optional<std::vector<Label>> ParseLabelComment(std::string_view text,
                                                    std::size_t line) {
  auto tokens = Tokens(text.substr(1));
  if (tokens.empty() || tokens.front() != kLabelsTag) return std::nullopt;
  std::vector<Label> labels;
  for (std::size_t t = 1; t < tokens.size(); ++t) {
    labels.push_back(ParseNumber<Label>(tokens[t], line));
  }
  return labels;
}

void WriteLabels(const NeighborhoodMatrix& m, char comment, std::ostream& out) {
  out << comment << ' ' << kLabelsTag;
  for (Label l : m.labels()) out << ' ' << l;
  out << '\n';
}

NeighborhoodMatrix Assemble(std::size_t n, std::vector<Entry> entries,
                            std::optional<std::vector<Label>> labels,
                            std::size_t label_line) {
  if (labels) {
    if (labels->size() != n) {
      throw ParseError(label_line, "label comment lists " +
                                       std::to_string(labels->size()) +
                                       " labels for dimension " +
                                       std::to_string(n));
    }
    auto sorted = *labels;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw ParseError(label_line, "duplicate label");
    }
  }
  return NeighborhoodMatrix(n, std::move(entries),
                            labels ? std::move(*labels) : std::vector<Label>{});
}

}  // namespace

void WriteDense(const NeighborhoodMatrix& m, std::ostream& out) {
  const std::size_t n = m.dimension();
  out << n << '\n';
  if (n == 0) return;
  WriteLabels(m, '#', out);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (j > 0) out << ' ';
      out << m(i, j);
    }
    out << '\n';
  }
}

void WriteMatrixMarket(const NeighborhoodMatrix& m, std::ostream& out) {
  const auto nz = NonZeros(m);
  out << kMatrixMarketBanner << '\n';
  WriteLabels(m, '%', out);
  out << m.dimension() << ' ' << m.dimension() << ' ' << nz.size() << '\n';
  for (const auto& t : nz) {
    out << t.row + 1 << ' ' << t.col + 1 << ' ' << t.value << '\n';
  }
}

void WriteMatrix(const NeighborhoodMatrix& m, MatrixFormat format,
                 std::ostream& out) {
  if (format == MatrixFormat::kMatrixMarket) {
    WriteMatrixMarket(m, out);
  } else {
    WriteDense(m, out);
  }
}

NeighborhoodMatrix ReadDense(std::istream& in) {
  std::optional<std::size_t> n;
  std::optional<std::vector<Label>> labels;
  std::size_t label_line = 0;
  std::vector<Entry> entries;
  std::size_t rows = 0;

  std::string text;
  std::size_t line = 0;
  while (std::getline(in, text)) {
    ++line;
    const auto tokens = Tokens(text);
    if (tokens.empty()) continue;
    if (tokens.front().front() == '#') {
      const auto start = text.find('#');
      if (auto parsed = ParseLabelComment(std::string_view(text).substr(start),
                                          line)) {
        labels = std::move(parsed);
        label_line = line;
      }
      continue;
    }
    if (!n) {
      if (tokens.size() != 1) {
        throw ParseError(line, "expected the dimension n on its own line");
      }
      const auto dim = ParseNumber<std::int64_t>(tokens.front(), line);
      if (dim < 0) throw ParseError(line, "negative dimension");
      n = static_cast<std::size_t>(dim);
      entries.reserve(*n * *n);
      continue;
    }
    if (rows == *n) throw ParseError(line, "more rows than the dimension");
    if (tokens.size() != *n) {
      throw ParseError(line, "expected " + std::to_string(*n) +
                                 " entries, got " +
                                 std::to_string(tokens.size()));
    }
    for (auto tok : tokens) entries.push_back(ParseNumber<Entry>(tok, line));
    ++rows;
  }
  if (!n) throw ParseError(0, "empty matrix file");
  if (rows != *n) {
    throw ParseError(line, "expected " + std::to_string(*n) + " rows, got " +
                               std::to_string(rows));
  }
  return Assemble(*n, std::move(entries), std::move(labels), label_line);
}

NeighborhoodMatrix ReadMatrixMarket(std::istream& in) {
  std::string text;
  std::size_t line = 0;
  if (!std::getline(in, text)) throw ParseError(0, "empty matrix file");
  ++line;
  {
    auto banner = Tokens(text);
    auto lower = [](std::string_view s) {
      std::string out(s);
      std::transform(out.begin(), out.end(), out.begin(),
                     [](unsigned char c) { return std::tolower(c); });
      return out;
    };
    if (banner.size() != 5 || banner[0] != "%%MatrixMarket" ||
        lower(banner[1]) != "matrix" || lower(banner[2]) != "coordinate" ||
        lower(banner[3]) != "integer" || lower(banner[4]) != "general") {
      throw ParseError(line, "expected '" + std::string(kMatrixMarketBanner) +
                                 "'");
    }
  }

  std::optional<std::vector<Label>> labels;
  std::size_t label_line = 0;
  std::optional<std::size_t> n;
  std::size_t expected_nnz = 0;
  std::size_t seen = 0;
  std::vector<Entry> entries;
  std::vector<bool> filled;

  while (std::getline(in, text)) {
    ++line;
    const auto tokens = Tokens(text);
    if (tokens.empty()) continue;
    if (tokens.front().front() == '%') {
      const auto start = text.find('%');
      if (auto parsed = ParseLabelComment(std::string_view(text).substr(start),
                                          line)) {
        labels = std::move(parsed);
        label_line = line;
      }
      continue;
    }
    if (!n) {
      if (tokens.size() != 3) throw ParseError(line, "expected 'rows cols nnz'");
      const auto r = ParseNumber<std::int64_t>(tokens[0], line);
      const auto c = ParseNumber<std::int64_t>(tokens[1], line);
      const auto nnz = ParseNumber<std::int64_t>(tokens[2], line);
      if (r < 0 || c < 0 || nnz < 0) throw ParseError(line, "negative size");
      if (r != c) throw ParseError(line, "matrix is not square");
      n = static_cast<std::size_t>(r);
      expected_nnz = static_cast<std::size_t>(nnz);
      if (expected_nnz > *n * *n) {
        throw ParseError(line, "more entries than matrix cells");
      }
      entries.assign(*n * *n, 0);
      filled.assign(*n * *n, false);
      continue;
    }
    if (tokens.size() != 3) throw ParseError(line, "expected 'i j value'");
    const auto i = ParseNumber<std::int64_t>(tokens[0], line);
    const auto j = ParseNumber<std::int64_t>(tokens[1], line);
    const auto v = ParseNumber<Entry>(tokens[2], line);
    if (i < 1 || j < 1 || static_cast<std::size_t>(i) > *n ||
        static_cast<std::size_t>(j) > *n) {
      throw ParseError(line, "index out of range");
    }
    const std::size_t cell = (i - 1) * *n + (j - 1);
    if (filled[cell]) throw ParseError(line, "duplicate entry");
    filled[cell] = true;
    entries[cell] = v;
    if (++seen > expected_nnz) {
      throw ParseError(line, "more entries than declared");
    }
  }
  if (!n) throw ParseError(line, "missing size line");
  if (seen != expected_nnz) {
    throw ParseError(line, "declared " + std::to_string(expected_nnz) +
                               " entries, found " + std::to_string(seen));
  }
  return Assemble(*n, std::move(entries), std::move(labels), label_line);
}

NeighborhoodMatrix ReadMatrix(std::istream& in) {
  std::stringstream buffer;
  buffer << in.rdbuf();
  const std::string text = buffer.str();
  return ReadMatrix(std::string_view(text));
}

NeighborhoodMatrix ReadMatrix(std::string_view text) {
  const std::size_t first = text.find_first_not_of(" \t\r\n");
  std::istringstream in{std::string(text)};
  if (first != std::string_view::npos &&
      text.substr(first).starts_with("%%MatrixMarket")) {
    return ReadMatrixMarket(in);
  }
  return ReadDense(in);
}

}  // namespace nmgraph
