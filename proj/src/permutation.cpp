// Copyright 2026 The btlab Authors.
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

#include "btlab/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

#include "btlab/errors.hpp"

namespace btlab {
namespace {

bool IsSeparator(char ch) { return ch == ',' || std::isspace(static_cast<unsigned char>(ch)); }

int ParsePoint(std::string_view token) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec == std::errc::result_out_of_range) {
    throw Error(ErrorKind::kOutOfRange, "point '" + std::string(token) + "' is too large");
  }
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw Error(ErrorKind::kSyntax, "unexpected token '" + std::string(token) + "'");
  }
  if (value < 1) {
    throw Error(ErrorKind::kOutOfRange, "point '" + std::string(token) + "' is not >= 1");
  }
  return value;
}

// Splits on commas/whitespace, dropping empty pieces.
std::vector<std::string_view> Tokenize(std::string_view text) {
  std::vector<std::string_view> tokens;
  size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && IsSeparator(text[pos])) ++pos;
    size_t end = pos;
    while (end < text.size() && !IsSeparator(text[end])) ++end;
    if (end > pos) tokens.push_back(text.substr(pos, end - pos));
    pos = end;
  }
  return tokens;
}

std::string_view Trim(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  return text;
}

Permutation ParseOneLine(std::string_view text, std::optional<int> degree) {
  std::vector<std::string_view> tokens = Tokenize(text);
  if (tokens.empty()) throw Error(ErrorKind::kEmptyInput, "no images in '" + std::string(text) + "'");
  const int h = static_cast<int>(tokens.size());
  if (degree && *degree != h) {
    throw Error(ErrorKind::kOutOfRange, "one-line form lists " + std::to_string(h) +
                                            " images but degree " + std::to_string(*degree) +
                                            " was requested");
  }
  std::vector<int> images;
  std::vector<bool> seen(static_cast<size_t>(h) + 1, false);
  for (std::string_view token : tokens) {
    int value = ParsePoint(token);
    if (value > h) {
      throw Error(ErrorKind::kOutOfRange,
                  "image '" + std::string(token) + "' exceeds degree " + std::to_string(h));
    }
    if (seen[static_cast<size_t>(value)]) {
      throw Error(ErrorKind::kDuplicateImage, "image '" + std::string(token) + "' repeats");
    }
    seen[static_cast<size_t>(value)] = true;
    images.push_back(value);
  }
  return Permutation(std::move(images));
}

Permutation ParseCycles(std::string_view text, std::optional<int> degree) {
  std::vector<std::vector<int>> cycles;
  std::vector<std::string_view> raw_tokens;
  size_t pos = 0;
  while (pos < text.size()) {
    char ch = text[pos];
    if (std::isspace(static_cast<unsigned char>(ch))) {
      ++pos;
      continue;
    }
    if (ch != '(') {
      throw Error(ErrorKind::kSyntax, "expected '(' at '" + std::string(text.substr(pos)) + "'");
    }
    size_t close = text.find(')', pos);
    if (close == std::string_view::npos) {
      throw Error(ErrorKind::kSyntax, "unterminated cycle '" + std::string(text.substr(pos)) + "'");
    }
    std::string_view body = text.substr(pos + 1, close - pos - 1);
    if (body.find('(') != std::string_view::npos) {
      throw Error(ErrorKind::kSyntax, "nested '(' in '" + std::string(body) + "'");
    }
    std::vector<int> cycle;
    for (std::string_view token : Tokenize(body)) {
      cycle.push_back(ParsePoint(token));
      raw_tokens.push_back(token);
    }
    if (!cycle.empty()) cycles.push_back(std::move(cycle));
    pos = close + 1;
  }

  int max_point = 0;
  for (const auto& cycle : cycles) {
    for (int point : cycle) max_point = std::max(max_point, point);
  }
  if (max_point == 0 && !degree) {
    throw Error(ErrorKind::kEmptyInput, "cycle form '" + std::string(text) + "' names no points");
  }
  const int h = degree.value_or(max_point);
  if (h < 1) throw Error(ErrorKind::kOutOfRange, "degree must be >= 1");
  if (max_point > h) {
    throw Error(ErrorKind::kOutOfRange,
                "point " + std::to_string(max_point) + " exceeds degree " + std::to_string(h));
  }

  std::vector<int> images(static_cast<size_t>(h));
  for (int i = 1; i <= h; ++i) images[static_cast<size_t>(i - 1)] = i;
  std::vector<bool> seen(static_cast<size_t>(h) + 1, false);
  for (const auto& cycle : cycles) {
    for (size_t k = 0; k < cycle.size(); ++k) {
      int point = cycle[k];
      if (seen[static_cast<size_t>(point)]) {
        throw Error(ErrorKind::kDuplicateImage, "point '" + std::to_string(point) + "' appears twice");
      }
      seen[static_cast<size_t>(point)] = true;
      images[static_cast<size_t>(point - 1)] = cycle[(k + 1) % cycle.size()];
    }
  }
  return Permutation(std::move(images));
}

}  // namespace

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  if (images_.empty()) throw Error(ErrorKind::kEmptyInput, "permutation of degree 0");
  const int h = degree();
  std::vector<bool> seen(static_cast<size_t>(h) + 1, false);
  for (int value : images_) {
    if (value < 1 || value > h) {
      throw Error(ErrorKind::kOutOfRange, "image " + std::to_string(value) + " outside 1.." + std::to_string(h));
    }
    if (seen[static_cast<size_t>(value)]) {
      throw Error(ErrorKind::kDuplicateImage, "image " + std::to_string(value) + " repeats");
    }
    seen[static_cast<size_t>(value)] = true;
  }
}

Permutation Permutation::Identity(int degree) {
  std::vector<int> images(static_cast<size_t>(std::max(degree, 0)));
  for (int i = 0; i < degree; ++i) images[static_cast<size_t>(i)] = i + 1;
  return Permutation(std::move(images));
}

std::string Permutation::ToOneLine() const {
  std::ostringstream out;
  for (size_t i = 0; i < images_.size(); ++i) {
    if (i) out << ',';
    out << images_[i];
  }
  return out.str();
}

std::string Permutation::ToCycleString() const {
  std::ostringstream out;
  for (const auto& cycle : CycleDecomposition(*this)) {
    if (cycle.size() == 1) continue;
    out << '(';
    for (size_t k = 0; k < cycle.size(); ++k) {
      if (k) out << ' ';
      out << cycle[k];
    }
    out << ')';
  }
  std::string s = out.str();
  return s.empty() ? "()" : s;
}

Permutation ParsePermutation(std::string_view text, std::optional<int> degree) {
  std::string_view trimmed = Trim(text);
  if (trimmed.empty()) throw Error(ErrorKind::kEmptyInput, "empty permutation text");
  if (trimmed.front() == '(') return ParseCycles(trimmed, degree);
  return ParseOneLine(trimmed, degree);
}

std::vector<std::vector<int>> CycleDecomposition(const Permutation& perm) {
  const int h = perm.degree();
  std::vector<bool> visited(static_cast<size_t>(h) + 1, false);
  std::vector<std::vector<int>> cycles;
  for (int start = 1; start <= h; ++start) {
    if (visited[static_cast<size_t>(start)]) continue;
    std::vector<int> cycle;
    for (int i = start; !visited[static_cast<size_t>(i)]; i = perm(i)) {
      visited[static_cast<size_t>(i)] = true;
      cycle.push_back(i);
    }
    cycles.push_back(std::move(cycle));
  }
  return cycles;
}

Permutation LongCycle(int degree) {
  std::vector<int> images(static_cast<size_t>(degree));
  for (int i = 1; i <= degree; ++i) images[static_cast<size_t>(i - 1)] = i % degree + 1;
  return Permutation(std::move(images));
}

void CheckSignature(const Permutation& perm, const Signature& sig) {
  if (sig.c < 0 || sig.d < 0) {
    throw Error(ErrorKind::kSignatureMismatch, "c and d must be nonnegative");
  }
  if (sig.h() != perm.degree()) {
    throw Error(ErrorKind::kSignatureMismatch,
                "c+d=" + std::to_string(sig.h()) + " but permutation has degree " +
                    std::to_string(perm.degree()));
  }
}

}  // namespace btlab
