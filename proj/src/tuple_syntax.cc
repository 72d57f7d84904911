// Copyright 2026 The tokgraph Authors.
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

#include "tokgraph/tuple_syntax.h"

#include <cctype>
#include <charconv>
#include <string>

namespace tokgraph {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

int parse_int(std::string_view s) {
  s = trim(s);
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size() || value < 0) {
    throw ParseError(0, "expected a non-negative integer, got '" + std::string(s) + "'");
  }
  return value;
}

std::vector<std::string_view> split_top_level(std::string_view text) {
  std::vector<std::string_view> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '(') ++depth;
    if (text[i] == ')') --depth;
    if (depth < 0) throw ParseError(0, "unbalanced ')'");
    if (text[i] == ',' && depth == 0) {
      out.push_back(trim(text.substr(start, i - start)));
      start = i + 1;
    }
  }
  if (depth != 0) throw ParseError(0, "unbalanced '('");
  out.push_back(trim(text.substr(start)));
  return out;
}

}  // namespace

Distribution parse_tuple(std::string_view text) {
  text = trim(text);
  char sep = '.';
  if (text.starts_with('(')) {
    if (!text.ends_with(')')) throw ParseError(0, "tuple missing ')'");
    text = text.substr(1, text.size() - 2);
    sep = ',';
  }
  if (trim(text).empty()) throw ParseError(0, "empty tuple");
  Distribution out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || text[i] == sep) {
      out.push_back(parse_int(text.substr(start, i - start)));
      start = i + 1;
    }
  }
  return out;
}

std::vector<Distribution> parse_tuple_list(std::string_view text) {
  std::vector<Distribution> out;
  if (trim(text).empty()) return out;
  for (std::string_view item : split_top_level(text)) out.push_back(parse_tuple(item));
  return out;
}

std::vector<std::pair<int, Distribution>> parse_beta_list(std::string_view text) {
  std::vector<std::pair<int, Distribution>> out;
  if (trim(text).empty()) return out;
  for (std::string_view item : split_top_level(text)) {
    const std::size_t colon = item.find(':');
    if (colon == std::string_view::npos) {
      throw ParseError(0, "expected cut:tuple, got '" + std::string(item) + "'");
    }
    const int cut = parse_int(item.substr(0, colon));
    if (cut < 1) throw ParseError(0, "cut numbers start at 1");
    out.emplace_back(cut - 1, parse_tuple(item.substr(colon + 1)));
  }
  return out;
}

}  // namespace tokgraph
