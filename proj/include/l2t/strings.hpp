// Copyright 2026 The l2t Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef L2T_STRINGS_HPP
#define L2T_STRINGS_HPP

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace l2t {

inline std::string to_lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return out;
}

inline std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

// Lowercase with interior whitespace collapsed to single spaces.
inline std::string normalize(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  bool in_space = true;
  for (char ch : s) {
    if (std::isspace(static_cast<unsigned char>(ch))) {
      if (!in_space) out.push_back(' ');
      in_space = true;
    } else {
      out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(ch))));
      in_space = false;
    }
  }
  if (!out.empty() && out.back() == ' ') out.pop_back();
  return out;
}

inline bool contains(std::string_view haystack, std::string_view needle) {
  return haystack.find(needle) != std::string_view::npos;
}

inline std::vector<std::string> split_words(std::string_view s) {
  std::vector<std::string> out;
  std::string w;
  for (char ch : s) {
    if (std::isspace(static_cast<unsigned char>(ch))) {
      if (!w.empty()) out.push_back(std::move(w)), w.clear();
    } else {
      w.push_back(ch);
    }
  }
  if (!w.empty()) out.push_back(std::move(w));
  return out;
}

struct WordAt {
  std::string text;
  std::size_t begin = 0;  // byte offset into the source string
  std::size_t end = 0;    // one past the last byte
};

inline std::vector<WordAt> split_words_with_offsets(std::string_view s) {
  std::vector<WordAt> out;
  std::size_t i = 0, n = s.size();
  while (i < n) {
    while (i < n && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    if (i >= n) break;
    std::size_t b = i;
    while (i < n && !std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    out.push_back({std::string(s.substr(b, i - b)), b, i});
  }
  return out;
}

// Strips digit grouping commas, a trailing percent sign, and leading/trailing
// currency-free punctuation noise, then decides whether what is left reads
// as a decimal number.
inline std::string strip_grouping(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (char ch : s)
    if (ch != ',') out.push_back(ch);
  if (!out.empty() && out.back() == '%') out.pop_back();
  return out;
}

inline bool is_number(std::string_view s) {
  std::string t = strip_grouping(s);
  if (t.empty()) return false;
  std::size_t i = 0;
  if (t[0] == '+' || t[0] == '-') i = 1;
  bool digits = false, dot = false;
  for (; i < t.size(); ++i) {
    if (std::isdigit(static_cast<unsigned char>(t[i]))) {
      digits = true;
    } else if (t[i] == '.' && !dot) {
      dot = true;
    } else {
      return false;
    }
  }
  return digits;
}

// Canonical numeric spelling: grouping stripped, no leading zeros, no
// trailing fractional zeros, no trailing dot. "5,032" and "5032" agree.
inline std::string canonical_number(std::string_view s) {
  std::string t = strip_grouping(s);
  bool neg = !t.empty() && t[0] == '-';
  if (!t.empty() && (t[0] == '+' || t[0] == '-')) t.erase(0, 1);
  std::string ip, fp;
  std::size_t dot = t.find('.');
  if (dot == std::string::npos) {
    ip = t;
  } else {
    ip = t.substr(0, dot);
    fp = t.substr(dot + 1);
  }
  std::size_t nz = ip.find_first_not_of('0');
  ip = (nz == std::string::npos) ? "0" : ip.substr(nz);
  while (!fp.empty() && fp.back() == '0') fp.pop_back();
  std::string out = ip;
  if (!fp.empty()) out += "." + fp;
  if (neg && out != "0") out.insert(out.begin(), '-');
  return out;
}

inline std::string strip_edge_punct(std::string_view s) {
  std::size_t b = 0, e = s.size();
  auto bare = [](unsigned char c) { return std::isalnum(c) || c == '.' || c == ',' || c == '-' || c == '+' || c == '%'; };
  while (b < e && !bare(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && !std::isalnum(static_cast<unsigned char>(s[e - 1])) && s[e - 1] != '%') --e;
  return std::string(s.substr(b, e - b));
}

// Every numeric literal appearing as a whitespace token of `text`, in
// canonical spelling. Used for grouping-invariant number matching.
inline std::set<std::string> number_tokens(std::string_view text) {
  std::set<std::string> out;
  for (const auto& w : split_words(text)) {
    std::string t = strip_edge_punct(w);
    if (is_number(t)) out.insert(canonical_number(t));
  }
  return out;
}

}  // namespace l2t

#endif  // L2T_STRINGS_HPP
