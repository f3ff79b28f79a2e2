// Copyright 2026 The Anticart Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "anticart/wire_type.hpp"

#include <algorithm>
#include <cctype>

#include "anticart/error.hpp"

namespace anticart {

std::string WireType::to_string() const {
  std::string out = base;
  for (int i = 0; i < order; ++i) out += ".L";
  for (int i = 0; i > order; --i) out += ".R";
  return out;
}

TypeList concat(const TypeList& a, const TypeList& b) {
  TypeList out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

std::string to_string(const TypeList& types) {
  std::string out;
  for (const auto& t : types) {
    if (!out.empty()) out += ' ';
    out += t.to_string();
  }
  return out;
}

namespace {

class TypeParser {
 public:
  explicit TypeParser(std::string_view text) : text_(text) {}

  TypeList parse_all() {
    TypeList out = parse_sequence();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected ')'");
    return out;
  }

 private:
  TypeList parse_sequence() {
    TypeList out;
    while (true) {
      skip_space();
      if (pos_ >= text_.size() || text_[pos_] == ')') return out;
      TypeList item = parse_item();
      out.insert(out.end(), item.begin(), item.end());
    }
  }

  TypeList parse_item() {
    TypeList item;
    if (text_[pos_] == '(') {
      ++pos_;
      item = parse_sequence();
      if (pos_ >= text_.size() || text_[pos_] != ')') fail("missing ')'");
      ++pos_;
      if (item.empty()) fail("empty group");
    } else {
      size_t start = pos_;
      while (pos_ < text_.size() && is_symbol_char(text_[pos_])) ++pos_;
      if (start == pos_) fail("expected a base symbol");
      item.push_back({std::string(text_.substr(start, pos_ - start)), 0});
    }
    while (pos_ + 1 < text_.size() && text_[pos_] == '.' &&
           (text_[pos_ + 1] == 'L' || text_[pos_ + 1] == 'R')) {
      int delta = text_[pos_ + 1] == 'L' ? 1 : -1;
      std::reverse(item.begin(), item.end());
      for (auto& w : item) w.order += delta;
      pos_ += 2;
    }
    if (pos_ < text_.size() && !std::isspace(static_cast<unsigned char>(text_[pos_])) &&
        text_[pos_] != ')' && text_[pos_] != '(') {
      fail("bad suffix");
    }
    return item;
  }

  static bool is_symbol_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-';
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& why) const {
    throw FormatError("type '" + std::string(text_) + "' at " + std::to_string(pos_) + ": " + why);
  }

  std::string_view text_;
  size_t pos_ = 0;
};

}  // namespace

TypeList parse_types(std::string_view text) { return TypeParser(text).parse_all(); }

void TypeTable::check(const std::string& base) const {
  if (base.empty()) throw UnknownBase("empty base symbol");
  if (!contains(base)) throw UnknownBase("'" + base + "' is not declared");
}

void TypeTable::check(const TypeList& types) const {
  for (const auto& t : types) check(t.base);
}

}  // namespace anticart
