#pragma once

// Line reader shared by the CODE / TILING / LATTICE parsers.

#include <charconv>
#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "upsilon/error.hpp"
#include "upsilon/geometry.hpp"

namespace upsilon::detail {

class LineReader {
 public:
  explicit LineReader(std::istream& is) : is_(is) {}

  std::string next(const char* what) {
    std::string line;
    if (!std::getline(is_, line)) throw ParseError(std::string("unexpected end of input, expected ") + what, line_ + 1);
    ++line_;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    return line;
  }

  void expect_exact(const std::string& want) {
    const auto got = next(want.c_str());
    if (got != want) fail("expected '" + want + "', got '" + got + "'");
  }

  /// Parses "<key> <integer>".
  long long keyed(const std::string& key) {
    const auto got = next(key.c_str());
    if (got.rfind(key + " ", 0) != 0) fail("expected '" + key + " <int>', got '" + got + "'");
    return parse_int(std::string_view(got).substr(key.size() + 1));
  }

  std::vector<Coord> integers(std::size_t expected) {
    const auto got = next("a row of integers");
    if (!got.empty() && got.back() == ' ') fail("trailing whitespace");
    std::vector<Coord> out;
    std::string_view sv(got);
    std::size_t pos = 0;
    while (pos < sv.size()) {
      const auto sp = sv.find(' ', pos);
      const auto tok = sv.substr(pos, sp == std::string_view::npos ? sv.size() - pos : sp - pos);
      out.push_back(parse_int(tok));
      if (sp == std::string_view::npos) break;
      pos = sp + 1;
    }
    if (out.size() != expected)
      fail("expected " + std::to_string(expected) + " integers, got " + std::to_string(out.size()));
    return out;
  }

  void expect_end() {
    std::string line;
    while (std::getline(is_, line)) {
      ++line_;
      if (!line.empty() && line != "\r") fail("trailing content '" + line + "'");
    }
  }

  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, line_); }

 private:
  long long parse_int(std::string_view tok) const {
    long long v = 0;
    const auto* first = tok.data();
    const auto* last = tok.data() + tok.size();
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (tok.empty() || ec != std::errc() || ptr != last) fail("bad integer '" + std::string(tok) + "'");
    return v;
  }

  std::istream& is_;
  std::size_t line_ = 0;
};

}  // namespace upsilon::detail
