#pragma once

// Tiny hand-written scanner shared by the word and element parsers.

#include <cctype>
#include <string>
#include <string_view>

#include "thuemorse/error.hpp"

namespace thuemorse::detail {

class Scanner {
 public:
  explicit Scanner(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_space();
    return pos_ >= text_.size();
  }
  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  bool consume(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  void expect(char c) {
    if (!consume(c)) fail(std::string("expected '") + c + "'");
  }
  bool peek_digit() { return std::isdigit(static_cast<unsigned char>(peek())) != 0; }

  /// Unsigned decimal literal, returned as text (may be arbitrarily long).
  std::string digits() {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a number");
    return std::string(text_.substr(start, pos_ - start));
  }
  /// Optionally signed machine integer (exponents, generator indices).
  long long integer() {
    bool negative = consume('-');
    if (!negative) consume('+');
    std::string d = digits();
    if (d.size() > 15) fail("integer too large");
    long long v = std::stoll(d);
    return negative ? -v : v;
  }

  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError(why + " at position " + std::to_string(pos_) + " in \"" +
                     std::string(text_) + "\"");
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace thuemorse::detail
