#include "fbk/word_syntax.hpp"

#include <charconv>
#include <climits>

#include "fbk/error.hpp"

namespace fbk {

namespace {

class Scanner {
 public:
  explicit Scanner(std::string_view text) : text_(text) {}

  bool done() const { return pos_ >= text_.size(); }
  std::size_t pos() const { return pos_; }
  char peek() const { return done() ? '\0' : text_[pos_]; }
  void advance() { ++pos_; }

  void skip_ws() {
    while (!done() && (text_[pos_] == ' ' || text_[pos_] == '\t')) ++pos_;
  }

  // Reads [-]digits; returns the value and leaves pos_ after it.
  long long number(bool allow_sign) {
    bool negative = false;
    if (allow_sign && (peek() == '-' || peek() == '+')) {
      negative = peek() == '-';
      advance();
    }
    const std::size_t start = pos_;
    const std::size_t digits = pos_;
    while (!done() && text_[pos_] >= '0' && text_[pos_] <= '9') ++pos_;
    if (pos_ == digits) throw ParseError("expected a decimal number", pos_);
    long long v = 0;
    auto [ptr, ec] = std::from_chars(text_.data() + start, text_.data() + pos_, v);
    if (ec != std::errc{} || ptr != text_.data() + pos_) {
      throw ParseError("number out of range", start);
    }
    return negative ? -v : v;
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

BraidWord parse_word(std::string_view text, int n) {
  if (n < 1) throw InvalidArgument("strand count must be >= 1");
  Scanner sc(text);
  BraidWord out(n);
  sc.skip_ws();
  while (!sc.done()) {
    const std::size_t start = sc.pos();
    const char g = sc.peek();
    if (g != 's' && g != 't') {
      throw ParseError(std::string("expected 's' or 't', found '") + g + "'", start);
    }
    sc.advance();
    const std::size_t index_at = sc.pos();
    if (sc.peek() == '0') throw ParseError("generator index must be nonzero", index_at);
    const long long index = sc.number(false);
    long long exponent = 1;
    if (sc.peek() == '^') {
      sc.advance();
      const std::size_t exp_at = sc.pos();
      exponent = sc.number(true);
      if (exponent == 0) throw ParseError("exponent 0 is not allowed", exp_at);
    }
    if (!sc.done() && sc.peek() != ' ' && sc.peek() != '\t') {
      throw ParseError(std::string("unexpected character '") + sc.peek() + "'", sc.pos());
    }
    const long long hi = g == 's' ? n - 1 : n;
    if (index > hi) {
      throw IndexOutOfRange(std::string(1, g) + std::to_string(index) + " at offset " +
                            std::to_string(start) + " does not fit " + std::to_string(n) +
                            " strands");
    }
    if (exponent > INT_MAX || exponent < -INT_MAX) {
      throw ParseError("exponent out of range", index_at);
    }
    const int i = static_cast<int>(index);
    const int e = static_cast<int>(exponent);
    out.push_back(g == 's' ? Letter::sigma(i, e) : Letter::tau(i, e));
    sc.skip_ws();
  }
  return out;
}

std::string print_word(const BraidWord& w) {
  std::string out;
  for (const auto& l : w.letters()) {
    if (!out.empty()) out += ' ';
    out += l.is_sigma() ? 's' : 't';
    out += std::to_string(l.index);
    if (l.exponent != 1) out += '^' + std::to_string(l.exponent);
  }
  return out;
}

}  // namespace fbk
