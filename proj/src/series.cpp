#include "cmtype/series.hpp"

#include <cctype>
#include <limits>

namespace cmtype {
namespace {

class ExpressionParser {
 public:
  ExpressionParser(std::string_view text, std::size_t offset) : text_(text), offset_(offset) {}

  ParsedExpression parse() {
    ParsedExpression out;
    out.text = std::string(text_);
    std::map<int, ParsedTerm> combined;
    auto absorb = [&](ParsedTerm t) {
      auto [it, inserted] = combined.try_emplace(t.exponent, t);
      if (inserted) return;
      ParsedTerm& acc = it->second;
      // a/b + c/d over a common denominator; stays a fraction if either was.
      acc.numerator = acc.numerator * t.denominator + t.numerator * acc.denominator;
      acc.denominator *= t.denominator;
      acc.is_fraction = acc.is_fraction || t.is_fraction;
      mpz_class g;
      mpz_gcd(g.get_mpz_t(), acc.numerator.get_mpz_t(), acc.denominator.get_mpz_t());
      if (g > 1) {
        acc.numerator /= g;
        acc.denominator /= g;
      }
    };
    absorb(term());
    for (;;) {
      skip_space();
      if (at_end()) break;
      const char op = peek();
      if (op != '+' && op != '-') fail("expected '+' or '-'");
      ++pos_;
      ParsedTerm t = term();
      if (op == '-') t.numerator = -t.numerator;
      absorb(std::move(t));
    }
    for (auto& [e, t] : combined) {
      if (t.numerator != 0) out.terms.push_back(t);
    }
    return out;
  }

 private:
  ParsedTerm term() {
    skip_space();
    if (at_end()) fail("expected a term");
    ParsedTerm t;
    t.numerator = 1;
    if (peek() == 't') {
      t.exponent = power();
      return t;
    }
    t.numerator = integer();
    skip_space();
    if (!at_end() && peek() == '/') {
      ++pos_;
      t.denominator = integer();
      if (t.denominator == 0) fail("zero denominator");
      if (t.denominator < 0) {
        t.denominator = -t.denominator;
        t.numerator = -t.numerator;
      }
      t.is_fraction = true;
      skip_space();
    }
    if (!at_end() && peek() == '*') {
      ++pos_;
      skip_space();
      if (at_end() || peek() != 't') fail("expected 't' after '*'");
      t.exponent = power();
    }
    return t;
  }

  // 't' ['^' int]
  int power() {
    ++pos_;
    skip_space();
    if (at_end() || peek() != '^') return 1;
    ++pos_;
    const std::size_t start = pos_;
    const mpz_class e = integer();
    if (!e.fits_sint_p() || abs(e) > std::numeric_limits<int>::max() / 4) {
      pos_ = start;
      fail("exponent out of range");
    }
    return static_cast<int>(e.get_si());
  }

  mpz_class integer() {
    skip_space();
    bool negative = false;
    if (!at_end() && peek() == '-') {
      negative = true;
      ++pos_;
      skip_space();
    }
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected digits");
    mpz_class v(std::string(text_.substr(start, pos_ - start)), 10);
    return negative ? mpz_class(-v) : v;
  }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  [[noreturn]] void fail(const std::string& what) const {
    std::string msg = what;
    if (!at_end()) msg += " near '" + std::string(1, peek()) + "'";
    throw ParseError(msg, offset_ + pos_);
  }

  std::string_view text_;
  std::size_t offset_;
  std::size_t pos_ = 0;
};

}  // namespace

ParsedExpression parse_expression(std::string_view text) { return ExpressionParser(text, 0).parse(); }

std::vector<ParsedExpression> parse_expression_list(std::string_view text) {
  std::vector<ParsedExpression> out;
  std::size_t start = 0;
  for (;;) {
    const std::size_t comma = text.find(',', start);
    const auto piece = text.substr(start, comma == std::string_view::npos ? std::string_view::npos
                                                                          : comma - start);
    out.push_back(ExpressionParser(piece, start).parse());
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace cmtype
