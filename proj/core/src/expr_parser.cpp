#include "tautcalc/expr_parser.hpp"

#include <cctype>

namespace tautcalc {
namespace {

class Parser {
 public:
  Parser(std::string_view text, MarkedSpace space) : s_(text), space_(space) {}

  GeneratorExpr parse() {
    GeneratorExpr e = parse_class();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(pos_, msg); }
  [[noreturn]] void fail_at(std::size_t at, const std::string& msg) const { throw ParseError(at, msg); }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool peek(char c) {
    skip();
    return pos_ < s_.size() && s_[pos_] == c;
  }
  bool accept(char c) {
    if (!peek(c)) return false;
    ++pos_;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  bool accept_word(std::string_view w) {
    skip();
    if (s_.substr(pos_, w.size()) != w) return false;
    pos_ += w.size();
    return true;
  }
  bool at_digit() {
    skip();
    return pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]));
  }
  long integer() {
    if (!at_digit()) fail("expected a number");
    long v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      v = v * 10 + (s_[pos_++] - '0');
      if (v > 1'000'000'000) fail("number too large");
    }
    return v;
  }

  GeneratorExpr parse_class() {
    std::vector<std::pair<Rational, GeneratorExpr>> terms;
    Rational sign = accept('-') ? -1 : 1;
    terms.push_back({sign, parse_term()});
    while (true) {
      if (accept('+'))
        sign = 1;
      else if (accept('-'))
        sign = -1;
      else
        break;
      terms.push_back({sign, parse_term()});
    }
    if (terms.size() == 1 && terms[0].first == 1) return terms[0].second;
    return GeneratorExpr::sum(std::move(terms));
  }

  GeneratorExpr parse_term() {
    std::vector<GeneratorExpr> factors{parse_factor()};
    while (accept('*')) factors.push_back(parse_factor());
    if (factors.size() == 1) return factors[0];
    return GeneratorExpr::product(std::move(factors));
  }

  GeneratorExpr power(GeneratorExpr base) {
    if (!accept('^')) return base;
    const long k = integer();
    if (k < 1 || k > 16) fail("exponent out of range");
    return GeneratorExpr::product(std::vector<GeneratorExpr>(k, base));
  }

  MarkingSet marking_list(char close) {
    MarkingSet J = 0;
    if (accept(close)) return J;
    do {
      const std::size_t at = pos_;
      const long i = integer();
      if (i < 1 || i > space_.n) fail_at(at, "marking " + std::to_string(i) + " outside 1.." + std::to_string(space_.n));
      J |= marking_bit(static_cast<int>(i));
    } while (accept(','));
    expect(close);
    return J;
  }

  GeneratorExpr checked(GeneratorExpr e, std::size_t at) {
    try {
      e.validate(space_);
    } catch (const std::invalid_argument& err) {
      fail_at(at, err.what());
    }
    return e;
  }

  GeneratorExpr parse_factor() {
    skip();
    const std::size_t at = pos_;
    if (pos_ >= s_.size()) fail("unexpected end of input");
    if (accept('(')) {
      GeneratorExpr inner = parse_class();
      expect(')');
      return power(std::move(inner));
    }
    if (accept('-')) return Rational(-1) * parse_factor();
    if (at_digit()) {
      const long p = integer();
      long q = 1;
      if (accept('/')) {
        q = integer();
        if (q == 0) fail_at(at, "zero denominator");
      }
      Rational r(p, q);
      r.canonicalize();
      return GeneratorExpr(r);
    }
    if (accept_word("psi")) {
      const long i = integer();
      return power(checked(DivisorGen::psi(static_cast<int>(i)), at));
    }
    if (accept_word("om")) {
      const long i = integer();
      return power(checked(DivisorGen::omega(static_cast<int>(i)), at));
    }
    if (accept_word("la")) return power(checked(DivisorGen::lambda(), at));
    if (accept_word("dirr")) return power(checked(DivisorGen::delta_irr(), at));
    if (accept_word("d2psi")) return power(checked(GeneratorExpr(Symbol::delta2psi()), at));
    if (accept_word("gamma")) {
      expect('{');
      if (integer() != 1) fail("only gamma{1:J} is supported");
      expect(':');
      const MarkingSet J = marking_list('}');
      return power(checked(GeneratorExpr(Symbol::gamma(J)), at));
    }
    if (accept_word("d")) {
      const long h = integer();
      if (h > space_.g) fail_at(at, "genus " + std::to_string(h) + " exceeds g");
      if (!accept(':')) return power(aggregate(at, static_cast<int>(h), -1));
      if (accept('{')) {
        const MarkingSet J = marking_list('}');
        try {
          return power(GeneratorExpr(DivisorGen::delta_sep(space_, static_cast<int>(h), J)));
        } catch (const std::invalid_argument& err) {
          fail_at(at, err.what());
        }
      }
      const long j = integer();
      return power(aggregate(at, static_cast<int>(h), static_cast<int>(j)));
    }
    fail("unknown symbol");
  }

  GeneratorExpr aggregate(std::size_t at, int h, int j) {
    GeneratorExpr e;
    try {
      e = j < 0 ? delta_aggregate(space_, h) : delta_aggregate(space_, h, j);
    } catch (const std::invalid_argument& err) {
      fail_at(at, err.what());
    }
    if (e.children().empty()) fail_at(at, "no boundary divisor matches this aggregate");
    return e;
  }

  std::string_view s_;
  MarkedSpace space_;
  std::size_t pos_ = 0;
};

}  // namespace

GeneratorExpr parse_expr(std::string_view text, MarkedSpace space) {
  space.validate();
  return Parser(text, space).parse();
}

}  // namespace tautcalc
