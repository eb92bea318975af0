#include "abelroot/cli/parse.hpp"

#include <cctype>
#include <map>

namespace abelroot {

ParseError::ParseError(std::size_t position, const std::string& what)
    : Error(ErrorCode::Syntax, "at position " + std::to_string(position) + ": " + what), position_(position) {}

namespace {

class Parser {
 public:
  Parser(std::string_view text, std::string_view letters) : text_(text), letters_(letters) {}

  std::map<int, Rat> terms() {
    std::map<int, Rat> out;
    skip();
    if (done()) throw ParseError(pos_, "empty polynomial");
    bool first = true;
    while (!done()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        advance();
      } else if (!first) {
        throw ParseError(pos_, std::string("expected '+' or '-', found '") + peek() + "'");
      }
      auto [coeff, power] = term();
      out[power] = out[power] + (sign < 0 ? -coeff : coeff);
      first = false;
    }
    return out;
  }

 private:
  std::pair<Rat, int> term() {
    skip();
    Rat coeff(1);
    bool have_coeff = false;
    if (!done() && std::isdigit(static_cast<unsigned char>(peek()))) {
      coeff = rational();
      have_coeff = true;
      skip();
      if (!done() && peek() == '*') {
        advance();
        if (done() || !is_var(peek())) throw ParseError(pos_, "expected a variable after '*'");
      }
    }
    if (!done() && is_var(peek())) {
      advance();
      int power = 1;
      if (!done() && peek() == '^') {
        advance();
        if (done() || !std::isdigit(static_cast<unsigned char>(peek())))
          throw ParseError(pos_, "expected an exponent after '^'");
        power = integer();
      }
      return {coeff, power};
    }
    if (!have_coeff) {
      if (done()) throw ParseError(pos_, "unexpected end of input");
      throw ParseError(pos_, std::string("unexpected character '") + peek() + "'");
    }
    return {coeff, 0};
  }

  Rat rational() {
    const std::size_t start = pos_;
    digits();
    skip();
    if (!done() && peek() == '/') {
      advance();
      if (done() || !std::isdigit(static_cast<unsigned char>(peek())))
        throw ParseError(pos_, "expected a denominator after '/'");
      digits();
    }
    std::string lit;
    for (char c : text_.substr(start, pos_ - start))
      if (!std::isspace(static_cast<unsigned char>(c))) lit.push_back(c);
    try {
      return Rat::parse(lit);
    } catch (const Error& e) {
      throw ParseError(start, e.what());
    }
  }

  int integer() {
    const std::size_t start = pos_;
    digits();
    const auto s = text_.substr(start, pos_ - start);
    skip();
    if (s.size() > 6) throw ParseError(start, "exponent too large");
    return std::stoi(std::string(s));
  }

  void digits() {
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool is_var(char c) const { return letters_.find(c) != std::string_view::npos; }
  char peek() const { return text_[pos_]; }
  void advance() {
    ++pos_;
    skip();
  }
  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool done() const { return pos_ >= text_.size(); }

  std::string_view text_;
  std::string_view letters_;
  std::size_t pos_ = 0;
};

}  // namespace

UPoly parse_polynomial(std::string_view text, Var var, std::string_view letters) {
  const auto terms = Parser(text, letters).terms();
  std::vector<Rat> cs(static_cast<std::size_t>(terms.rbegin()->first) + 1, Rat(0));
  for (const auto& [k, c] : terms) cs[static_cast<std::size_t>(k)] = c;
  return UPoly(var, std::move(cs));
}

ProblemSpec parse_problem(std::string_view text) { return ProblemSpec(parse_polynomial(text, Var::X, "x")); }

UPoly parse_weight(std::string_view text) { return parse_polynomial(text, Var::Q, "tq"); }

}  // namespace abelroot
