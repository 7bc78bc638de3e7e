#include "ibn/poly_text.hpp"

#include <cctype>
#include <cstdint>

#include "ibn/errors.hpp"

namespace ibn {

std::string to_text(const NCPoly& p, const Presentation& pres) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [word, coeff] : p.terms()) {
    const bool negative = coeff.is_negative();
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    const Rational magnitude = abs(coeff);
    std::string word_text;
    for (const Letter& letter : word) {
      if (!word_text.empty()) word_text += " ";
      word_text += pres.generator_names().at(letter.generator);
      if (letter.adjoint) word_text += "'";
    }
    if (word.empty()) {
      out += magnitude.to_string();
    } else if (magnitude.is_one()) {
      out += word_text;
    } else {
      out += magnitude.to_string() + " " + word_text;
    }
  }
  return out;
}

namespace {

struct Token {
  enum class Kind { plus, minus, slash, tick, integer, name, end };
  Kind kind;
  std::size_t offset;
  std::uint64_t value = 0;  // integer
  std::string text;         // name
};

class PolyLexer {
public:
  explicit PolyLexer(std::string_view text) : text_(text) { advance(); }

  const Token& peek() const { return current_; }
  Token take() {
    Token t = current_;
    advance();
    return t;
  }

private:
  void advance() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    current_.offset = pos_;
    current_.text.clear();
    current_.value = 0;
    if (pos_ >= text_.size()) {
      current_.kind = Token::Kind::end;
      return;
    }
    const char c = text_[pos_];
    switch (c) {
      case '+': current_.kind = Token::Kind::plus; ++pos_; return;
      case '-': current_.kind = Token::Kind::minus; ++pos_; return;
      case '/': current_.kind = Token::Kind::slash; ++pos_; return;
      case '\'': current_.kind = Token::Kind::tick; ++pos_; return;
      default: break;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::uint64_t v = 0;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        const std::uint64_t digit = static_cast<std::uint64_t>(text_[pos_] - '0');
        if (v > (UINT64_MAX - digit) / 10) {
          throw SyntaxError(errc::parse_error, current_.offset, {"integer"},
                            "integer literal too large");
        }
        v = v * 10 + digit;
        ++pos_;
      }
      current_.kind = Token::Kind::integer;
      current_.value = v;
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      // Generator names: one letter, digits, optionally "_<digits>".
      std::size_t start = pos_;
      ++pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (pos_ < text_.size() && text_[pos_] == '_') {
        ++pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      }
      current_.kind = Token::Kind::name;
      current_.text = std::string(text_.substr(start, pos_ - start));
      return;
    }
    throw SyntaxError(errc::parse_error, pos_, {"term"},
                      std::string("unexpected character '") + c + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  Token current_;
};

std::int64_t to_signed(std::uint64_t v, std::size_t offset) {
  if (v > static_cast<std::uint64_t>(INT64_MAX)) {
    throw SyntaxError(errc::parse_error, offset, {"integer"}, "coefficient out of range");
  }
  return static_cast<std::int64_t>(v);
}

// Consumes trailing apostrophes; an even count cancels out.
bool take_adjoint_flag(PolyLexer& lex) {
  bool adjoint = false;
  while (lex.peek().kind == Token::Kind::tick) {
    lex.take();
    adjoint = !adjoint;
  }
  return adjoint;
}

// term := coefficient factor* | factor+ ; factor := generator tick* | "1" tick*
NCPoly parse_term(PolyLexer& lex, const Presentation& pres) {
  Rational coefficient = 1;
  bool saw_anything = false;

  if (lex.peek().kind == Token::Kind::integer) {
    Token num = lex.take();
    if (lex.peek().kind == Token::Kind::slash) {
      lex.take();
      if (lex.peek().kind != Token::Kind::integer) {
        throw SyntaxError(errc::parse_error, lex.peek().offset, {"integer"},
                          "expected denominator after '/'");
      }
      Token den = lex.take();
      if (den.value == 0) {
        throw SyntaxError(errc::parse_error, den.offset, {"nonzero integer"},
                          "zero denominator");
      }
      coefficient = Rational(to_signed(num.value, num.offset), to_signed(den.value, den.offset));
    } else {
      coefficient = Rational(to_signed(num.value, num.offset));
      take_adjoint_flag(lex);  // the unit is self-adjoint; ticks after "1" are no-ops
    }
    saw_anything = true;
  }

  Word word;
  while (true) {
    const Token& t = lex.peek();
    if (t.kind == Token::Kind::name) {
      Token name = lex.take();
      auto id = pres.generator_id(name.text);
      if (!id) {
        throw SyntaxError(errc::parse_error, name.offset, {"generator"},
                          "unknown generator '" + name.text + "' for presentation " + pres.id());
      }
      word.push_back(Letter{*id, take_adjoint_flag(lex)});
      saw_anything = true;
      continue;
    }
    if (t.kind == Token::Kind::integer && t.value == 1) {
      lex.take();  // unit factor
      take_adjoint_flag(lex);
      saw_anything = true;
      continue;
    }
    break;
  }

  if (!saw_anything) {
    throw SyntaxError(errc::parse_error, lex.peek().offset, {"coefficient", "generator", "1"},
                      "expected a term");
  }
  return NCPoly::monomial(std::move(word), coefficient);
}

}  // namespace

NCPoly parse_poly(std::string_view text, const Presentation& pres) {
  PolyLexer lex(text);
  NCPoly result;
  bool negate = false;
  if (lex.peek().kind == Token::Kind::minus) {
    lex.take();
    negate = true;
  } else if (lex.peek().kind == Token::Kind::plus) {
    lex.take();
  }
  while (true) {
    NCPoly term = parse_term(lex, pres);
    if (negate) term = -term;
    result += term;
    const Token& t = lex.peek();
    if (t.kind == Token::Kind::end) break;
    if (t.kind == Token::Kind::plus) {
      negate = false;
      lex.take();
    } else if (t.kind == Token::Kind::minus) {
      negate = true;
      lex.take();
    } else {
      throw SyntaxError(errc::parse_error, t.offset, {"+", "-", "end of input"},
                        "expected '+' or '-' between terms");
    }
  }
  return result;
}

}  // namespace ibn
