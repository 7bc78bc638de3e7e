#include "ibn/dsl.hpp"

#include <cctype>
#include <cstdint>

#include "ibn/errors.hpp"

namespace ibn {

namespace {

class DslParser {
public:
  explicit DslParser(std::string_view src) : src_(src) {}

  ExprPtr parse() {
    ExprPtr e = parse_expr();
    skip_ws();
    if (pos_ != src_.size()) {
      fail({"end of input"}, "trailing input after expression");
    }
    return e;
  }

private:
  [[noreturn]] void fail(std::vector<std::string> expected, std::string message) {
    throw SyntaxError(errc::parse_error, pos_, std::move(expected),
                      message + " at offset " + std::to_string(pos_));
  }

  [[noreturn]] void fail_arity(std::string message) {
    throw SyntaxError(errc::arity_error, pos_, {}, message);
  }

  void skip_ws() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  void expect(char c) {
    skip_ws();
    if (pos_ >= src_.size() || src_[pos_] != c) {
      fail({std::string(1, c)}, std::string("expected '") + c + "'");
    }
    ++pos_;
  }

  bool try_consume(char c) {
    skip_ws();
    if (pos_ < src_.size() && src_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  std::string read_word() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < src_.size() && (std::isalnum(static_cast<unsigned char>(src_[pos_])) ||
                                  src_[pos_] == '_')) {
      ++pos_;
    }
    if (start == pos_) fail({"expression"}, "expected an expression");
    return std::string(src_.substr(start, pos_ - start));
  }

  std::uint64_t read_positive_int() {
    skip_ws();
    std::size_t start = pos_;
    if (pos_ >= src_.size() || !std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
      fail({"nonzero integer"}, "expected an integer");
    }
    std::uint64_t v = 0;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
      const std::uint64_t digit = static_cast<std::uint64_t>(src_[pos_] - '0');
      if (v > (UINT64_MAX - digit) / 10) {
        pos_ = start;
        fail({"nonzero integer"}, "integer literal too large");
      }
      v = v * 10 + digit;
      ++pos_;
    }
    if (v == 0) {
      pos_ = start;
      fail({"nonzero integer"}, "integer must be nonzero");
    }
    return v;
  }

  ExprPtr parse_expr() {
    skip_ws();
    const std::size_t word_start = pos_;
    std::string word = read_word();

    if (word == "oplus" || word == "tensor") {
      expect('(');
      ExprPtr left = parse_expr();
      expect(',');
      ExprPtr right = parse_expr();
      expect(')');
      return word == "oplus" ? make_direct_sum(std::move(left), std::move(right))
                             : make_tensor(std::move(left), std::move(right));
    }
    if (word == "quotient" || word == "hom" || word == "ext") {
      expect('(');
      ExprPtr inner = parse_expr();
      expect(')');
      if (word == "quotient") return make_quotient(std::move(inner));
      if (word == "hom") return make_hom_image(std::move(inner));
      return make_extension_of(std::move(inner));
    }
    if (word == "limit") {
      expect('(');
      std::vector<ExprPtr> components;
      components.push_back(parse_expr());
      while (try_consume(',')) components.push_back(parse_expr());
      expect(')');
      return make_inductive_limit(std::move(components));
    }
    if (word == "corner_infinite_simple") return make_corner_of_infinite_simple();
    if (word == "ibn") return make_ibn_leaf();
    if (word == "Oinf") return make_leaf("Oinf");
    if (word == "Toeplitz") return make_leaf("Toeplitz");
    if (word == "T2") return make_leaf("T2");
    if (word == "BH") return make_leaf("BH");
    if (word == "Commutative") return make_leaf("Commutative");

    if (word == "O") {
      expect('(');
      std::uint64_t n = read_positive_int();
      expect(')');
      if (n < 2) fail_arity("O(n) requires n >= 2");
      return make_leaf("O:" + std::to_string(n));
    }
    if (word == "Unc") {
      expect('(');
      std::uint64_t m = read_positive_int();
      expect(',');
      std::uint64_t n = read_positive_int();
      expect(')');
      if (n <= m) fail_arity("Unc(m,n) requires n > m");
      return make_leaf("Unc:" + std::to_string(m) + "," + std::to_string(n));
    }
    if (word == "Rordam") {
      expect('(');
      std::uint64_t n = read_positive_int();
      expect(')');
      return make_leaf("Rordam:" + std::to_string(n));
    }
    if (word == "type") {
      expect('(');
      std::uint64_t n = read_positive_int();
      expect(',');
      std::uint64_t k = read_positive_int();
      expect(')');
      return make_exact(BasisType(n, k));
    }

    pos_ = word_start;
    fail({"oplus", "tensor", "quotient", "hom", "ext", "limit", "corner_infinite_simple",
          "atom"},
         "unknown construction or atom '" + word + "'");
  }

  std::string_view src_;
  std::size_t pos_ = 0;
};

}  // namespace

ExprPtr parse_dsl(std::string_view source) { return DslParser(source).parse(); }

}  // namespace ibn
