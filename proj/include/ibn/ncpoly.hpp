#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "ibn/rational.hpp"

namespace ibn {

/// One generator occurrence, possibly adjoined.
struct Letter {
  std::uint32_t generator = 0;
  bool adjoint = false;

  friend bool operator==(const Letter&, const Letter&) = default;
  friend auto operator<=>(const Letter&, const Letter&) = default;
};

/// Product of letters; the empty word is the unit 1.
using Word = std::vector<Letter>;

/// Reverse the word and flip every adjoint flag.
Word involute(const Word& w);

/// Degree-lexicographic order: shorter words first, ties broken letterwise.
/// Gives polynomials a canonical term order for equality and printing.
struct WordOrder {
  bool operator()(const Word& a, const Word& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

/// Finitely supported map Word -> nonzero rational coefficient.
class NCPoly {
public:
  using TermMap = std::map<Word, Rational, WordOrder>;

  NCPoly() = default;
  static NCPoly zero() { return NCPoly(); }
  static NCPoly unit() { return monomial(Word{}); }
  static NCPoly monomial(Word w, Rational coefficient = 1);

  bool is_zero() const { return terms_.empty(); }
  bool is_unit() const;
  std::size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  /// Merge `coefficient * w` into the polynomial, dropping cancelled terms.
  void add_term(const Word& w, const Rational& coefficient);

  NCPoly& operator+=(const NCPoly& o);
  NCPoly& operator-=(const NCPoly& o);
  NCPoly operator-() const;
  NCPoly& operator*=(const Rational& c);

  friend NCPoly operator+(NCPoly a, const NCPoly& b) { return a += b; }
  friend NCPoly operator-(NCPoly a, const NCPoly& b) { return a -= b; }
  friend NCPoly operator*(const NCPoly& a, const NCPoly& b);
  friend NCPoly operator*(const Rational& c, NCPoly p) { return p *= c; }
  friend bool operator==(const NCPoly&, const NCPoly&) = default;

private:
  TermMap terms_;
};

NCPoly involute(const NCPoly& p);

}  // namespace ibn
