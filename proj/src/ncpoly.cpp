#include "ibn/ncpoly.hpp"

#include <algorithm>

namespace ibn {

Word involute(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    out.push_back(Letter{it->generator, !it->adjoint});
  }
  return out;
}

NCPoly NCPoly::monomial(Word w, Rational coefficient) {
  NCPoly p;
  p.add_term(w, coefficient);
  return p;
}

bool NCPoly::is_unit() const {
  return terms_.size() == 1 && terms_.begin()->first.empty() &&
         terms_.begin()->second.is_one();
}

void NCPoly::add_term(const Word& w, const Rational& coefficient) {
  if (coefficient.is_zero()) return;
  auto [it, inserted] = terms_.emplace(w, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

NCPoly& NCPoly::operator+=(const NCPoly& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

NCPoly& NCPoly::operator-=(const NCPoly& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, -c);
  return *this;
}

NCPoly NCPoly::operator-() const {
  NCPoly out;
  for (const auto& [w, c] : terms_) out.terms_.emplace(w, -c);
  return out;
}

NCPoly& NCPoly::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, coeff] : terms_) coeff *= c;
  return *this;
}

NCPoly operator*(const NCPoly& a, const NCPoly& b) {
  NCPoly out;
  for (const auto& [wa, ca] : a.terms_) {
    for (const auto& [wb, cb] : b.terms_) {
      Word w;
      w.reserve(wa.size() + wb.size());
      w.insert(w.end(), wa.begin(), wa.end());
      w.insert(w.end(), wb.begin(), wb.end());
      out.add_term(w, ca * cb);
    }
  }
  return out;
}

NCPoly involute(const NCPoly& p) {
  NCPoly out;
  for (const auto& [w, c] : p.terms()) out.add_term(involute(w), c.conjugate());
  return out;
}

}  // namespace ibn
