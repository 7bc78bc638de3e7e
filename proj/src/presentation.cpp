#include "ibn/presentation.hpp"

#include <algorithm>
#include <charconv>
#include <set>

#include "ibn/errors.hpp"

namespace ibn {

namespace {

std::optional<std::uint32_t> parse_u32(std::string_view s) {
  if (s.empty()) return std::nullopt;
  std::uint32_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

std::size_t max_word_length(const NCPoly& p) {
  std::size_t n = 0;
  for (const auto& [w, c] : p.terms()) n = std::max(n, w.size());
  return n;
}

}  // namespace

std::optional<PresentationSpec> parse_presentation_id(std::string_view id) {
  if (id == "toeplitz2") {
    return PresentationSpec{PresentationSpec::Kind::toeplitz2, 1, 2};
  }
  if (id.rfind("cuntz:", 0) == 0) {
    auto n = parse_u32(id.substr(6));
    if (n && *n >= 2) return PresentationSpec{PresentationSpec::Kind::cuntz, 1, *n};
    return std::nullopt;
  }
  if (id.rfind("unc:", 0) == 0) {
    std::string_view rest = id.substr(4);
    auto comma = rest.find(',');
    if (comma == std::string_view::npos) return std::nullopt;
    auto m = parse_u32(rest.substr(0, comma));
    auto n = parse_u32(rest.substr(comma + 1));
    if (m && n && *m >= 1 && *n > *m) return PresentationSpec{PresentationSpec::Kind::unc, *m, *n};
    return std::nullopt;
  }
  return std::nullopt;
}

Presentation::Presentation(std::string id, std::vector<std::string> generator_names,
                           std::vector<MonomialRule> monomial_rules,
                           std::vector<ContractionRule> contraction_rules)
    : id_(std::move(id)),
      generator_names_(std::move(generator_names)),
      monomial_rules_(std::move(monomial_rules)),
      contraction_rules_(std::move(contraction_rules)) {
  for (std::uint32_t i = 0; i < generator_names_.size(); ++i) {
    if (!name_to_id_.emplace(generator_names_[i], i).second) {
      throw Error(errc::invalid_argument, "duplicate generator name");
    }
  }
  for (const auto& rule : monomial_rules_) {
    if (rule.lhs.size() <= max_word_length(rule.rhs)) {
      throw Error(errc::invalid_argument, "monomial rule must be strictly length-decreasing");
    }
  }
  for (const auto& rule : contraction_rules_) {
    if (rule.summands.empty()) {
      throw Error(errc::invalid_argument, "contraction rule needs at least one summand");
    }
    std::set<Word> distinct(rule.summands.begin(), rule.summands.end());
    if (distinct.size() != rule.summands.size()) {
      throw Error(errc::invalid_argument, "contraction summands must be distinct");
    }
  }
}

std::optional<std::uint32_t> Presentation::generator_id(std::string_view name) const {
  auto it = name_to_id_.find(name);
  if (it == name_to_id_.end()) return std::nullopt;
  return it->second;
}

Presentation Presentation::cuntz(std::uint32_t n) {
  if (n < 2) throw Error(errc::invalid_argument, "Cuntz presentation needs n >= 2");
  std::vector<std::string> names;
  for (std::uint32_t i = 1; i <= n; ++i) names.push_back("v" + std::to_string(i));

  std::vector<MonomialRule> monomial;
  for (std::uint32_t i = 0; i < n; ++i) {
    for (std::uint32_t j = 0; j < n; ++j) {
      Word lhs{Letter{i, true}, Letter{j, false}};
      monomial.push_back({lhs, i == j ? NCPoly::unit() : NCPoly::zero()});
    }
  }
  std::vector<Word> range_projections;
  for (std::uint32_t i = 0; i < n; ++i) {
    range_projections.push_back(Word{Letter{i, false}, Letter{i, true}});
  }
  std::vector<ContractionRule> contraction{{range_projections, NCPoly::unit()}};
  return Presentation("cuntz:" + std::to_string(n), std::move(names), std::move(monomial),
                      std::move(contraction));
}

Presentation Presentation::unc(std::uint32_t m, std::uint32_t n) {
  if (m < 1 || n <= m) {
    throw Error(errc::invalid_argument, "rectangular unitary presentation needs n > m >= 1");
  }
  std::vector<std::string> names;
  names.reserve(static_cast<std::size_t>(m) * n);
  for (std::uint32_t i = 1; i <= m; ++i) {
    for (std::uint32_t j = 1; j <= n; ++j) {
      names.push_back("u" + std::to_string(i) + "_" + std::to_string(j));
    }
  }
  auto gen = [n](std::uint32_t i, std::uint32_t j) { return i * n + j; };  // 0-based

  std::vector<ContractionRule> contraction;
  // U U* = I_m: sum_k u_ik u_jk* = delta_ij.
  for (std::uint32_t i = 0; i < m; ++i) {
    for (std::uint32_t j = 0; j < m; ++j) {
      std::vector<Word> summands;
      for (std::uint32_t k = 0; k < n; ++k) {
        summands.push_back(Word{Letter{gen(i, k), false}, Letter{gen(j, k), true}});
      }
      contraction.push_back({std::move(summands), i == j ? NCPoly::unit() : NCPoly::zero()});
    }
  }
  // U* U = I_n: sum_k u_ki* u_kj = delta_ij.
  for (std::uint32_t i = 0; i < n; ++i) {
    for (std::uint32_t j = 0; j < n; ++j) {
      std::vector<Word> summands;
      for (std::uint32_t k = 0; k < m; ++k) {
        summands.push_back(Word{Letter{gen(k, i), true}, Letter{gen(k, j), false}});
      }
      contraction.push_back({std::move(summands), i == j ? NCPoly::unit() : NCPoly::zero()});
    }
  }
  return Presentation("unc:" + std::to_string(m) + "," + std::to_string(n), std::move(names),
                      {}, std::move(contraction));
}

Presentation Presentation::toeplitz2() {
  std::vector<std::string> names{"v1", "v2"};
  std::vector<MonomialRule> monomial;
  for (std::uint32_t i = 0; i < 2; ++i) {
    for (std::uint32_t j = 0; j < 2; ++j) {
      Word lhs{Letter{i, true}, Letter{j, false}};
      monomial.push_back({lhs, i == j ? NCPoly::unit() : NCPoly::zero()});
    }
  }
  // No completeness rule: v1 v1' + v2 v2' stays strictly below 1.
  return Presentation("toeplitz2", std::move(names), std::move(monomial), {});
}

Presentation Presentation::from_id(std::string_view id) {
  auto spec = parse_presentation_id(id);
  if (!spec) {
    throw Error(errc::not_found, "unknown presentation id '" + std::string(id) + "'");
  }
  switch (spec->kind) {
    case PresentationSpec::Kind::cuntz: return cuntz(spec->cols);
    case PresentationSpec::Kind::unc: return unc(spec->rows, spec->cols);
    case PresentationSpec::Kind::toeplitz2: return toeplitz2();
  }
  throw Error(errc::not_found, "unknown presentation id");
}

namespace {

struct StepBudget {
  std::uint64_t remaining;
  bool exhausted = false;

  bool take() {
    if (remaining == 0) {
      exhausted = true;
      return false;
    }
    --remaining;
    return true;
  }
};

bool match_at(const Word& w, std::size_t pos, const Word& pattern) {
  if (pattern.size() > w.size() - pos) return false;
  return std::equal(pattern.begin(), pattern.end(), w.begin() + pos);
}

Word splice(const Word& w, std::size_t pos, std::size_t len, const Word& middle) {
  Word out;
  out.reserve(w.size() - len + middle.size());
  out.insert(out.end(), w.begin(), w.begin() + pos);
  out.insert(out.end(), middle.begin(), middle.end());
  out.insert(out.end(), w.begin() + pos + len, w.end());
  return out;
}

// Rewrites one word to its monomial normal form, accumulating
// coefficient * nf(w) into `out`. Scans positions left to right and rules in
// index order; each application strictly shortens the word, so the recursion
// depth is bounded by the word length. Returns false when the budget is gone.
bool reduce_word(const Word& w, const Rational& coefficient, const Presentation& pres,
                 StepBudget& budget, NCPoly& out) {
  for (std::size_t pos = 0; pos < w.size(); ++pos) {
    for (const MonomialRule& rule : pres.monomial_rules()) {
      if (!match_at(w, pos, rule.lhs)) continue;
      if (!budget.take()) return false;
      for (const auto& [rhs_word, rhs_coeff] : rule.rhs.terms()) {
        if (!reduce_word(splice(w, pos, rule.lhs.size(), rhs_word), coefficient * rhs_coeff,
                         pres, budget, out)) {
          return false;
        }
      }
      return true;  // rule.rhs may be zero: the term just vanishes
    }
  }
  out.add_term(w, coefficient);
  return true;
}

std::optional<NCPoly> monomial_pass(const NCPoly& p, const Presentation& pres,
                                    StepBudget& budget) {
  NCPoly out;
  for (const auto& [w, c] : p.terms()) {
    if (!reduce_word(w, c, pres, budget, out)) return std::nullopt;
  }
  return out;
}

// Applies the first contraction instance found in scan order (rule index,
// canonical term order, position, summand index). A match needs every
// expanded summand present with the anchor term's exact coefficient.
bool apply_one_contraction(NCPoly& p, const Presentation& pres, StepBudget& budget) {
  for (const ContractionRule& rule : pres.contraction_rules()) {
    for (const auto& [w, c] : p.terms()) {
      for (std::size_t pos = 0; pos <= w.size(); ++pos) {
        for (const Word& summand : rule.summands) {
          if (!match_at(w, pos, summand)) continue;
          // Candidate context: L = w[0, pos), R = w[pos + |summand|, end).
          std::vector<Word> expanded;
          expanded.reserve(rule.summands.size());
          bool all_present = true;
          for (const Word& s : rule.summands) {
            Word t = splice(w, pos, summand.size(), s);
            auto it = p.terms().find(t);
            if (it == p.terms().end() || !(it->second == c)) {
              all_present = false;
              break;
            }
            expanded.push_back(std::move(t));
          }
          if (!all_present) continue;
          if (!budget.take()) return false;
          // Mutation erases the anchor term, so detach from the map first.
          const Word anchor = w;
          const std::size_t cut = summand.size();
          const Rational coefficient = c;
          for (const Word& t : expanded) p.add_term(t, -coefficient);
          for (const auto& [r_word, r_coeff] : rule.replacement.terms()) {
            p.add_term(splice(anchor, pos, cut, r_word), coefficient * r_coeff);
          }
          return true;
        }
      }
    }
  }
  return false;
}

}  // namespace

std::optional<NCPoly> normalize(const NCPoly& p, const Presentation& pres,
                                std::uint64_t step_bound) {
  StepBudget budget{step_bound};
  auto current = monomial_pass(p, pres, budget);
  if (!current) return std::nullopt;
  while (true) {
    bool applied = apply_one_contraction(*current, pres, budget);
    if (budget.exhausted) return std::nullopt;
    if (!applied) return current;
    current = monomial_pass(*current, pres, budget);
    if (!current) return std::nullopt;
  }
}

}  // namespace ibn
