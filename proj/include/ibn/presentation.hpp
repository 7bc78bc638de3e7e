#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ibn/ncpoly.hpp"

namespace ibn {

/// Single-word rule lhs -> rhs. The left side is strictly longer than every
/// word on the right, so monomial rewriting terminates unconditionally.
struct MonomialRule {
  Word lhs;
  NCPoly rhs;
};

/// Sum-contraction rule: whenever every word `L * summands[i] * R` occurs in
/// a polynomial with one common coefficient (for a single context L, R), the
/// whole group is replaced by `coefficient * L * replacement * R`. Matching a
/// partial sum would be unsound and is never done.
struct ContractionRule {
  std::vector<Word> summands;  // unit coefficients, all distinct
  NCPoly replacement;
};

struct PresentationSpec {
  enum class Kind { cuntz, unc, toeplitz2 };
  Kind kind;
  std::uint32_t rows = 0;  // m for unc
  std::uint32_t cols = 0;  // n for cuntz/unc
};

/// "cuntz:<n>" (n >= 2), "unc:<m>,<n>" (n > m >= 1) or "toeplitz2".
std::optional<PresentationSpec> parse_presentation_id(std::string_view id);

/// A finitely presented *-algebra given by generators and a rewrite system
/// split into monomial rules and sum contractions. Rule sets are closed
/// under involution. Immutable after construction.
class Presentation {
public:
  Presentation(std::string id, std::vector<std::string> generator_names,
               std::vector<MonomialRule> monomial_rules,
               std::vector<ContractionRule> contraction_rules);

  const std::string& id() const { return id_; }
  const std::vector<std::string>& generator_names() const { return generator_names_; }
  std::optional<std::uint32_t> generator_id(std::string_view name) const;
  const std::vector<MonomialRule>& monomial_rules() const { return monomial_rules_; }
  const std::vector<ContractionRule>& contraction_rules() const { return contraction_rules_; }

  /// n isometries v1..vn with orthogonal ranges summing to 1:
  /// vi' vj -> delta_ij, sum_i vi vi' -> 1.
  static Presentation cuntz(std::uint32_t n);
  /// Entries u<i>_<j> of an m x n unitary: row products contract to delta_ij
  /// along columns, column products contract to delta_ij along rows.
  static Presentation unc(std::uint32_t m, std::uint32_t n);
  /// Two isometries with orthogonal ranges and no completeness rule:
  /// vi' vj -> delta_ij only, range projections sum strictly below 1.
  static Presentation toeplitz2();

  static Presentation from_id(std::string_view id);  // throws errc::not_found

private:
  std::string id_;
  std::vector<std::string> generator_names_;
  std::map<std::string, std::uint32_t, std::less<>> name_to_id_;
  std::vector<MonomialRule> monomial_rules_;
  std::vector<ContractionRule> contraction_rules_;
};

/// Cap on rule applications per normalize call; far above what the witness
/// corpus needs, low enough to stop runaway user-supplied rule systems.
inline constexpr std::uint64_t kDefaultStepBound = 10'000;

/// Deterministic normal form: monomial rules leftmost-innermost to fixpoint,
/// then alternate single contraction steps with monomial passes until no
/// rule applies. nullopt when the step budget runs out (Inconclusive). The
/// result is a normal form, not a decision procedure for equality.
std::optional<NCPoly> normalize(const NCPoly& p, const Presentation& pres,
                                std::uint64_t step_bound = kDefaultStepBound);

}  // namespace ibn
