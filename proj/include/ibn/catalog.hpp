#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ibn/knowledge.hpp"

namespace ibn {

enum class Tri { yes, no, unknown };
std::string to_string(Tri t);

/// Additive order of the unit class in K0: a positive integer, infinite, or
/// not recorded. Infinite order is equivalent to having IBN; a finite order
/// equals the period K of the basis type.
class UnitOrder {
public:
  enum class Kind { finite, infinite, unknown };

  static UnitOrder finite(std::uint64_t v);
  static UnitOrder infinite() { return UnitOrder(Kind::infinite, 0); }
  static UnitOrder not_recorded() { return UnitOrder(Kind::unknown, 0); }

  Kind kind() const { return kind_; }
  std::uint64_t value() const { return value_; }  // pre: kind() == finite

  friend bool operator==(const UnitOrder&, const UnitOrder&) = default;

private:
  UnitOrder(Kind k, std::uint64_t v) : kind_(k), value_(v) {}
  Kind kind_;
  std::uint64_t value_;
};

std::string to_string(const UnitOrder& o);

/// Provenance notes carry a level prefix: "core:" for facts from the basis
/// type theory itself, "standard:" for classical facts imported from outside
/// it. The test suite separates the two.
struct CatalogEntry {
  std::string id;
  std::string display_name;
  UnitOrder k0_unit_order = UnitOrder::not_recorded();
  bool ibn = false;
  Tri ibn1 = Tri::unknown;
  Tri ibn2_stably_finite = Tri::unknown;
  Knowledge knowledge;
  std::optional<std::string> presentation_id;
  std::string provenance_note;
};

struct Violation {
  std::string entry_id;
  std::string rule;  // stable identifier of the violated rule, used as anchor
  std::string message;
};

class Catalog {
public:
  /// The shipped catalog: fixed entries plus exemplars of the parametric
  /// families (the families themselves are available through lookup for any
  /// valid parameters).
  static Catalog builtin();

  /// Resolves fixed ids and materializes family ids ("O:n" for n >= 2,
  /// "Unc:m,n" for n > m >= 1, "Rordam:N" for N >= 1) on demand.
  std::optional<CatalogEntry> lookup(std::string_view id) const;

  const std::vector<CatalogEntry>& list() const { return entries_; }

  /// Adds a user entry; rejects ids that already resolve (fixed or family).
  void add_entry(CatalogEntry entry);

private:
  Catalog() = default;
  std::vector<CatalogEntry> entries_;
  std::map<std::string, std::size_t, std::less<>> index_;
};

std::vector<Violation> validate_entry(const CatalogEntry& entry);
std::vector<Violation> validate_catalog(const Catalog& catalog);

/// Family constructors (also used by lookup).
CatalogEntry make_cuntz_entry(std::uint64_t n);                      // n >= 2
CatalogEntry make_unc_entry(std::uint64_t m, std::uint64_t n);       // n > m >= 1
CatalogEntry make_rordam_entry(std::uint64_t n);                     // n >= 1

}  // namespace ibn
