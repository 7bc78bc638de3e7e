#include "ibn/catalog.hpp"

#include <charconv>

#include "ibn/errors.hpp"
#include "ibn/presentation.hpp"

namespace ibn {

std::string to_string(Tri t) {
  switch (t) {
    case Tri::yes: return "yes";
    case Tri::no: return "no";
    case Tri::unknown: return "unknown";
  }
  return "unknown";
}

UnitOrder UnitOrder::finite(std::uint64_t v) {
  if (v < 1) throw Error(errc::invalid_argument, "finite unit order must be positive");
  return UnitOrder(Kind::finite, v);
}

std::string to_string(const UnitOrder& o) {
  switch (o.kind()) {
    case UnitOrder::Kind::finite: return std::to_string(o.value());
    case UnitOrder::Kind::infinite: return "Infinite";
    case UnitOrder::Kind::unknown: return "Unknown";
  }
  return "Unknown";
}

namespace {

std::optional<std::uint64_t> parse_u64(std::string_view s) {
  if (s.empty()) return std::nullopt;
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

CatalogEntry make_commutative_entry() {
  CatalogEntry e;
  e.id = "Commutative";
  e.display_name = "commutative unital C*-algebra";
  e.k0_unit_order = UnitOrder::infinite();
  e.ibn = true;
  e.ibn1 = Tri::yes;
  e.ibn2_stably_finite = Tri::yes;
  e.knowledge = Knowledge::known_ibn();
  e.provenance_note =
      "core: matrices over a commutative algebra are invertible only when square. "
      "standard: unital commutative algebras are stably finite.";
  return e;
}

CatalogEntry make_stably_finite_entry() {
  CatalogEntry e;
  e.id = "StablyFinite";
  e.display_name = "stably finite unital C*-algebra (generic)";
  e.k0_unit_order = UnitOrder::infinite();
  e.ibn = true;
  e.ibn1 = Tri::yes;
  e.ibn2_stably_finite = Tri::yes;
  e.knowledge = Knowledge::known_ibn();
  e.provenance_note =
      "core: stable finiteness is equivalent to the strongest basis property, and the unit "
      "class is an order unit of infinite order in the totally ordered K0.";
  return e;
}

CatalogEntry make_bh_entry() {
  CatalogEntry e;
  e.id = "BH";
  e.display_name = "bounded operators on an infinite-dimensional Hilbert space";
  e.k0_unit_order = UnitOrder::finite(1);
  e.ibn = false;
  e.ibn1 = Tri::no;
  e.ibn2_stably_finite = Tri::no;
  e.knowledge = Knowledge::exact(BasisType(1, 1));
  e.provenance_note = "core: K0(B(H)) = 0, so the unit class has order 1.";
  return e;
}

CatalogEntry make_toeplitz_entry() {
  CatalogEntry e;
  e.id = "Toeplitz";
  e.display_name = "Toeplitz algebra";
  e.k0_unit_order = UnitOrder::infinite();
  e.ibn = true;
  e.ibn1 = Tri::unknown;
  e.ibn2_stably_finite = Tri::no;
  e.knowledge = Knowledge::known_ibn();
  e.provenance_note =
      "core: unital extension of the commutative algebra C(T), and unital extensions "
      "preserve IBN; contains a proper isometry, so not stably finite.";
  return e;
}

CatalogEntry make_t2_entry() {
  CatalogEntry e;
  e.id = "T2";
  e.display_name = "universal algebra of two isometries with orthogonal ranges summing below 1";
  e.k0_unit_order = UnitOrder::infinite();
  e.ibn = true;
  e.ibn1 = Tri::no;
  e.ibn2_stably_finite = Tri::no;
  e.knowledge = Knowledge::known_ibn();
  e.presentation_id = "toeplitz2";
  e.provenance_note =
      "core: K0(T2) = Z generated by the unit class, so IBN holds; the row [v1 v2] is a "
      "proper matrix isometry, which defeats IBN1 and stable finiteness.";
  return e;
}

CatalogEntry make_oinf_entry() {
  CatalogEntry e;
  e.id = "Oinf";
  e.display_name = "Cuntz algebra O_infinity";
  e.k0_unit_order = UnitOrder::infinite();
  e.ibn = true;
  e.ibn1 = Tri::no;
  e.ibn2_stably_finite = Tri::no;
  e.knowledge = Knowledge::known_ibn();
  e.provenance_note =
      "core: K0 = Z generated by the unit class; contains proper isometries, so neither "
      "commutative nor stably finite. standard: two of its generating isometries have "
      "orthogonal ranges summing below 1, defeating IBN1 by the same row-isometry "
      "mechanism as T2.";
  return e;
}

}  // namespace

CatalogEntry make_cuntz_entry(std::uint64_t n) {
  if (n < 2) throw Error(errc::invalid_argument, "Cuntz index must be at least 2");
  CatalogEntry e;
  e.id = "O:" + std::to_string(n);
  e.display_name = "Cuntz algebra O_" + std::to_string(n);
  e.k0_unit_order = UnitOrder::finite(n - 1);
  e.ibn = false;
  e.ibn1 = Tri::no;
  e.ibn2_stably_finite = Tri::no;
  e.knowledge = Knowledge::exact(BasisType(1, n - 1));
  e.presentation_id = "cuntz:" + std::to_string(n);
  e.provenance_note =
      "core: K0(O_n) = Z/(n-1) generated by the unit class; the row of generating "
      "isometries is a 1 x n unitary, so the type is (1, n-1).";
  return e;
}

CatalogEntry make_unc_entry(std::uint64_t m, std::uint64_t n) {
  if (m < 1 || n <= m) {
    throw Error(errc::invalid_argument, "rectangular unitary algebra needs n > m >= 1");
  }
  CatalogEntry e;
  e.id = "Unc:" + std::to_string(m) + "," + std::to_string(n);
  e.display_name =
      "universal " + std::to_string(m) + " x " + std::to_string(n) + " rectangular unitary algebra";
  e.k0_unit_order = UnitOrder::finite(n - m);
  e.ibn = false;
  e.ibn1 = Tri::no;
  e.ibn2_stably_finite = Tri::no;
  e.knowledge = Knowledge::exact(BasisType(m, n - m));
  e.presentation_id = "unc:" + std::to_string(m) + "," + std::to_string(n);
  e.provenance_note =
      "core: generated by the entries of an m x n unitary; K0 = Z/(n-m) generated by the "
      "unit class, and the type is exactly (m, n-m).";
  return e;
}

CatalogEntry make_rordam_entry(std::uint64_t n) {
  if (n < 1) throw Error(errc::invalid_argument, "Rordam index must be at least 1");
  CatalogEntry e;
  e.id = "Rordam:" + std::to_string(n);
  e.display_name = "Rordam-type algebra of type (" + std::to_string(n) + ",1)";
  e.k0_unit_order = UnitOrder::finite(1);
  e.ibn = false;
  e.ibn1 = Tri::no;
  e.ibn2_stably_finite = Tri::no;
  e.knowledge = Knowledge::exact(BasisType(n, 1));
  e.provenance_note =
      "core: unital algebra whose matrix algebras are finite below size N and properly "
      "infinite from N on, with K0 = 0; its type is (N, 1).";
  return e;
}

Catalog Catalog::builtin() {
  Catalog c;
  auto push = [&c](CatalogEntry e) {
    c.index_.emplace(e.id, c.entries_.size());
    c.entries_.push_back(std::move(e));
  };
  push(make_commutative_entry());
  push(make_stably_finite_entry());
  push(make_bh_entry());
  push(make_toeplitz_entry());
  push(make_t2_entry());
  push(make_oinf_entry());
  for (std::uint64_t n = 2; n <= 5; ++n) push(make_cuntz_entry(n));
  push(make_unc_entry(1, 2));
  push(make_unc_entry(2, 3));
  push(make_unc_entry(2, 5));
  push(make_unc_entry(3, 6));
  push(make_unc_entry(3, 7));
  for (std::uint64_t n = 1; n <= 3; ++n) push(make_rordam_entry(n));
  return c;
}

std::optional<CatalogEntry> Catalog::lookup(std::string_view id) const {
  if (auto it = index_.find(id); it != index_.end()) return entries_[it->second];
  if (id.rfind("O:", 0) == 0) {
    auto n = parse_u64(id.substr(2));
    if (n && *n >= 2) return make_cuntz_entry(*n);
    return std::nullopt;
  }
  if (id.rfind("Unc:", 0) == 0) {
    std::string_view rest = id.substr(4);
    auto comma = rest.find(',');
    if (comma == std::string_view::npos) return std::nullopt;
    auto m = parse_u64(rest.substr(0, comma));
    auto n = parse_u64(rest.substr(comma + 1));
    if (m && n && *m >= 1 && *n > *m) return make_unc_entry(*m, *n);
    return std::nullopt;
  }
  if (id.rfind("Rordam:", 0) == 0) {
    auto n = parse_u64(id.substr(7));
    if (n && *n >= 1) return make_rordam_entry(*n);
    return std::nullopt;
  }
  return std::nullopt;
}

void Catalog::add_entry(CatalogEntry entry) {
  if (lookup(entry.id)) {
    throw Error(errc::invalid_argument,
                "catalog id '" + entry.id + "' already resolves; shadowing is not allowed");
  }
  index_.emplace(entry.id, entries_.size());
  entries_.push_back(std::move(entry));
}

namespace {

void check_flag_hierarchy(const CatalogEntry& e, std::vector<Violation>& out) {
  auto flag = [&](std::string msg) {
    out.push_back({e.id, "catalog.flag-hierarchy", std::move(msg)});
  };
  if (e.ibn2_stably_finite == Tri::yes && e.ibn1 != Tri::yes) {
    flag("ibn2 = yes forces ibn1 = yes");
  }
  if (e.ibn2_stably_finite == Tri::yes && !e.ibn) {
    flag("ibn2 = yes forces ibn = yes");
  }
  if (e.ibn1 == Tri::yes && !e.ibn) {
    flag("ibn1 = yes forces ibn = yes");
  }
}

void check_unit_order(const CatalogEntry& e, std::vector<Violation>& out) {
  if (e.k0_unit_order.kind() == UnitOrder::Kind::unknown) return;
  const bool infinite = e.k0_unit_order.kind() == UnitOrder::Kind::infinite;
  if (e.ibn != infinite) {
    out.push_back({e.id, "catalog.ibn-iff-infinite-unit-order",
                   "ibn must hold exactly when the unit class has infinite order"});
  }
}

void check_exact_period(const CatalogEntry& e, std::vector<Violation>& out) {
  auto exact = normalize_exact(e.knowledge);
  if (!exact) return;
  if (e.k0_unit_order.kind() != UnitOrder::Kind::finite ||
      e.k0_unit_order.value() != exact->k_period()) {
    out.push_back({e.id, "catalog.period-equals-unit-order",
                   "exact type " + to_string(*exact) + " requires unit order " +
                       std::to_string(exact->k_period())});
  }
}

void check_status_flags(const CatalogEntry& e, std::vector<Violation>& out) {
  if (e.knowledge.status == IbnStatus::known_ibn && !e.ibn) {
    out.push_back({e.id, "catalog.status-flag-consistency",
                   "knowledge says IBN but the ibn flag is no"});
  }
  if (e.knowledge.status == IbnStatus::known_non_ibn && e.ibn) {
    out.push_back({e.id, "catalog.status-flag-consistency",
                   "knowledge says NonIBN but the ibn flag is yes"});
  }
}

void check_bounds(const CatalogEntry& e, std::vector<Violation>& out) {
  if (!e.knowledge.bounds_well_formed()) {
    out.push_back({e.id, "catalog.bounds-well-formed",
                   "lower bound must lie below the upper bound"});
  }
}

void check_presentation(const CatalogEntry& e, std::vector<Violation>& out) {
  if (!e.presentation_id) return;
  auto spec = parse_presentation_id(*e.presentation_id);
  if (!spec) {
    out.push_back({e.id, "catalog.presentation-resolves",
                   "unknown presentation id '" + *e.presentation_id + "'"});
    return;
  }
  std::optional<BasisType> pinned;
  if (spec->kind == PresentationSpec::Kind::cuntz) {
    pinned = BasisType(1, spec->cols - 1);
  } else if (spec->kind == PresentationSpec::Kind::unc) {
    pinned = BasisType(spec->rows, spec->cols - spec->rows);
  }
  if (pinned) {
    auto exact = normalize_exact(e.knowledge);
    if (!exact || !(*exact == *pinned)) {
      out.push_back({e.id, "catalog.presentation-pins-type",
                     "presentation '" + *e.presentation_id + "' forces exact type " +
                         to_string(*pinned)});
    }
  }
}

}  // namespace

std::vector<Violation> validate_entry(const CatalogEntry& e) {
  std::vector<Violation> out;
  check_flag_hierarchy(e, out);
  check_unit_order(e, out);
  check_exact_period(e, out);
  check_status_flags(e, out);
  check_bounds(e, out);
  check_presentation(e, out);
  return out;
}

std::vector<Violation> validate_catalog(const Catalog& catalog) {
  std::vector<Violation> out;
  for (const auto& e : catalog.list()) {
    auto v = validate_entry(e);
    out.insert(out.end(), v.begin(), v.end());
  }
  return out;
}

}  // namespace ibn
