#include "ibn/cli.hpp"

#include <charconv>
#include <cstdlib>
#include <optional>
#include <ostream>
#include <string_view>

#include <CLI11.hpp>
#include <json.hpp>

#include "ibn/amatrix.hpp"
#include "ibn/catalog.hpp"
#include "ibn/construction_calculus.hpp"
#include "ibn/dsl.hpp"
#include "ibn/errors.hpp"
#include "ibn/matrix_io.hpp"
#include "ibn/poly_text.hpp"
#include "ibn/serialize.hpp"

namespace ibn::cli {

namespace {

using nlohmann::json;

struct Output {
  std::ostream& out;
  std::ostream& err;
  bool as_json = false;

  void value(const json& j) const { out << j.dump() << "\n"; }
  void line(const std::string& s) const { out << s << "\n"; }
};

void emit_error(const Output& io, std::string_view code, const std::string& message,
                const std::string& anchor = {}, std::optional<std::size_t> offset = {},
                const std::vector<std::string>* expected = nullptr) {
  if (io.as_json) {
    json j{{"code", std::string(code)}, {"message", message}};
    if (!anchor.empty()) j["anchor"] = anchor;
    if (offset) j["offset"] = *offset;
    if (expected && !expected->empty()) j["expected"] = *expected;
    io.value(j);
  } else {
    io.err << "error: " << message << "\n";
  }
}

std::string upper_bound_text(const Knowledge& k) {
  std::string n = k.upper_n ? "N <= " + std::to_string(*k.upper_n) : "N unbounded";
  std::string kk = k.upper_k ? "K | " + std::to_string(*k.upper_k) : "K unconstrained";
  return n + ", " + kk;
}

void print_knowledge(const Output& io, const Knowledge& k) {
  if (io.as_json) {
    io.value(knowledge_to_json(k));
    return;
  }
  io.line("status: " + to_string(k.status));
  if (k.status == IbnStatus::known_ibn) return;
  if (auto exact = normalize_exact(k)) {
    io.line("exact: " + to_string(*exact));
    return;
  }
  io.line("lower: " + to_string(k.lower));
  io.line("upper: " + upper_bound_text(k));
}

/// Components that keep the knowledge from naming one type.
std::vector<std::string> blocking_components(const Knowledge& k) {
  if (k.status != IbnStatus::known_non_ibn) return {"status"};
  std::vector<std::string> out;
  if (!k.upper_n || *k.upper_n != k.lower.n_min()) out.push_back("N");
  if (!k.upper_k || *k.upper_k != k.lower.k_period()) out.push_back("K");
  return out;
}

int report_undecided(const Output& io, const Knowledge& k) {
  const auto blocking = blocking_components(k);
  if (io.as_json) {
    json j{{"undecided", true},
           {"reason", k.status == IbnStatus::known_non_ibn ? "type not exact" : "status unknown"},
           {"blocking", blocking}};
    if (k.status != IbnStatus::known_ibn) {
      j["lower"] = knowledge_to_json(k).value("lower", json{{"N", k.lower.n_min()},
                                                            {"K", k.lower.k_period()}});
      json upper;
      upper["N"] = k.upper_n ? json(*k.upper_n) : json("Infinity");
      upper["K"] = k.upper_k ? json(*k.upper_k) : json("AnyK");
      j["upper"] = upper;
    }
    io.value(j);
  } else {
    io.line(k.status == IbnStatus::known_non_ibn ? "undecided: type not exact"
                                                 : "undecided: status unknown");
    std::string blk;
    for (const auto& b : blocking) {
      if (!blk.empty()) blk += ", ";
      blk += b;
    }
    io.line("blocking: " + blk);
    if (k.status != IbnStatus::known_ibn) {
      io.line("lower: " + to_string(k.lower));
      io.line("upper: " + upper_bound_text(k));
    }
  }
  return 3;
}

int cmd_type(const Output& io, const Catalog& catalog, const std::string& expr_src) {
  Knowledge k = infer(*parse_dsl(expr_src), catalog);
  print_knowledge(io, k);
  return 0;
}

int cmd_equiv(const Output& io, const Catalog& catalog, const std::string& expr_src, Rank n,
              Rank m) {
  Knowledge k = infer(*parse_dsl(expr_src), catalog);
  auto answer = [&](bool equivalent) {
    if (io.as_json) {
      io.value(json{{"equivalent", equivalent}});
    } else {
      io.line(std::string("equivalent: ") + (equivalent ? "true" : "false"));
    }
    return 0;
  };
  // Reflexivity and the zero module are rank axioms, decidable for any type.
  if (n == m) return answer(true);
  if (n == 0 || m == 0) return answer(false);
  if (k.status == IbnStatus::known_ibn) return answer(false);
  if (auto exact = normalize_exact(k)) return answer(equiv_ranks(*exact, n, m));
  return report_undecided(io, k);
}

int cmd_canon(const Output& io, const Catalog& catalog, const std::string& expr_src, Rank n) {
  Knowledge k = infer(*parse_dsl(expr_src), catalog);
  auto answer = [&](Rank canonical) {
    if (io.as_json) {
      io.value(json{{"canonical", canonical}});
    } else {
      io.line("canonical: " + std::to_string(canonical));
    }
    return 0;
  };
  if (k.status == IbnStatus::known_ibn) return answer(n);  // every rank is its own class
  if (auto exact = normalize_exact(k)) return answer(canonical_rank(*exact, n));
  return report_undecided(io, k);
}

int cmd_classes(const Output& io, const Catalog& catalog, const std::string& expr_src) {
  Knowledge k = infer(*parse_dsl(expr_src), catalog);
  if (k.status == IbnStatus::known_ibn) {
    if (io.as_json) {
      io.value(json{{"classes", "Infinite"}});
    } else {
      io.line("classes: Infinite");
    }
    return 0;
  }
  if (auto exact = normalize_exact(k)) {
    const std::uint64_t count = class_count(*exact);
    if (io.as_json) {
      io.value(json{{"classes", count}});
    } else {
      io.line("classes: " + std::to_string(count));
    }
    return 0;
  }
  return report_undecided(io, k);
}

WitnessAlgebra witness_algebra_for(const std::string& atom_src) {
  ExprPtr e = parse_dsl(atom_src);
  const Leaf* leaf = std::get_if<Leaf>(&e->node);
  if (!leaf) {
    throw Error(errc::invalid_argument,
                "witness construction needs an O(p) or Unc(m,n) atom");
  }
  auto spec = [&]() -> std::optional<PresentationSpec> {
    auto entry = Catalog::builtin().lookup(leaf->catalog_id);
    if (!entry || !entry->presentation_id) return std::nullopt;
    return parse_presentation_id(*entry->presentation_id);
  }();
  if (spec && spec->kind == PresentationSpec::Kind::cuntz) {
    return WitnessAlgebra::cuntz(spec->cols);
  }
  if (spec && spec->kind == PresentationSpec::Kind::unc) {
    return WitnessAlgebra::unc(spec->rows, spec->cols);
  }
  throw Error(errc::invalid_argument,
              "no witness construction for '" + leaf->catalog_id +
                  "': only O(p) and Unc(m,n) carry a base unitary");
}

void print_matrix_rows(const Output& io, const AMatrix& m, const Presentation& pres) {
  for (std::size_t r = 0; r < m.rows(); ++r) {
    std::string row = "[";
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c) row += ", ";
      row += to_text(m.at(r, c), pres);
    }
    io.line(row + "]");
  }
}

int cmd_witness(const Output& io, const std::string& atom_src, Rank a, Rank b, bool verify,
                const std::string& out_path, std::uint64_t step_bound) {
  if (a > b) {
    emit_error(io, "UsageError", "witness requires n <= m (the smaller rank first)");
    return 1;
  }
  WitnessAlgebra alg = witness_algebra_for(atom_src);
  AMatrix w = witness(alg, a, b);
  std::optional<VerifyStatus> verified;
  if (verify) verified = verify_unitary(w, alg.presentation, step_bound);

  if (io.as_json) {
    json j;
    if (out_path.empty()) {
      j["matrix"] = matrix_to_json(w, alg.presentation);
    } else {
      write_matrix_file(out_path, w, alg.presentation);
      j["written"] = out_path;
    }
    if (verified) {
      j["verified"] = *verified == VerifyStatus::verified ? "Verified" : "Inconclusive";
    }
    io.value(j);
  } else {
    if (out_path.empty()) {
      io.line(std::to_string(w.rows()) + "x" + std::to_string(w.cols()) + " unitary over " +
              alg.presentation.id());
      print_matrix_rows(io, w, alg.presentation);
    } else {
      write_matrix_file(out_path, w, alg.presentation);
      io.line("wrote " + out_path);
    }
    if (verified) {
      io.line(*verified == VerifyStatus::verified ? "Verified" : "Inconclusive");
    }
  }
  return verified && *verified == VerifyStatus::inconclusive ? 3 : 0;
}

int cmd_verify(const Output& io, const std::string& path, std::uint64_t step_bound) {
  MatrixFile file = read_matrix_file(path);
  const VerifyStatus status = verify_unitary(file.matrix, file.presentation, step_bound);
  const std::string text = status == VerifyStatus::verified ? "Verified" : "Inconclusive";
  if (io.as_json) {
    io.value(json{{"result", text}});
  } else {
    io.line(text);
  }
  return status == VerifyStatus::verified ? 0 : 3;
}

EquivalenceWitnessSet parse_pairs(const std::string& text) {
  EquivalenceWitnessSet ws;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find(',', pos);
    if (end == std::string::npos) end = text.size();
    std::string_view item(text.data() + pos, end - pos);
    std::size_t colon = item.find(':');
    if (colon == std::string_view::npos) {
      throw SyntaxError(errc::parse_error, pos, {"a:b"}, "pair must look like a:b");
    }
    auto parse_rank = [&](std::string_view s, std::size_t at) -> Rank {
      Rank v = 0;
      auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
      if (ec != std::errc{} || ptr != s.data() + s.size()) {
        throw SyntaxError(errc::parse_error, at, {"integer"}, "invalid rank in pair list");
      }
      return v;
    };
    const Rank a = parse_rank(item.substr(0, colon), pos);
    const Rank b = parse_rank(item.substr(colon + 1), pos + colon + 1);
    ws.add(a, b);
    pos = end + 1;
    if (end == text.size()) break;
  }
  return ws;
}

int cmd_oracle(const Output& io, const std::string& pairs, Rank bound) {
  EquivalenceWitnessSet ws = parse_pairs(pairs);
  RankPartition partition = oracle_closure(ws, bound);
  if (io.as_json) {
    io.value(partition_to_json(partition));
    return 0;
  }
  io.line("bound: " + std::to_string(bound));
  for (const auto& cls : partition.classes()) {
    std::string line = "class:";
    for (Rank r : cls) line += " " + std::to_string(r);
    io.line(line);
  }
  return 0;
}

void print_entry(const Output& io, const CatalogEntry& e) {
  io.line("id: " + e.id);
  io.line("name: " + e.display_name);
  io.line("k0_unit_order: " + to_string(e.k0_unit_order));
  io.line(std::string("ibn: ") + (e.ibn ? "yes" : "no"));
  io.line("ibn1: " + to_string(e.ibn1));
  io.line("ibn2_stably_finite: " + to_string(e.ibn2_stably_finite));
  io.line("status: " + to_string(e.knowledge.status));
  if (auto exact = normalize_exact(e.knowledge)) {
    io.line("exact: " + to_string(*exact));
  }
  if (e.presentation_id) io.line("presentation: " + *e.presentation_id);
  io.line("provenance: " + e.provenance_note);
}

int cmd_catalog(const Output& io, const Catalog& catalog, const std::string& id) {
  if (!id.empty()) {
    auto entry = catalog.lookup(id);
    if (!entry) {
      throw Error(errc::not_found, "no catalog entry '" + id + "'");
    }
    if (io.as_json) {
      io.value(entry_to_json(*entry));
    } else {
      print_entry(io, *entry);
    }
    return 0;
  }
  if (io.as_json) {
    json entries = json::array();
    for (const auto& e : catalog.list()) entries.push_back(entry_to_json(e));
    io.value(json{{"entries", std::move(entries)}});
  } else {
    for (const auto& e : catalog.list()) {
      io.line(e.id + " - " + e.display_name);
    }
  }
  return 0;
}

int cmd_validate_catalog(const Output& io, const Catalog& catalog) {
  auto violations = validate_catalog(catalog);
  if (io.as_json) {
    io.value(violations_to_json(violations));
  } else {
    if (violations.empty()) {
      io.line("catalog valid: no violations");
    } else {
      for (const auto& v : violations) {
        io.line("violation [" + v.rule + "] " + v.entry_id + ": " + v.message);
      }
    }
  }
  return violations.empty() ? 0 : 2;
}

std::optional<std::uint64_t> step_bound_from_env(const Output& io) {
  const char* raw = std::getenv("IBN_STEP_BOUND");
  if (!raw) return kDefaultStepBound;
  std::string_view s(raw);
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || v == 0) {
    emit_error(io, "UsageError", "IBN_STEP_BOUND must be a positive integer");
    return std::nullopt;
  }
  return v;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"basis-type calculus for standard modules over C*-algebras"};
  app.require_subcommand(1);

  bool as_json = false;
  std::string catalog_path;
  app.add_flag("--json", as_json, "emit one JSON object on stdout");
  app.add_option("--catalog", catalog_path, "JSON file with extra catalog entries");

  std::string expr_src, atom_src, file_path, out_path, catalog_id, pairs;
  Rank rank_n = 0, rank_m = 0, bound = 0;
  bool verify_flag = false;

  auto* c_type = app.add_subcommand("type", "infer basis-type knowledge for an expression");
  c_type->add_option("expr", expr_src)->required();

  auto* c_equiv = app.add_subcommand("equiv", "decide equivalence of two standard-module ranks");
  c_equiv->add_option("expr", expr_src)->required();
  c_equiv->add_option("n", rank_n)->required();
  c_equiv->add_option("m", rank_m)->required();

  auto* c_canon = app.add_subcommand("canon", "least rank equivalent to the given one");
  c_canon->add_option("expr", expr_src)->required();
  c_canon->add_option("n", rank_n)->required();

  auto* c_classes = app.add_subcommand("classes", "number of standard-module classes");
  c_classes->add_option("expr", expr_src)->required();

  auto* c_witness = app.add_subcommand("witness", "construct a rectangular unitary witness");
  c_witness->add_option("atom", atom_src)->required();
  c_witness->add_option("n", rank_n)->required();
  c_witness->add_option("m", rank_m)->required();
  c_witness->add_flag("--verify", verify_flag, "run the rewriter over the result");
  c_witness->add_option("-o,--output", out_path, "write the matrix file here");

  auto* c_verify = app.add_subcommand("verify", "verify a matrix file as a unitary");
  c_verify->add_option("file", file_path)->required();

  auto* c_oracle = app.add_subcommand("oracle", "brute-force congruence closure partition");
  c_oracle->add_option("--pairs", pairs, "witness pairs a:b[,c:d...]");
  c_oracle->add_option("--bound", bound, "close over {0,...,bound}")->required();

  auto* c_catalog = app.add_subcommand("catalog", "show one catalog entry or list all");
  c_catalog->add_option("id", catalog_id);

  auto* c_validate = app.add_subcommand("validate-catalog", "run the catalog validator");

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    Output io{out, err, as_json};
    emit_error(io, "UsageError", e.what());
    return 1;
  }

  Output io{out, err, as_json};
  auto step_bound = step_bound_from_env(io);
  if (!step_bound) return 1;

  try {
    Catalog catalog = Catalog::builtin();
    if (!catalog_path.empty()) load_catalog_file(catalog, catalog_path);

    if (app.got_subcommand(c_type)) return cmd_type(io, catalog, expr_src);
    if (app.got_subcommand(c_equiv)) return cmd_equiv(io, catalog, expr_src, rank_n, rank_m);
    if (app.got_subcommand(c_canon)) return cmd_canon(io, catalog, expr_src, rank_n);
    if (app.got_subcommand(c_classes)) return cmd_classes(io, catalog, expr_src);
    if (app.got_subcommand(c_witness)) {
      return cmd_witness(io, atom_src, rank_n, rank_m, verify_flag, out_path, *step_bound);
    }
    if (app.got_subcommand(c_verify)) return cmd_verify(io, file_path, *step_bound);
    if (app.got_subcommand(c_oracle)) return cmd_oracle(io, pairs, bound);
    if (app.got_subcommand(c_catalog)) return cmd_catalog(io, catalog, catalog_id);
    if (app.got_subcommand(c_validate)) return cmd_validate_catalog(io, catalog);
    emit_error(io, "UsageError", "no command given");
    return 1;
  } catch (const SyntaxError& e) {
    emit_error(io, errc_name(e.code()), e.what(), "", e.offset(), &e.expected());
    return 1;
  } catch (const Error& e) {
    emit_error(io, errc_name(e.code()), e.what(), e.anchor());
    return 2;
  }
}

}  // namespace ibn::cli
