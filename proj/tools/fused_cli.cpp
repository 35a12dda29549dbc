// Command-line front end for the fused-link invariant.
//
// Exit codes: 0 success or equivalent, 1 distinct or fuzz failures,
// 2 parse error, 3 invalid input or catalog store corruption, 4 internal error.

#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "fused/fused.hpp"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_distinct = 1;
constexpr int exit_parse = 2;
constexpr int exit_invalid = 3;
constexpr int exit_internal = 4;

struct GlobalOptions {
  std::optional<int> strands;
  bool json = false;
  std::string store = "fused_catalog.jsonl";
  std::uint64_t seed = 0;
};

fused::BraidWord read_word(std::string const& text, GlobalOptions const& g) {
  if (g.strands && *g.strands < 1) throw fused::StrandError("--strands must be at least 1");
  return fused::parse_braid(text, g.strands);
}

void print_invariant(fused::LinkingMatrix const& matrix, fused::CanonicalInvariant const& inv, bool as_json) {
  fused::json const j = fused::invariant_to_json(matrix, inv);
  if (as_json) {
    std::cout << j.dump() << "\n";
    return;
  }
  std::cout << "components: " << inv.components << "\n"
            << "matrix: " << j["matrix"].dump() << "\n"
            << "canonical: " << j["canonical"].dump() << "\n"
            << "witness: " << j["witness"].dump() << "\n";
}

int cmd_invariant(std::string const& text, GlobalOptions const& g) {
  fused::BraidWord const w = read_word(text, g);
  fused::LinkingMatrix const matrix = fused::abelianize(fused::rho_star(w).pure);
  print_invariant(matrix, fused::canonicalize(matrix), g.json);
  return exit_ok;
}

int cmd_equivalent(std::string const& a_text, std::string const& b_text, GlobalOptions const& g) {
  fused::BraidWord const a = read_word(a_text, g);
  fused::BraidWord const b = read_word(b_text, g);
  fused::LinkingMatrix const ma = fused::abelianize(fused::rho_star(a).pure);
  fused::LinkingMatrix const mb = fused::abelianize(fused::rho_star(b).pure);
  fused::CanonicalInvariant const ia = fused::canonicalize(ma);
  fused::CanonicalInvariant const ib = fused::canonicalize(mb);
  bool const same = ia == ib;
  if (g.json) {
    std::cout << fused::json{{"equivalent", same},
                             {"a", fused::invariant_to_json(ma, ia)},
                             {"b", fused::invariant_to_json(mb, ib)}}
                     .dump()
              << "\n";
  } else if (same) {
    std::cout << "EQUIVALENT\n";
  } else if (ia.components != ib.components) {
    std::cout << "DISTINCT (component counts " << ia.components << " vs " << ib.components << ")\n";
  } else {
    std::cout << "DISTINCT\n";
  }
  return same ? exit_ok : exit_distinct;
}

int cmd_reduce(std::string const& text, bool trace, GlobalOptions const& g) {
  fused::BraidWord const w = read_word(text, g);
  fused::ReductionResult const r = fused::rho_star(w);
  if (g.json) {
    std::cout << fused::json{{"strands", r.pure.strands()},
                             {"steps", r.trace.size()},
                             {"result", fused::format_pure(r.pure)},
                             {"trace", fused::trace_to_json(r.trace)}}
                     .dump()
              << "\n";
    return exit_ok;
  }
  if (trace) {
    for (auto const& step : r.trace) std::cout << fused::step_to_json(step).dump() << "\n";
  }
  std::cout << fused::format_pure(r.pure) << "\n"
            << "strands: " << r.pure.strands() << ", steps: " << r.trace.size() << "\n";
  return exit_ok;
}

void print_entry(fused::CatalogEntry const& e, bool as_json) {
  if (as_json) {
    std::cout << fused::entry_to_json(e).dump() << "\n";
  } else {
    std::cout << e.name << "\t" << e.word << "\t" << e.strands << "\t" << e.components << "\t"
              << fused::matrix_to_json(e.canonical).dump() << "\t" << e.added_at << "\n";
  }
}

int cmd_catalog_add(std::string const& name, std::string const& text, GlobalOptions const& g) {
  fused::CatalogEntry const e = fused::make_catalog_entry(name, read_word(text, g));
  fused::add_to_catalog(g.store, e);
  print_entry(e, g.json);
  return exit_ok;
}

int cmd_catalog_find(std::string const& text, bool strict, GlobalOptions const& g) {
  fused::CanonicalInvariant const inv = fused::fused_invariant(read_word(text, g));
  for (auto const& e : fused::find_in_catalog(fused::load_catalog(g.store, strict), inv)) print_entry(e, g.json);
  return exit_ok;
}

int cmd_catalog_list(bool strict, GlobalOptions const& g) {
  for (auto const& e : fused::load_catalog(g.store, strict)) print_entry(e, g.json);
  return exit_ok;
}

int cmd_fuzz(fused::FuzzConfig config, GlobalOptions const& g) {
  config.seed = g.seed;
  fused::FuzzReport const report = fused::fuzz_invariance(config);
  if (g.json) {
    std::cout << fused::report_to_json(report).dump() << "\n";
  } else {
    std::cout << "trials: " << report.trials << ", failures: " << report.failures.size() << ", elapsed: "
              << report.elapsed_seconds << " s\n";
    for (auto const& f : report.failures) std::cout << fused::failure_to_json(f).dump() << "\n";
    std::cout << (report.passed() ? "PASS" : "FAIL") << "\n";
  }
  return report.passed() ? exit_ok : exit_distinct;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Complete invariant and equivalence test for fused links given as braid words"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions g;
  app.add_option("--strands", g.strands, "Strand count (default: largest index + 1)");
  app.add_flag("--json", g.json, "Machine-readable JSON output");
  app.add_option("--store", g.store, "Catalog store (JSON Lines)");
  app.add_option("--seed", g.seed, "Master seed for fuzzing");

  std::string word_a, word_b, name;
  bool trace = false;
  bool strict = false;

  auto* invariant = app.add_subcommand("invariant", "Print the linking matrix and its canonical form");
  invariant->add_option("word", word_a, "Braid word, e.g. \"s1 s2^-1 r1\"")->required();

  auto* equivalent = app.add_subcommand("equivalent", "Decide fused equivalence of two closures");
  equivalent->add_option("word_a", word_a)->required();
  equivalent->add_option("word_b", word_b)->required();

  auto* reduce = app.add_subcommand("reduce", "Reduce to a pure braid with one strand per component");
  reduce->add_option("word", word_a)->required();
  reduce->add_flag("--trace", trace, "Print one JSON object per reduction step");

  auto* catalog = app.add_subcommand("catalog", "Named links keyed by canonical invariant");
  catalog->require_subcommand(1);
  catalog->add_flag("--strict", strict, "Re-verify stored invariants on load");
  auto* add = catalog->add_subcommand("add", "Store a named link");
  add->add_option("name", name)->required();
  add->add_option("word", word_a)->required();
  auto* find = catalog->add_subcommand("find", "List stored links equivalent to a word");
  find->add_option("word", word_a)->required();
  auto* list = catalog->add_subcommand("list", "List stored links");

  fused::FuzzConfig fuzz_config;
  auto* fuzz = app.add_subcommand("fuzz", "Check invariance under random Markov moves and relation rewrites");
  fuzz->add_option("--trials", fuzz_config.trials, "Number of trials")->capture_default_str();
  fuzz->add_option("--min-strands", fuzz_config.min_strands)->capture_default_str();
  fuzz->add_option("--max-strands", fuzz_config.max_strands)->capture_default_str();
  fuzz->add_option("--min-length", fuzz_config.min_length)->capture_default_str();
  fuzz->add_option("--max-length", fuzz_config.max_length)->capture_default_str();
  fuzz->add_option("--moves", fuzz_config.moves_per_word, "Moves per word (at most 8)")->capture_default_str();
  fuzz->add_option("--bias", fuzz_config.classical_bias, "Probability of a classical letter")->capture_default_str();
  fuzz->add_option("--threads", fuzz_config.threads, "Worker threads (0: all cores)");
  fuzz->add_flag("--break-stabilization", fuzz_config.break_stabilization)->group("");

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    int const code = app.exit(e);
    return code == 0 ? exit_ok : exit_parse;
  }

  try {
    if (invariant->parsed()) return cmd_invariant(word_a, g);
    if (equivalent->parsed()) return cmd_equivalent(word_a, word_b, g);
    if (reduce->parsed()) return cmd_reduce(word_a, trace, g);
    if (add->parsed()) return cmd_catalog_add(name, word_a, g);
    if (find->parsed()) return cmd_catalog_find(word_a, strict, g);
    if (list->parsed()) return cmd_catalog_list(strict, g);
    if (fuzz->parsed()) return cmd_fuzz(fuzz_config, g);
  } catch (fused::ParseError const& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return exit_parse;
  } catch (fused::StrandError const& e) {
    std::cerr << "invalid strand count: " << e.what() << "\n";
    return exit_invalid;
  } catch (fused::CatalogError const& e) {
    std::cerr << "catalog error: " << e.what() << "\n";
    return exit_invalid;
  } catch (std::invalid_argument const& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return exit_invalid;
  } catch (std::exception const& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return exit_internal;
  }
  return exit_parse;
}
