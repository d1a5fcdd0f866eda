#include "elw/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>

#include "elw/admissibility.hpp"
#include "elw/engines.hpp"
#include "elw/error.hpp"
#include "elw/report.hpp"
#include "elw/todd.hpp"

namespace elw::cli {

namespace {

namespace fs = std::filesystem;
using elw::to_string;
using io::json;

bool color_enabled() {
  const char* env = std::getenv("ELWLAB_COLOR");
  return env != nullptr && std::string_view(env) == "1";
}

std::uint64_t to_count(const Integer& n, std::string_view what) {
  if (n < 0 || !n.fits_ulong_p()) {
    throw Error(ErrorKind::InvalidArgument, std::string(what) + " must be a nonnegative integer");
  }
  return n.get_ui();
}

/// A sequence argument: a JSON file holding an array, or "g0,g1,...".
ElwSequence sequence_argument(const std::string& arg) {
  if (fs::is_regular_file(arg)) return io::sequence_from_json(io::load_json_file(arg));
  std::vector<Integer> gens;
  std::size_t start = 0;
  while (start <= arg.size()) {
    const std::size_t comma = std::min(arg.find(',', start), arg.size());
    gens.push_back(parse_integer(std::string_view(arg).substr(start, comma - start)));
    start = comma + 1;
  }
  for (const auto& g : gens) {
    if (g < 0) throw Error(ErrorKind::Parse, "sequence generators must be >= 0");
  }
  return ElwSequence::of(gens);
}

CycleCatalog catalog_file(const std::string& path) {
  return io::catalog_from_json(io::load_json_file(path));
}

void append(std::vector<Check>& into, std::vector<Check> more) {
  into.insert(into.end(), std::make_move_iterator(more.begin()),
              std::make_move_iterator(more.end()));
}

/// Primes where the top level can drop below elw_{n-1}.
std::vector<Integer> ord_primes(const ElwSequence& seq, const CycleCatalog& c) {
  std::vector<Integer> primes;
  auto add = [&](const Integer& n) {
    if (n == 0) return;
    for (const auto& [p, e] : factorize(n)) {
      if (std::find(primes.begin(), primes.end(), p) == primes.end()) primes.push_back(p);
    }
  };
  add(seq.level(static_cast<std::int64_t>(c.dimension) - 1).generator());
  add(*c.global_chi);
  std::sort(primes.begin(), primes.end());
  if (primes.empty()) primes.push_back(2);
  return primes;
}

Report verify_catalog(const CycleCatalog& c, const std::string& lemma,
                      const std::optional<std::string>& ell,
                      const std::optional<std::string>& sheaf_path) {
  const bool all = lemma == "all";
  Report r{"verify", {}, std::nullopt};
  const ElwSequence seq = elw_sequence(c);
  r.details.push_back(chain_check(seq));

  if (lemma == "top" || (all && c.flags.has(Flag::integral))) {
    r.details.push_back(check_top_relation(c));
  }
  if (lemma == "ord" || (all && c.flags.has(Flag::integral))) {
    if (!c.flags.has(Flag::integral)) {
      throw Error(ErrorKind::MissingFlag, "ord relation requires flag integral");
    }
    const auto primes = ell ? std::vector<Integer>{parse_integer(*ell)} : ord_primes(seq, c);
    for (const auto& p : primes) r.details.push_back(check_ord_relation(c, p));
  }
  if (lemma == "todd" ||
      (all && (c.flags.has(Flag::char_zero) || c.flags.has(Flag::regular)))) {
    append(r.details, todd_divisibility_check(c));
  }
  if (lemma == "ff" || (all && c.flags.has(Flag::finite_field))) {
    r.details.push_back(finite_field_check(c));
  }
  if (sheaf_path) {
    r.details.push_back(sheaf_chi_check(c, io::sheaf_from_json(io::load_json_file(*sheaf_path))));
  }
  r.payload = json{{"catalog", c.name}, {"sequence", io::to_json(seq)}};
  return r;
}

json example_payload(const engines::BuiltExample& ex, const ElwSequence& seq) {
  json catalog = io::to_json(ex.catalog);
  catalog["expected_sequence"] = io::to_json(ex.expected);
  return json{{"catalog", catalog},
              {"sequence", io::to_json(seq)},
              {"expected_sequence", io::to_json(ex.expected)}};
}

Report built_example(const std::string& command, const engines::BuiltExample& ex) {
  Report r{command, {}, std::nullopt};
  const ElwSequence seq = elw_sequence(ex.catalog);
  r.details.push_back({"matches expected", seq == ex.expected ? Outcome::pass : Outcome::fail,
                       seq.str() + (seq == ex.expected ? " = " : " ≠ ") + ex.expected.str()});
  r.details.push_back(chain_check(seq));
  if (ex.catalog.flags.has(Flag::integral)) r.details.push_back(check_top_relation(ex.catalog));
  append(r.details, todd_divisibility_check(ex.catalog));
  r.payload = example_payload(ex, seq);
  return r;
}

Report sequence_example(const std::string& command, const ElwSequence& seq) {
  Report r{command, {}, std::nullopt};
  r.details.push_back(chain_check(seq));
  admissibility::CandidateSequence candidate;
  for (const auto& ideal : seq.ideals()) candidate.e.push_back(ideal.generator());
  const auto verdict = admissibility::he_admissible(candidate);
  r.details.push_back({"he admissible", verdict.admissible ? Outcome::pass : Outcome::fail,
                       verdict.witness ? verdict.witness->message : candidate.str()});
  r.payload = json{{"sequence", io::to_json(seq)}};
  return r;
}

Report run_example(const std::string& name, const std::vector<std::string>& params) {
  auto param = [&](std::size_t i, const char* what) -> Integer {
    if (i >= params.size()) {
      throw Error(ErrorKind::InvalidArgument, "example " + name + " needs parameter <" + what + ">");
    }
    return parse_integer(params[i]);
  };
  auto expect_params = [&](std::size_t lo, std::size_t hi) {
    if (params.size() < lo || params.size() > hi) {
      throw Error(ErrorKind::InvalidArgument,
                  "example " + name + " takes " + std::to_string(lo) +
                      (lo == hi ? "" : "-" + std::to_string(hi)) + " parameters");
    }
  };
  const std::string command = "example " + name;

  if (name == "severi-brauer") {
    expect_params(1, 1);
    return built_example(command, engines::severi_brauer_catalog(param(0, "p")));
  }
  if (name == "conics") {
    expect_params(1, 1);
    return built_example(command, engines::conic_product_catalog(to_count(param(0, "n"), "n")));
  }
  if (name == "double-cover") {
    expect_params(1, 2);
    const std::uint64_t r_max = params.size() > 1 ? to_count(param(1, "r_max"), "r_max") : 3;
    const Integer d = param(0, "d");
    auto ex = engines::real_double_cover_catalog(d, r_max);
    Report r = built_example(command, ex);
    r.details.push_back(check_ord_relation(ex.catalog, 2));
    r.payload->emplace("surface_chi", io::to_json(*ex.catalog.global_chi));
    json curves = json::array();
    for (std::uint64_t k = 1; k <= r_max; ++k) {
      curves.push_back(io::to_json(engines::double_cover_chi(d, k).curve_chi));
    }
    r.payload->emplace("curve_chi", curves);
    return r;
  }
  if (name == "quadric3") {
    expect_params(0, 0);
    auto ex = engines::quadric3_catalog();
    Report r = built_example(command, ex);
    const Residue c4 = cycle_residue(ex.catalog, {1, {{"C4", 1}}});
    const Residue c2 = cycle_residue(ex.catalog, {1, {{"C2", 2}}});
    r.details.push_back({"C4 vs 2·C2 residues differ", c4.value != c2.value ? Outcome::pass : Outcome::fail,
                         to_string(c4.value) + " vs " + to_string(c2.value) + " mod " +
                             c4.modulus.str()});
    return r;
  }
  if (name == "hyperelliptic") {
    expect_params(1, 1);
    return sequence_example(command,
                            engines::hyperelliptic_product_sequence(to_count(param(0, "n"), "n")));
  }
  if (name == "real-curves") {
    expect_params(1, 1);
    return sequence_example(command,
                            engines::real_curve_product_sequence(to_count(param(0, "n"), "n")));
  }
  if (name == "k3-chi") {
    expect_params(2, 2);
    const Integer h2 = param(0, "h_squared");
    const Integer a = param(1, "a");
    const Integer chi = engines::k3_line_bundle_chi(h2, a);
    const Integer m = h2 / 2;
    const Integer diff = chi - 2;
    Report r{command, {}, std::nullopt};
    r.details.push_back({"chi(aH) - chi(O) divisible by m", divides(m, diff) ? Outcome::pass : Outcome::fail,
                         to_string(diff) + (divides(m, diff) ? " ∈ (" : " ∉ (") + to_string(m) + ")"});
    r.payload = json{{"h_squared", io::to_json(h2)}, {"a", io::to_json(a)},
                     {"chi", io::to_json(chi)}, {"m", io::to_json(m)}};
    return r;
  }
  throw Error(ErrorKind::InvalidArgument,
              "unknown example '" + name +
                  "' (severi-brauer, conics, hyperelliptic, real-curves, double-cover, quadric3, "
                  "k3-chi)");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"ELW index calculator and lemma verifier", "elwlab"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "Emit a single JSON report instead of a table");

  // Each subcommand sets `action`; it runs after parsing succeeds.
  std::function<Report()> action;
  std::string stderr_note;

  auto* mu = app.add_subcommand("mu-td", "Todd denominator mu_td(n)");
  std::string mu_n;
  bool factored = false;
  mu->add_option("n", mu_n, "dimension")->required();
  mu->add_flag("--factored", factored, "print p^e factors");
  mu->callback([&] {
    action = [&] {
      const std::uint64_t n = to_count(parse_integer(mu_n), "n");
      const auto td = todd::factor(n);
      json payload{{"n", n}, {"mu_td", io::to_json(td.expand())}};
      if (factored) payload["factors"] = td.str();
      return Report{"mu-td", {}, payload};
    };
  });

  auto* elw_cmd = app.add_subcommand("elw", "ELW sequence of a catalog");
  std::string elw_path;
  elw_cmd->add_option("catalog", elw_path, "catalog JSON")->required();
  elw_cmd->callback([&] {
    action = [&] {
      const CycleCatalog c = catalog_file(elw_path);
      const ElwSequence seq = elw_sequence(c);
      return Report{"elw", {chain_check(seq)},
                    json{{"catalog", c.name}, {"sequence", io::to_json(seq)}}};
    };
  });

  auto* verify = app.add_subcommand("verify", "Run lemma verifiers on a catalog");
  std::string verify_path, lemma = "all";
  std::optional<std::string> verify_ell, sheaf_path;
  verify->add_option("catalog", verify_path, "catalog JSON")->required();
  verify->add_option("--lemma", lemma, "all|top|ord|todd|ff")
      ->check(CLI::IsMember({"all", "top", "ord", "todd", "ff"}));
  verify->add_option("--ell", verify_ell, "prime for the ord relation");
  verify->add_option("--sheaf", sheaf_path, "SheafModel JSON for the sheaf chi check");
  verify->callback([&] {
    action = [&] { return verify_catalog(catalog_file(verify_path), lemma, verify_ell, sheaf_path); };
  });

  auto* morphism = app.add_subcommand("morphism", "Verify a declared morphism");
  std::string morphism_path;
  morphism->add_option("morphism", morphism_path, "MorphismModel JSON")->required();
  morphism->callback([&] {
    action = [&] {
      const fs::path path(morphism_path);
      const MorphismModel m = io::morphism_from_json(io::load_json_file(path), path.parent_path());
      return Report{"morphism", morphism_checks(m),
                    json{{"source", m.source.name},
                         {"target", m.target.name},
                         {"kind", std::string(to_string(m.kind))},
                         {"degree", io::to_json(m.degree)},
                         {"source_sequence", io::to_json(elw_sequence(m.source))},
                         {"target_sequence", io::to_json(elw_sequence(m.target))}}};
    };
  });

  auto* residue = app.add_subcommand("residue", "chi of a cycle class modulo elw_{r-1}");
  std::string residue_catalog, residue_cycle;
  residue->add_option("catalog", residue_catalog, "catalog JSON")->required();
  residue->add_option("cycle", residue_cycle, "CycleClass JSON")->required();
  residue->callback([&] {
    action = [&] {
      const CycleCatalog c = catalog_file(residue_catalog);
      const Residue res = cycle_residue(c, io::cycle_from_json(io::load_json_file(residue_cycle)));
      return Report{"residue", {},
                    json{{"residue", io::to_json(res.value)},
                         {"modulus", io::to_json(res.modulus.generator())}}};
    };
  });

  auto* degree = app.add_subcommand("degree-formula", "deg·elw_i(Y) ⊂ elw_i(X) + elw_{i-1}(Y)");
  std::string seq_x, seq_y, deg, level;
  std::optional<std::string> degree_ell;
  degree->add_option("seqX", seq_x, "source sequence: g0,g1,... or JSON file")->required();
  degree->add_option("seqY", seq_y, "target sequence: g0,g1,... or JSON file")->required();
  degree->add_option("--deg", deg, "degree of X/Y")->required();
  degree->add_option("--level", level, "level i")->required();
  degree->add_option("--ell", degree_ell, "also check the valuation transfer at this prime");
  degree->callback([&] {
    action = [&] {
      const ElwSequence x = sequence_argument(seq_x);
      const ElwSequence y = sequence_argument(seq_y);
      const Integer d = parse_integer(deg);
      const std::uint64_t i = to_count(parse_integer(level), "level");
      Report r{"degree-formula", {degree_formula_check(x, y, d, i)}, std::nullopt};
      if (degree_ell) r.details.push_back(rost_corollary_check(x, y, d, parse_integer(*degree_ell), i));
      return r;
    };
  });

  auto* check_seq = app.add_subcommand("check-seq", "Admissibility of e0 e1 ... en");
  std::vector<std::string> entries;
  bool k3 = false;
  check_seq->add_option("entries", entries, "e0 e1 ... en")->required();
  check_seq->add_flag("--k3", k3, "use the K3 surface constraints (exactly three entries)");
  check_seq->callback([&] {
    action = [&] {
      admissibility::CandidateSequence s;
      for (const auto& e : entries) s.e.push_back(parse_integer(e));
      admissibility::Verdict v;
      std::string name;
      if (k3) {
        if (s.e.size() != 3) throw Error(ErrorKind::InvalidArgument, "--k3 takes exactly 3 entries");
        name = "k3 admissible";
        v = admissibility::k3_admissible(s.e[0], s.e[1], s.e[2]);
      } else {
        name = "he admissible";
        v = admissibility::he_admissible(s);
      }
      if (v.witness) stderr_note = v.witness->message;
      json seq = json::array();
      for (const auto& e : s.e) seq.push_back(io::to_json(e));
      return Report{"check-seq",
                    {{name, v.admissible ? Outcome::pass : Outcome::fail,
                      v.witness ? v.witness->message : s.str()}},
                    json{{"entries", seq}}};
    };
  });

  auto* enumerate = app.add_subcommand("enumerate", "List HE-admissible sequences");
  std::string enum_dim, enum_bound;
  enumerate->add_option("--dim", enum_dim, "dimension n")->required();
  enumerate->add_option("--bound", enum_bound, "upper bound on e0")->required();
  enumerate->callback([&] {
    action = [&] {
      const std::uint64_t n = to_count(parse_integer(enum_dim), "dim");
      const std::uint64_t bound = to_count(parse_integer(enum_bound), "bound");
      const auto found = admissibility::enumerate_he(n, bound);
      json rows = json::array();
      for (const auto& s : found) {
        json row = json::array();
        for (const auto& e : s.e) row.push_back(io::to_json(e));
        rows.push_back(row);
      }
      return Report{"enumerate", {},
                    json{{"dim", n}, {"bound", bound}, {"count", found.size()}, {"sequences", rows}}};
    };
  });

  auto* example = app.add_subcommand("example", "Rebuild a worked example");
  std::string example_name;
  std::vector<std::string> example_params;
  std::optional<std::string> save_path;
  example->add_option("name", example_name, "example name")->required();
  example->add_option("params", example_params, "example parameters");
  example->add_option("--save", save_path, "write the example catalog JSON here");
  example->callback([&] {
    action = [&] {
      Report r = run_example(example_name, example_params);
      if (save_path) {
        if (!r.payload || !r.payload->contains("catalog")) {
          throw Error(ErrorKind::InvalidArgument, "example " + example_name + " has no catalog");
        }
        std::ofstream file(*save_path);
        if (!file) throw Error(ErrorKind::Parse, "cannot write '" + *save_path + "'");
        file << (*r.payload)["catalog"].dump(2) << '\n';
      }
      return r;
    };
  });

  auto* birational = app.add_subcommand("birational", "Birational invariance of two regular catalogs");
  std::string bir_a, bir_b;
  birational->add_option("a", bir_a, "catalog JSON")->required();
  birational->add_option("b", bir_b, "catalog JSON")->required();
  birational->callback([&] {
    action = [&] {
      return Report{"birational", {check_birational_invariance(catalog_file(bir_a), catalog_file(bir_b))},
                    std::nullopt};
    };
  });

  auto* henselian = app.add_subcommand("henselian", "Generic-fiber chi against special-fiber multiplicities");
  std::string hens_chi;
  std::vector<std::string> multiplicities;
  henselian->add_option("--chi", hens_chi, "chi of the generic fiber")->required();
  henselian->add_option("multiplicities", multiplicities, "special fiber multiplicities")->required();
  henselian->callback([&] {
    action = [&] {
      std::vector<Integer> ms;
      for (const auto& m : multiplicities) ms.push_back(parse_integer(m));
      return Report{"henselian", {henselian_fiber_check(parse_integer(hens_chi), ms)}, std::nullopt};
    };
  });

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  }

  try {
    const Report report = action();
    if (as_json) {
      out << report.to_json().dump(2) << '\n';
    } else {
      out << report.to_table(color_enabled());
    }
    if (!stderr_note.empty()) err << stderr_note << '\n';
    return report.exit_code();
  } catch (const Error& e) {
    err << "error [" << to_string(e.kind()) << "]: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace elw::cli
