#pragma once

#include <CLI11.hpp>

#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "camina/clifford.hpp"
#include "camina/corpus.hpp"
#include "camina/group_io.hpp"
#include "camina/linear_action.hpp"
#include "camina/property_d.hpp"
#include "camina/report.hpp"

namespace camina::cli {

enum ExitCode { ok = 0, usage = 1, violation = 2 };

namespace detail {

inline std::string ids(const Subgroup& H) {
  std::string s;
  for (auto x : H.elements()) s += (s.empty() ? "" : ",") + std::to_string(x);
  return s;
}

inline std::vector<Element> parse_ids(const std::string& text) {
  std::vector<Element> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
      throw ContractViolation("--normal expects comma-separated element ids or auto-minimal, got '" + text + "'");
    out.push_back(static_cast<Element>(std::stoul(tok)));
  }
  return out;
}

// N from generator ids, or every minimal normal subgroup.
inline std::vector<Subgroup> choose_normals(const Group& G, const std::string& spec, const Bounds& bounds) {
  if (spec == "auto-minimal") return minimal_normal_subgroups(G, bounds);
  const auto gens = parse_ids(spec);
  for (auto g : gens)
    if (g >= G.order()) throw ContractViolation("element id " + std::to_string(g) + " out of range");
  auto N = generate(G, gens);
  if (!N.is_normal()) throw NotNormal("subgroup generated by " + spec + " is not normal");
  return {N};
}

inline void add_pair(Report& r, const std::string& pre, const PairReport& p) {
  r.add(pre + "normal", p.normal);
  r.add(pre + "normal-order", p.normal_order);
  r.add(pre + "p", p.p);
  r.add(pre + "n", p.n);
  r.add(pre + "property-D", p.property_D);
  r.add(pre + "degrees", p.degrees);
  r.add(pre + "camina-centralizer", p.camina_centralizer);
  r.add(pre + "camina-vanishing", p.camina_vanishing);
  r.add(pre + "unique-minimal-normal", p.unique_minimal_normal);
  r.add(pre + "o-p-prime-trivial", p.o_p_prime_trivial);
  r.add(pre + "pprime-fixed-point-free", p.pprime_fpf);
  r.add(pre + "type", to_string(p.type));
  r.add(pre + "kuisch", p.kuisch ? std::string(to_string(*p.kuisch)) : std::string("n/a"));
  for (const auto& [k, v] : p.evidence) r.add(pre + "evidence." + k, v);
}

inline Report info_report(const Group& G, const Bounds& bounds) {
  Report r;
  r.add("label", G.label());
  r.add("order", G.order());
  const auto& cc = G.classes();
  std::vector<std::size_t> sizes;
  for (std::size_t c = 0; c < cc.count(); ++c) sizes.push_back(cc.size(c));
  r.add("classes", cc.count());
  r.add("class-sizes", sizes);
  r.add("exponent", G.exponent());
  r.add("abelian", G.is_abelian());
  r.add("nilpotent", is_nilpotent(G, bounds));
  r.add("supersolvable", is_supersolvable(G, bounds));
  r.add("solvable", is_solvable(G, bounds));
  r.add("center-order", center(G).order());
  r.add("derived-order", derived_subgroup(G).order());
  const auto normals = normal_subgroups(G, bounds);
  r.add("normal-subgroups", normals.size());
  std::vector<std::size_t> mins;
  for (const auto& N : minimal_normal_subgroups(G, bounds)) mins.push_back(N.order());
  r.add("minimal-normal-orders", mins);
  std::vector<std::size_t> chief;
  for (const auto& f : chief_series(G, bounds)) chief.push_back(f.factor.image.order());
  r.add("chief-factor-orders", chief);
  if (G.is_abelian()) r.add("abelian-invariants", abelian_invariants(G));
  return r;
}

inline Report table_report(const CharacterTable& T) {
  Report r;
  const auto& G = T.group();
  const auto& cc = T.classes();
  r.add("label", G.label());
  r.add("order", G.order());
  r.add("classes", cc.count());
  r.add("prime", T.prime());
  for (std::size_t c = 0; c < cc.count(); ++c) {
    const auto pre = "class." + std::to_string(c) + ".";
    r.add(pre + "representative", cc.representative[c]);
    r.add(pre + "size", cc.size(c));
    r.add(pre + "element-order", G.element_order(cc.representative[c]));
  }
  for (std::size_t i = 0; i < T.size(); ++i) {
    std::string s;
    for (const auto& v : T.row(i).values) s += (s.empty() ? "" : ",") + v.to_string();
    r.add("chi." + std::to_string(i), s);
  }
  return r;
}

inline void add_triple(Report& r, const std::string& pre, const Section& S, std::size_t t, SectionCache& cache,
                       const Bounds& bounds) {
  const auto tr = make_triple(S, t);
  r.add(pre + "degree", tr.theta_char().degree);
  r.add(pre + "orbit-size", tr.orbit.size());
  r.add(pre + "stabilizer-order", tr.stabilizer.order());
  std::string above;
  for (const auto& a : tr.above) above += (above.empty() ? "" : ",") + std::to_string(a.row) + ":" + std::to_string(a.multiplicity);
  r.add(pre + "above", above);
  const auto fr = is_fully_ramified(tr, bounds, &cache);
  r.add(pre + "fully-ramified", fr.fully_ramified);
  if (fr) r.add(pre + "ramification", fr.e);
  const auto h = verify_higgs_case(tr, bounds, &cache);
  r.add(pre + "invariant", h.invariant);
  r.add(pre + "distinct-degrees", h.distinct_degrees);
  r.add(pre + "quotient", to_string(h.quotient));
  check_two_characters(tr);
  check_degree_bookkeeping(tr, bounds, &cache);
  r.add(pre + "abelian-fully-ramified", check_abelian_fully_ramified(tr));
  r.add(pre + "checks", "passed");
}

inline Report orbit_report(const LinearAction& a) {
  Report r;
  r.add("prime", a.prime());
  r.add("dimension", a.dim());
  r.add("group-order", a.group_order());
  r.add("orbit-sizes", orbit_sizes(a));
  r.add("transitive-nonzero", is_transitive_nonzero(a));
  r.add("regular-orbits", regular_orbit_count(a));
  const auto scan = distinct_sizes_scan(a);
  r.add("irreducible", scan.irreducible);
  r.add("distinct-sizes", scan.distinct);
  r.add("lemma-hypothesis", scan.hypothesis);
  r.add("negation-pairing", a.prime() == 2 ? std::string("n/a") : std::string(negation_pairing(a) ? "true" : "false"));
  if (a.prime() != 2 && a.group_order() % 2 == 1)
    r.add("dade-duplicate", dade_duplicate_check(a));
  else
    r.add("dade-duplicate", "n/a");
  return r;
}

}  // namespace detail

/// Runs the command line. Reports go to out, diagnostics to err.
inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact character tables and character-theory checks for small finite groups", "camina"};
  app.require_subcommand(1);
  Bounds bounds{5000, 512};

  std::string file;
  auto* info = app.add_subcommand("info", "Group structure summary");
  info->add_option("file", file, "Group file")->required();

  auto* table = app.add_subcommand("table", "Character table");
  table->add_option("file", file, "Group file")->required();

  std::string normal_spec = "auto-minimal";
  auto* analyze = app.add_subcommand("analyze", "Clifford data for every character of a normal subgroup");
  analyze->add_option("--pair", file, "Group file")->required();
  analyze->add_option("--normal", normal_spec, "Comma-separated generator ids, or auto-minimal");

  auto* classify = app.add_subcommand("classify", "Property (D) classification over normal subgroups");
  classify->add_option("file", file, "Group file")->required();
  auto* cl_normal = classify->add_option("--normal", normal_spec, "Comma-separated generator ids");
  classify->add_flag("--auto-minimal", "Use every minimal normal subgroup (default)")->excludes(cl_normal);

  std::string filter;
  auto* corpus_cmd = app.add_subcommand("corpus", "Run every check over the shipped corpus");
  corpus_cmd->add_option("--filter", filter, "Only entries whose name contains this text");

  std::uint32_t prime = 0, dim = 0;
  auto* orbits = app.add_subcommand("orbits", "Orbits of a matrix group on GF(p)^n");
  orbits->add_option("--prime", prime, "Field characteristic")->required();
  orbits->add_option("--dim", dim, "Dimension")->required();
  orbits->add_option("--gens", file, "Generator file, one row-major matrix per line")->required();

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? ok : usage;
  }

  Report rep;
  auto emit = [&] { out << rep.str(); };
  try {
    if (*info) {
      rep = detail::info_report(load_group(file), bounds);
    } else if (*table) {
      rep = detail::table_report(compute_table(load_group(file), bounds));
    } else if (*classify) {
      const auto G = load_group(file);
      const auto T = compute_table(G, bounds);
      rep.add("label", G.label());
      rep.add("order", G.order());
      const auto normals = detail::choose_normals(G, normal_spec, bounds);
      rep.add("pairs", normals.size());
      for (std::size_t i = 0; i < normals.size(); ++i)
        detail::add_pair(rep, "pair." + std::to_string(i) + ".", classify_theorem_A(T, normals[i], bounds));
    } else if (*analyze) {
      const auto G = load_group(file);
      const auto T = compute_table(G, bounds);
      rep.add("label", G.label());
      rep.add("order", G.order());
      const auto normals = detail::choose_normals(G, normal_spec, bounds);
      rep.add("pairs", normals.size());
      SubgroupTables tables;
      for (std::size_t i = 0; i < normals.size(); ++i) {
        const auto pre = "pair." + std::to_string(i) + ".";
        const auto& N = normals[i];
        if (!N.is_trivial() && !N.is_whole()) detail::add_pair(rep, pre, classify_theorem_A(T, N, bounds));
        else rep.add(pre + "normal", detail::ids(N));
        const Section S(T, N, bounds);
        SectionCache cache;
        cache.tables = &tables;
        for (std::size_t t = 0; t < S.normal_table().size(); ++t)
          detail::add_triple(rep, pre + "theta." + std::to_string(t) + ".", S, t, cache, bounds);
      }
    } else if (*corpus_cmd) {
      auto run = run_corpus(filter, bounds);
      rep = std::move(run.report);
      emit();
      if (run.totals.errors) return usage;
      return run.totals.violations || run.totals.mismatches ? violation : ok;
    } else if (*orbits) {
      std::ifstream in(file);
      if (!in) throw Error("cannot open " + file);
      const auto gens = read_matrices(in, prime, dim);
      rep = detail::orbit_report(LinearAction(prime, dim, gens));
    }
  } catch (const TheoremViolation& v) {
    rep.add("violation", v.what());
    emit();
    err << "camina: theorem violation: " << v.what() << "\n";
    return violation;
  } catch (const std::exception& e) {
    err << "camina: " << e.what() << "\n";
    return usage;
  }
  emit();
  return ok;
}

inline int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(std::move(args), out, err);
}

}  // namespace camina::cli
