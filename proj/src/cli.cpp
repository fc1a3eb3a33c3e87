#include "pgq/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include "pgq/error.hpp"
#include "pgq/formats.hpp"
#include "pgq/grassmann.hpp"
#include "pgq/maps.hpp"
#include "pgq/projspace.hpp"

namespace pgq::cli {

namespace {

struct IoError : Error {
  using Error::Error;
};

int exit_code(const std::exception& e) {
  if (dynamic_cast<const ParseError*>(&e)) return kParse;
  if (dynamic_cast<const IoError*>(&e)) return kIo;
  if (dynamic_cast<const BudgetExceeded*>(&e)) return kBudget;
  if (dynamic_cast<const Error*>(&e)) return kBadParams;
  return kBadParams;
}

template <class F>
int guarded(std::ostream& err, F&& body) {
  try {
    return body();
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return exit_code(e);
  }
}

void write_text(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot open " + path + " for writing");
  f << text;
  f.close();
  if (!f) throw IoError("write to " + path + " failed");
}

std::string read_text(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot open " + path);
  std::ostringstream s;
  s << f.rdbuf();
  if (f.bad()) throw IoError("read from " + path + " failed");
  return s.str();
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

}  // namespace

int cmd_stats(int n, int q, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const ProjSpace sp(n, q);
    std::set<int> met;
    for (int p : sp.line_points(0))
      for (int l : sp.lines_through(p))
        if (l != 0) met.insert(l);
    out << "points " << sp.point_count() << "\nlines " << sp.line_count() << "\nstar "
        << sp.lines_through(0).size() << "\npencil " << sp.line_points(0).size() << "\ndegree "
        << met.size() << '\n';
    return kOk;
  });
}

int cmd_graph(int n, int q, const std::string& out_path, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const ProjSpace sp(n, q);
    write_text(out_path, export_graph(build_grassmann(sp)), out);
    return kOk;
  });
}

int cmd_aut(int n, int q, std::uint64_t budget, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const ProjSpace sp(n, q);
    if (sp.line_count() > kMaxAutomorphismVertices)
      throw TooLarge(std::to_string(sp.line_count()) + " lines exceed the automorphism limit of " +
                     std::to_string(kMaxAutomorphismVertices));
    out << automorphism_group(build_grassmann(sp), budget).group_order << '\n';
    return kOk;
  });
}

int cmd_gen(int n, int q, InstanceKind kind, std::uint64_t seed, const std::string& out_path,
            std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const ProjSpace sp(n, q);
    MapFile f{n, q, n, q, kind == InstanceKind::Duality, {}};
    f.image = generate_instance({seed, kind}, sp, sp).image;
    write_text(out_path, serialize_map(f), out);
    return kOk;
  });
}

int cmd_check(const std::string& in_path, const std::string& out_path, std::ostream& out,
              std::ostream& err) {
  return guarded(err, [&] {
    const MapFile f = parse_map(read_text(in_path));
    const ProjSpace src(f.n, f.q), tgt(f.tn, f.tq);
    const LineMap lm{&src, &tgt, f.image};

    const bool bij = is_bijective(lm);
    const bool meet = preserves_intersections(lm);
    const bool skew = preserves_skewness(lm);
    out << "BIJECTIVE " << yes_no(bij) << "\nPRESERVES-INTERSECTIONS " << yes_no(meet)
        << "\nPRESERVES-SKEW " << yes_no(skew) << '\n';

    bool iso = false;
    if (bij && meet && tgt.dimension() >= 3) {
      const KappaReport kr = reconstruct_point_map(lm);
      const bool defined = kr.status != KappaStatus::Mixed;
      const MapClass cls = defined ? classify_point_map(kr.kappa) : MapClass::Other;
      out << "KAPPA " << to_string(kr.status) << ' ' << (defined ? to_string(cls) : "-") << '\n';
      const auto expected = f.dual ? KappaStatus::InducedIntoDual : KappaStatus::InducedIntoTarget;
      iso = skew && kr.status == expected && cls == MapClass::Collineation;
    } else {
      out << "KAPPA Mixed -\n";
    }

    const char* verdict = !bij ? "NOT-BIJECTIVE"
                          : !meet ? "NOT-PRESERVING"
                          : iso  ? "ISOMORPHISM"
                                 : "NOT-ISOMORPHISM";
    out << "VERDICT " << verdict << '\n';
    if (!out_path.empty()) write_text(out_path, serialize_map(f), out);
    return iso ? kOk : kNegative;
  });
}

int cmd_verify(const VerifyArgs& a, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (a.samples < 1) throw Error("--samples must be positive");
    const ProjSpace sp(a.n, a.q);
    std::optional<ProjSpace> target;
    if (a.target_n || a.target_q) {
      if (a.suite != Suite::Thm3) throw Error("--target-n/--target-q apply to the thm3 suite only");
      target.emplace(a.target_n.value_or(a.n), a.target_q.value_or(a.q));
    }
    SuiteOptions opt;
    opt.samples = a.samples;
    opt.seed = a.seed;
    opt.budget = a.budget;
    opt.target = target ? &*target : nullptr;
    const TheoremReport rep = run_suite(a.suite, sp, opt);
    out << rep.render();
    return rep.all_pass() ? kOk : kNegative;
  });
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite projective spaces, Grassmann graphs and line maps", "pgq"};
  app.require_subcommand(1);

  int n = 3, q = 2;
  std::uint64_t seed = 0, budget = 1'000'000;
  int samples = 100;
  std::string out_path, in_path, kind_name = "collineation", suite_name;
  std::optional<int> target_n, target_q;

  auto space_flags = [&](CLI::App* c) {
    c->add_option("-n", n, "projective dimension")->required();
    c->add_option("-q", q, "field order")->required();
  };

  auto* stats = app.add_subcommand("stats", "point, line, star, pencil and Grassmann degree counts");
  space_flags(stats);
  auto* graph = app.add_subcommand("graph", "export the Grassmann graph");
  space_flags(graph);
  graph->add_option("-o,--out", out_path, "output file");
  auto* aut = app.add_subcommand("aut", "order of the Grassmann graph automorphism group");
  space_flags(aut);
  aut->add_option("--budget", budget, "search node budget");
  auto* gen = app.add_subcommand("gen", "write a seeded line map instance");
  space_flags(gen);
  gen->add_option("--kind", kind_name, "collineation, duality or perturbed")
      ->check(CLI::IsMember({"collineation", "duality", "perturbed"}));
  gen->add_option("--seed", seed, "instance seed");
  gen->add_option("-o,--out", out_path, "output file");
  auto* check = app.add_subcommand("check", "check a line map file");
  check->add_option("input", in_path, "GRASSMAP file")->required();
  check->add_option("-o,--out", out_path, "write the re-serialized map here");
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  space_flags(verify);
  verify->add_option("--suite", suite_name, "thm1, thm2, thm3 or chow")
      ->required()
      ->check(CLI::IsMember({"thm1", "thm2", "thm3", "chow"}));
  verify->add_option("--samples", samples, "instances per kind");
  verify->add_option("--seed", seed, "first seed");
  verify->add_option("--budget", budget, "node budget for chow");
  verify->add_option("--target-n", target_n, "target dimension for thm3");
  verify->add_option("--target-q", target_q, "target field order for thm3");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  if (!rev.empty()) rev.pop_back();
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kBadParams;
  }

  if (stats->parsed()) return cmd_stats(n, q, out, err);
  if (graph->parsed()) return cmd_graph(n, q, out_path, out, err);
  if (aut->parsed()) return cmd_aut(n, q, budget, out, err);
  if (gen->parsed()) return cmd_gen(n, q, *parse_instance_kind(kind_name), seed, out_path, out, err);
  if (check->parsed()) return cmd_check(in_path, out_path, out, err);
  VerifyArgs va{*parse_suite(suite_name), n, q, samples, seed, budget, target_n, target_q};
  return cmd_verify(va, out, err);
}

}  // namespace pgq::cli
