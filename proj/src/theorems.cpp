#include "pgq/theorems.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "pgq/error.hpp"
#include "pgq/field.hpp"
#include "pgq/grassmann.hpp"
#include "pgq/kernels.hpp"

namespace pgq {

void TheoremReport::add(std::string clause, bool pass, std::string witness) {
  clauses.push_back({std::move(clause), pass, std::move(witness)});
}

bool TheoremReport::all_pass() const {
  return !clauses.empty() &&
         std::all_of(clauses.begin(), clauses.end(), [](const auto& c) { return c.pass; });
}

const ClauseVerdict* TheoremReport::find(const std::string& clause) const {
  for (const auto& c : clauses)
    if (c.clause == clause) return &c;
  return nullptr;
}

std::string TheoremReport::render() const {
  std::ostringstream out;
  for (const auto& [k, v] : facts) out << k << ' ' << v << '\n';
  for (const auto& c : clauses) {
    out << "THM" << theorem << '.' << c.clause << (c.pass ? " PASS" : " FAIL");
    if (!c.witness.empty()) out << ' ' << c.witness;
    out << '\n';
  }
  return out.str();
}

BigInt pgl_order(int n, int q) {
  BigInt qq = q, num = 1;
  const BigInt top = boost::multiprecision::pow(qq, n + 1);
  for (int i = 0; i <= n; ++i) num *= top - boost::multiprecision::pow(qq, i);
  return num / (q - 1);
}

BigInt pgammal_order(int n, int q) { return pgl_order(n, q) * field_spec(q).k; }

const char* to_string(InstanceKind k) {
  switch (k) {
    case InstanceKind::Collineation: return "collineation";
    case InstanceKind::Duality: return "duality";
    case InstanceKind::Perturbed: return "perturbed";
  }
  return "?";
}

std::optional<InstanceKind> parse_instance_kind(const std::string& s) {
  if (s == "collineation") return InstanceKind::Collineation;
  if (s == "duality") return InstanceKind::Duality;
  if (s == "perturbed") return InstanceKind::Perturbed;
  return std::nullopt;
}

namespace {

std::pair<Matrix, int> random_semilinear(SplitMix64& rng, const ProjSpace& sp) {
  const int w = sp.width();
  Matrix m(w, w);
  do {
    for (auto& e : m.data) e = static_cast<Elem>(rng.below(static_cast<std::uint64_t>(sp.q())));
  } while (rank(sp.field(), m) != w);
  const int a = static_cast<int>(rng.below(static_cast<std::uint64_t>(sp.field().degree())));
  return {std::move(m), a};
}

void require_twins(const ProjSpace& sp, const ProjSpace& tgt) {
  if (sp.n() != tgt.n() || sp.q() != tgt.q())
    throw IncompatibleSpaces("instances need equal source and target parameters");
}

void require_theorem_hypotheses(const LineMap& lm) {
  if (!is_bijective(lm)) throw PreconditionViolated("line map is not bijective");
  if (!preserves_intersections(lm))
    throw PreconditionViolated("line map does not preserve intersections");
  if (lm.target->dimension() < 3) throw PreconditionViolated("target dimension below 3");
}

std::string seed_witness(InstanceKind kind, std::uint64_t seed, const std::string& w) {
  std::string s = std::string(to_string(kind)) + " seed " + std::to_string(seed);
  if (!w.empty()) s += ": " + w;
  return s;
}

}  // namespace

Collineation random_collineation(SplitMix64& rng, const ProjSpace& sp) {
  auto [m, a] = random_semilinear(rng, sp);
  return {std::move(m), a};
}

Duality random_duality(SplitMix64& rng, const ProjSpace& sp) {
  if (sp.n() != 3) throw IncompatibleSpaces("dualities need n = 3");
  auto [m, a] = random_semilinear(rng, sp);
  return {std::move(m), a};
}

Instance generate(const InstanceGenerator& gen, const ProjSpace& sp, const ProjSpace& tgt) {
  require_twins(sp, tgt);
  SplitMix64 rng(gen.seed);
  Instance inst;
  switch (gen.kind) {
    case InstanceKind::Duality: {
      const auto d = random_duality(rng, sp);
      inst.map = duality_line_map(d, sp, tgt);
      inst.generating_points = duality_plane_map(d, sp, tgt);
      break;
    }
    case InstanceKind::Collineation:
    case InstanceKind::Perturbed: {
      const auto c = random_collineation(rng, sp);
      const auto pm = collineation_point_map(c, sp, tgt);
      inst.map = induced_line_map(pm);
      inst.generating_points = pm.image;
      if (gen.kind == InstanceKind::Perturbed) {
        const auto lines = static_cast<std::uint64_t>(sp.line_count());
        const int a = static_cast<int>(rng.below(lines));
        int b = static_cast<int>(rng.below(lines - 1));
        if (b >= a) ++b;
        std::swap(inst.map.image[a], inst.map.image[b]);
        inst.swapped = {a, b};
      }
      break;
    }
  }
  return inst;
}

LineMap generate_instance(const InstanceGenerator& gen, const ProjSpace& sp, const ProjSpace& tgt) {
  return generate(gen, sp, tgt).map;
}

TheoremReport verify_theorem1(const LineMap& lm) {
  require_theorem_hypotheses(lm);
  TheoremReport rep;
  rep.theorem = 1;

  const KappaReport kr = reconstruct_point_map(lm);
  const int tdim = lm.target->dimension();
  const bool induced = kr.status == KappaStatus::InducedIntoTarget ||
                       (tdim == 3 && kr.status == KappaStatus::InducedIntoDual);
  std::string ab_witness;
  bool ab = induced;
  if (!induced) {
    ab_witness = std::string("kappa status ") + to_string(kr.status) + "; " + kr.witness;
  } else {
    const MapClass cls = classify_point_map(kr.kappa);
    ab = cls == MapClass::Embedding || cls == MapClass::Collineation;
    if (!ab) ab_witness = std::string("kappa classifies as ") + to_string(cls);
  }
  rep.add(tdim >= 4 ? "a" : "b", ab, ab_witness);
  rep.facts.emplace_back("kappa", to_string(kr.status));

  const int sdim = lm.source->dimension();
  rep.add("c", sdim >= tdim,
          sdim >= tdim ? "" : std::to_string(sdim) + " < " + std::to_string(tdim));

  if (!induced) {
    rep.add("eq2", false, "kappa undefined");
    rep.add("d", false, "kappa undefined");
    rep.add("gap", false, "kappa undefined");
    return rep;
  }

  const Geometry& kt = *kr.kappa.target;
  const Geometry& src = *lm.source;
  std::string eq2_witness, d_witness;
  for (int q = 0; q < src.point_count() && eq2_witness.empty(); ++q) {
    std::vector<int> images;
    for (int l : src.lines_through(q)) images.push_back(lm.image[l]);
    std::sort(images.begin(), images.end());
    auto st = kt.lines_through(kr.kappa.image[q]);
    if (!std::equal(images.begin(), images.end(), st.begin(), st.end()))
      eq2_witness = "point " + std::to_string(q);
  }
  rep.add("eq2", eq2_witness.empty(), eq2_witness);

  for (int q = 0; q < src.point_count() && d_witness.empty(); ++q) {
    const auto r = restrict_to_star(lm, q, kr.kappa);
    const auto f = check_properties(r.map);
    if (!(f.injective && f.surjective && f.collinear))
      d_witness = "star of point " + std::to_string(q) + " is not a semicollineation";
  }
  rep.add("d", d_witness.empty(), d_witness);

  std::string gap_witness;
  if (!kr.star_dichotomy) gap_witness = "a target star pulls back to neither a star nor a skew family";
  rep.add("gap", kr.star_dichotomy, gap_witness);
  rep.facts.emplace_back("unreached_points", std::to_string(kr.skew_preimage_points.size()));
  return rep;
}

bool Theorem2Predicates::all_equal() const {
  return induced_by_collineation == preserves_skew && preserves_skew == star_collineation &&
         star_collineation == pencil_to_pencil;
}

bool Theorem2Predicates::all_true() const {
  return induced_by_collineation && preserves_skew && star_collineation && pencil_to_pencil;
}

Theorem2Predicates theorem2_predicates(const LineMap& lm) {
  require_theorem_hypotheses(lm);
  KappaReport kr = reconstruct_point_map(lm);
  LineMap view = lm;
  KappaReport dual_kr;
  if (kr.status == KappaStatus::InducedIntoDual) {
    view.target = kr.dual_target.get();
    dual_kr = reconstruct_point_map(view);
  }
  const KappaReport& k = kr.status == KappaStatus::InducedIntoDual ? dual_kr : kr;

  Theorem2Predicates p;
  p.induced_by_collineation = k.status == KappaStatus::InducedIntoTarget &&
                              classify_point_map(k.kappa) == MapClass::Collineation;
  p.preserves_skew = preserves_skewness(view);

  const Geometry& src = *view.source;
  for (int q = 0; q < src.point_count() && !p.star_collineation; ++q) {
    if (k.kappa.image[q] < 0) continue;
    const auto r = restrict_to_star(view, q, k.kappa);
    p.star_collineation = classify_point_map(r.map) == MapClass::Collineation;
  }

  for (int q = 0; q < src.point_count() && !p.pencil_to_pencil; ++q) {
    const auto quo = quotient(src, q);
    const auto labels = quo.point_labels();
    for (int pl = 0; pl < quo.line_count(); ++pl) {
      std::vector<int> images;
      for (int i : quo.line_points(pl)) images.push_back(view.image[labels[i]]);
      if (is_pencil(*view.target, std::move(images))) {
        p.pencil_to_pencil = true;
        break;
      }
    }
  }
  return p;
}

TheoremReport verify_theorem2(const LineMap& lm) {
  const auto p = theorem2_predicates(lm);
  TheoremReport rep;
  rep.theorem = 2;
  rep.add("a", p.induced_by_collineation);
  rep.add("b", p.preserves_skew);
  rep.add("c", p.star_collineation);
  rep.add("d", p.pencil_to_pencil);
  rep.add("equiv", p.all_equal());
  return rep;
}

TheoremReport verify_theorem3_preconditions(const ProjSpace& sp, const ProjSpace& tgt) {
  TheoremReport rep;
  rep.theorem = 3;
  rep.instance = "PG(" + std::to_string(sp.n()) + "," + std::to_string(sp.q()) + ") -> PG(" +
                 std::to_string(tgt.n()) + "," + std::to_string(tgt.q()) + ")";
  const bool a = sp.n() <= tgt.n();
  rep.add("a", a, a ? "" : "dim " + std::to_string(sp.n()) + " > " + std::to_string(tgt.n()));
  rep.add("b", true);
  const bool c = monomorphisms_all_surjective(sp.field().spec(), tgt.field().spec());
  rep.add("c", c,
          c ? "" : "GF(" + std::to_string(sp.q()) + ") embeds properly in GF(" +
                       std::to_string(tgt.q()) + ")");
  return rep;
}

ShadowResult theorem3_shadow(const ProjSpace& sp, int samples, std::uint64_t seed) {
  ShadowResult res;
  res.instances = samples;
  std::vector<int> outcome(samples, 0);  // 0 fails (1), 1 chain passes, 2 counterexample
#pragma omp parallel for schedule(dynamic, 8)
  for (int i = 0; i < samples; ++i) {
    const auto lm = generate_instance({seed + static_cast<std::uint64_t>(i), InstanceKind::Perturbed}, sp, sp);
    if (!is_bijective(lm) || !preserves_intersections(lm)) {
      outcome[i] = 0;
      continue;
    }
    outcome[i] = theorem2_predicates(lm).all_true() ? 1 : 2;
  }
  for (int i = 0; i < samples; ++i) {
    if (outcome[i] == 0) ++res.fail_condition1;
    if (outcome[i] == 1) ++res.pass_chain;
    if (outcome[i] == 2) {
      ++res.counterexamples;
      res.counterexample_seeds.push_back(seed + static_cast<std::uint64_t>(i));
    }
  }
  return res;
}

ChowResult enumerate_induced_permutations(const ProjSpace& sp, std::uint64_t budget) {
  if (sp.n() != 3) throw UnsupportedDimension("enumeration is set up for PG(3,q)");
  const BigInt total = pgammal_order(3, sp.q()) * 2;
  if (total > BigInt(budget))
    throw BudgetExceeded("enumerating " + total.str() + " maps exceeds the budget");

  // One matrix per projectivity: first nonzero entry equal to 1.
  const int q = sp.q();
  std::uint64_t count = 1;
  for (int i = 0; i < 16; ++i) count *= static_cast<std::uint64_t>(q);
  std::vector<Matrix> matrices;
  Matrix m(4, 4);
  for (std::uint64_t code = 0; code < count; ++code) {
    std::uint64_t c = code;
    for (int i = 15; i >= 0; --i, c /= static_cast<std::uint64_t>(q)) m.data[i] = static_cast<Elem>(c % q);
    auto lead = std::find_if(m.data.begin(), m.data.end(), [](Elem e) { return e != 0; });
    if (lead == m.data.end() || *lead != 1) continue;
    if (rank(sp.field(), m) == 4) matrices.push_back(m);
  }

  std::vector<std::vector<int>> coll;
  for (int a = 0; a < sp.field().degree(); ++a) {
    auto part = kernels::parallel::semilinear_line_images(sp, matrices, a);
    std::move(part.begin(), part.end(), std::back_inserter(coll));
  }

  const LineMap delta = duality_line_map({Matrix::identity(4), 0}, sp, sp);
  std::vector<std::vector<int>> dual(coll.size(), std::vector<int>(sp.line_count()));
  for (std::size_t i = 0; i < coll.size(); ++i)
    for (int l = 0; l < sp.line_count(); ++l) dual[i][l] = delta.image[coll[i][l]];

  ChowResult res;
  res.collineation_permutations = coll.size();
  res.duality_permutations = dual.size();

  auto is_aut = [&](const std::vector<int>& perm) {
    for (int a = 0; a < sp.line_count(); ++a)
      for (int b = a + 1; b < sp.line_count(); ++b)
        if (sp.common_point(a, b).has_value() != sp.common_point(perm[a], perm[b]).has_value())
          return false;
    return true;
  };
  bool all_aut = true;
  const auto nc = static_cast<std::int64_t>(coll.size());
#pragma omp parallel for schedule(dynamic, 64) reduction(&& : all_aut)
  for (std::int64_t i = 0; i < nc; ++i) all_aut = all_aut && is_aut(coll[i]) && is_aut(dual[i]);
  res.all_automorphisms = all_aut;

  std::sort(coll.begin(), coll.end());
  coll.erase(std::unique(coll.begin(), coll.end()), coll.end());
  res.distinct_collineation_permutations = coll.size();
  std::sort(dual.begin(), dual.end());
  dual.erase(std::unique(dual.begin(), dual.end()), dual.end());

  std::vector<std::vector<int>> both;
  std::set_intersection(coll.begin(), coll.end(), dual.begin(), dual.end(),
                        std::back_inserter(both));
  res.cosets_disjoint = both.empty();
  res.distinct_total = coll.size() + dual.size() - both.size();
  return res;
}

TheoremReport chow_crosscheck(const ProjSpace& sp, std::uint64_t node_budget) {
  if (sp.n() != 3) throw UnsupportedDimension("Chow cross-check is set up for n = 3");
  if (sp.line_count() > kMaxAutomorphismVertices)
    throw TooLarge("Grassmann graph too large for the automorphism search");

  const auto g = build_grassmann(sp);
  const auto aut = automorphism_group(g, node_budget);
  const auto en = enumerate_induced_permutations(sp, node_budget);

  TheoremReport rep;
  rep.theorem = 2;
  rep.instance = "PG(3," + std::to_string(sp.q()) + ")";
  rep.facts.emplace_back("graph_order", aut.group_order.str());
  rep.facts.emplace_back("group_order", std::to_string(en.distinct_total));
  const BigInt expected = pgammal_order(3, sp.q());
  rep.add("chow_injective", BigInt(en.distinct_collineation_permutations) == expected,
          std::to_string(en.distinct_collineation_permutations) + " distinct of " + expected.str());
  rep.add("chow_disjoint", en.cosets_disjoint);
  rep.add("chow_automorphisms", en.all_automorphisms);
  rep.add("chow", aut.group_order == BigInt(en.distinct_total),
          aut.group_order == BigInt(en.distinct_total)
              ? ""
              : aut.group_order.str() + " != " + std::to_string(en.distinct_total));
  return rep;
}

std::optional<Suite> parse_suite(const std::string& s) {
  if (s == "thm1") return Suite::Thm1;
  if (s == "thm2") return Suite::Thm2;
  if (s == "thm3") return Suite::Thm3;
  if (s == "chow") return Suite::Chow;
  return std::nullopt;
}

namespace {

TheoremReport run_population(int theorem, const ProjSpace& sp, const SuiteOptions& opt) {
  std::vector<InstanceKind> kinds{InstanceKind::Collineation};
  if (sp.n() == 3) kinds.push_back(InstanceKind::Duality);

  const int per_kind = opt.samples;
  const int total = per_kind * static_cast<int>(kinds.size());
  std::vector<TheoremReport> reports(total);
  std::vector<std::string> errors(total);
#pragma omp parallel for schedule(dynamic, 1)
  for (int i = 0; i < total; ++i) {
    const InstanceKind kind = kinds[i / per_kind];
    const std::uint64_t seed = opt.seed + static_cast<std::uint64_t>(i % per_kind);
    try {
      const auto lm = generate_instance({seed, kind}, sp, sp);
      reports[i] = theorem == 1 ? verify_theorem1(lm) : verify_theorem2(lm);
    } catch (const Error& e) {
      errors[i] = e.what();
    }
  }

  TheoremReport merged;
  merged.theorem = theorem;
  merged.facts.emplace_back("instances", std::to_string(total));
  std::vector<std::string> order;
  std::map<std::string, ClauseVerdict> acc;
  std::string hypotheses_witness;
  for (int i = 0; i < total; ++i) {
    const InstanceKind kind = kinds[i / per_kind];
    const std::uint64_t seed = opt.seed + static_cast<std::uint64_t>(i % per_kind);
    if (!errors[i].empty()) {
      if (hypotheses_witness.empty()) hypotheses_witness = seed_witness(kind, seed, errors[i]);
      continue;
    }
    for (const auto& c : reports[i].clauses) {
      auto [it, fresh] = acc.try_emplace(c.clause, ClauseVerdict{c.clause, true, {}});
      if (fresh) order.push_back(c.clause);
      if (!c.pass && it->second.pass) {
        it->second.pass = false;
        it->second.witness = seed_witness(kind, seed, c.witness);
      }
    }
  }
  merged.add("hypotheses", hypotheses_witness.empty(), hypotheses_witness);
  for (const auto& name : order) merged.clauses.push_back(acc[name]);
  return merged;
}

}  // namespace

TheoremReport run_suite(Suite suite, const ProjSpace& sp, const SuiteOptions& opt) {
  switch (suite) {
    case Suite::Thm1: return run_population(1, sp, opt);
    case Suite::Thm2: return run_population(2, sp, opt);
    case Suite::Thm3: {
      const ProjSpace& tgt = opt.target ? *opt.target : sp;
      TheoremReport rep = verify_theorem3_preconditions(sp, tgt);
      const auto shadow = theorem3_shadow(sp, opt.samples, opt.seed);
      rep.facts.emplace_back("instances", std::to_string(shadow.instances));
      rep.facts.emplace_back("fail_condition1", std::to_string(shadow.fail_condition1));
      rep.facts.emplace_back("pass_chain", std::to_string(shadow.pass_chain));
      rep.add("shadow", shadow.counterexamples == 0,
              shadow.counterexamples == 0
                  ? ""
                  : "perturbed seed " + std::to_string(shadow.counterexample_seeds.front()));
      return rep;
    }
    case Suite::Chow: return chow_crosscheck(sp, opt.budget);
  }
  throw Error("unknown suite");
}

}  // namespace pgq
