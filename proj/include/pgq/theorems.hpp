#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pgq/bigint.hpp"
#include "pgq/maps.hpp"
#include "pgq/projspace.hpp"
#include "pgq/rng.hpp"

namespace pgq {

struct ClauseVerdict {
  std::string clause;
  bool pass = false;
  std::string witness;
};

/// Per-clause verdicts. Renders as "key value" fact lines followed by one
/// "THM<k>.<clause> PASS|FAIL [witness]" line per clause.
struct TheoremReport {
  int theorem = 0;
  std::string instance;
  std::vector<std::pair<std::string, std::string>> facts;
  std::vector<ClauseVerdict> clauses;

  void add(std::string clause, bool pass, std::string witness = {});
  bool all_pass() const;
  const ClauseVerdict* find(const std::string& clause) const;
  std::string render() const;
};

/// |PGL(n+1, q)|.
BigInt pgl_order(int n, int q);
/// |PGammaL(n+1, q)| = |PGL(n+1, q)| * k for q = p^k.
BigInt pgammal_order(int n, int q);

enum class InstanceKind { Collineation, Duality, Perturbed };
const char* to_string(InstanceKind k);
std::optional<InstanceKind> parse_instance_kind(const std::string& s);

struct InstanceGenerator {
  std::uint64_t seed = 0;
  InstanceKind kind = InstanceKind::Collineation;
};

/// Draws an invertible matrix (entries row-major from rng.below(q), redrawn
/// until invertible) and then an automorphism index rng.below(k).
Collineation random_collineation(SplitMix64& rng, const ProjSpace& sp);
Duality random_duality(SplitMix64& rng, const ProjSpace& sp);

struct Instance {
  LineMap map;
  /// Point images of the generating collineation, or plane ids of the
  /// generating duality (before any perturbation).
  std::vector<int> generating_points;
  /// Lines whose images were swapped (Perturbed only).
  std::pair<int, int> swapped{-1, -1};
};

/// Collineation: induced line map of a random collineation. Duality: line
/// map of a random duality (n = 3). Perturbed: a collineation instance with
/// the images of lines a = below(L) and b = below(L-1) (+1 if >= a) swapped.
/// Throws IncompatibleSpaces unless sp and tgt have equal n and q.
Instance generate(const InstanceGenerator& gen, const ProjSpace& sp, const ProjSpace& tgt);
LineMap generate_instance(const InstanceGenerator& gen, const ProjSpace& sp, const ProjSpace& tgt);

/// Clauses a/b (target dim >= 4 / = 3), c, d, plus eq2 (star images are
/// full target stars) and gap (target stars pull back to stars or to skew
/// families). Throws PreconditionViolated unless lm is bijective, preserves
/// intersections and the target has dimension >= 3.
TheoremReport verify_theorem1(const LineMap& lm);

struct Theorem2Predicates {
  bool induced_by_collineation = false;  // (a)
  bool preserves_skew = false;           // (b)
  bool star_collineation = false;        // (c) for at least one point
  bool pencil_to_pencil = false;         // (d) for at least one pencil
  bool all_equal() const;
  bool all_true() const;
};

/// Evaluates the four predicates; a dual-type map is read against the dual
/// space of its target. Throws PreconditionViolated as verify_theorem1.
Theorem2Predicates theorem2_predicates(const LineMap& lm);
TheoremReport verify_theorem2(const LineMap& lm);

/// Which sufficient conditions hold: (a) dim sp <= dim tgt, (b) finiteness
/// (always), (c) every field monomorphism is onto.
TheoremReport verify_theorem3_preconditions(const ProjSpace& sp, const ProjSpace& tgt);

struct ShadowResult {
  int instances = 0;
  int fail_condition1 = 0;
  int pass_chain = 0;
  int counterexamples = 0;
  std::vector<std::uint64_t> counterexample_seeds;
};

/// Perturbed instances with seeds seed, seed+1, ...: each must either
/// break intersection preservation or pass the whole Theorem 2 chain.
ShadowResult theorem3_shadow(const ProjSpace& sp, int samples, std::uint64_t seed);

struct ChowResult {
  BigInt graph_order;
  std::size_t collineation_permutations = 0;
  std::size_t distinct_collineation_permutations = 0;
  std::size_t duality_permutations = 0;
  bool cosets_disjoint = false;
  bool all_automorphisms = false;
  std::size_t distinct_total = 0;
};

/// Line permutations of every collineation (and, composed with the
/// identity-matrix duality, every duality) of PG(3, q), enumerated
/// exhaustively. Throws BudgetExceeded if more than `budget` maps would be
/// enumerated.
ChowResult enumerate_induced_permutations(const ProjSpace& sp, std::uint64_t budget);

/// Grassmann-graph automorphism order against the enumerated count.
/// Throws UnsupportedDimension unless n = 3, TooLarge above 200 lines,
/// BudgetExceeded.
TheoremReport chow_crosscheck(const ProjSpace& sp, std::uint64_t node_budget);

enum class Suite { Thm1, Thm2, Thm3, Chow };
std::optional<Suite> parse_suite(const std::string& s);

struct SuiteOptions {
  int samples = 100;
  std::uint64_t seed = 0;
  std::uint64_t budget = 1'000'000;
  /// Second space for thm3; defaults to sp itself.
  const ProjSpace* target = nullptr;
};

/// Runs a suite over its seeded population (instance i uses seed + i) and
/// merges the per-instance reports clause by clause in seed order.
TheoremReport run_suite(Suite suite, const ProjSpace& sp, const SuiteOptions& opt);

}  // namespace pgq
