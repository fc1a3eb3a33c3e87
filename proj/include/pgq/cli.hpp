#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "pgq/theorems.hpp"

namespace pgq::cli {

enum Exit : int { kOk = 0, kNegative = 1, kBadParams = 2, kIo = 3, kParse = 4, kBudget = 5 };

/// Each command writes results to `out` and diagnostics to `err` and
/// returns the process exit code. An empty path means stdout.
int cmd_stats(int n, int q, std::ostream& out, std::ostream& err);
int cmd_graph(int n, int q, const std::string& out_path, std::ostream& out, std::ostream& err);
int cmd_aut(int n, int q, std::uint64_t budget, std::ostream& out, std::ostream& err);
int cmd_gen(int n, int q, InstanceKind kind, std::uint64_t seed, const std::string& out_path,
            std::ostream& out, std::ostream& err);
/// Reads a GRASSMAP file; `out_path`, if given, receives the re-serialized map.
int cmd_check(const std::string& in_path, const std::string& out_path, std::ostream& out,
              std::ostream& err);

struct VerifyArgs {
  Suite suite = Suite::Thm1;
  int n = 3, q = 2;
  int samples = 100;
  std::uint64_t seed = 0;
  std::uint64_t budget = 1'000'000;
  std::optional<int> target_n, target_q;
};
int cmd_verify(const VerifyArgs& a, std::ostream& out, std::ostream& err);

/// Full command line, args[0] being the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pgq::cli
