// Command-line surface: weights, bounds, dual, sss, export, verify-paper.
//
// Exit codes: 0 all checks matched (or hit a known, flagged discrepancy),
// 1 an unexplained mismatch, 2 usage or guard error.

#ifndef TRACECODE_CLI_HPP
#define TRACECODE_CLI_HPP

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "tracecode/trace_code.hpp"
#include "tracecode/weight_dist.hpp"

namespace tracecode::cli {

enum class Output { Json, Csv, Text };

struct RunConfig {
  int m = 1;
  SetKind set = SetKind::Lprime;
  Layout layout = Layout::Interleaved;
  Method method = Method::Enumerated;
  unsigned threads = 0;
  std::uint64_t seed = 1;
  Output output = Output::Text;
  bool include_slow = false;
  bool extrapolate = false;
  std::string export_what;  // generators | distribution | access
  std::string out_path = "-";

  CodeSpec spec() const { return {m, set, layout}; }
};

enum class ClaimStatus { Match, Mismatch, Flagged };

struct ClaimRecord {
  std::string id;
  std::string expected;
  std::string computed;
  ClaimStatus status = ClaimStatus::Mismatch;
  std::string note;
};

struct PaperReport {
  std::vector<ClaimRecord> claims;

  bool passed() const;
  std::size_t count(ClaimStatus status) const;
};

PaperReport cmd_verify_paper(const RunConfig& config);

/// Parses argv-style arguments (without the program name) and runs one subcommand.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tracecode::cli

#endif  // TRACECODE_CLI_HPP
