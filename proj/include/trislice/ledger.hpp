#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "trislice/bounds.hpp"
#include "trislice/family.hpp"
#include "trislice/search.hpp"

namespace trislice {

// One appended line of the results ledger. Field order is fixed so that
// write -> load -> write is byte-identical.
struct LedgerRecord {
  int schema = 0;
  std::string tool;
  std::string timestamp;  // ISO-8601 UTC, e.g. 2026-08-09T12:00:00Z
  int n = 0;
  std::optional<std::int64_t> p;
  std::string profile;    // canonical profile text
  int max_size = 0;
  bool exhausted = false;
  bool infeasible = false;
  SetFamily witness{1};
  std::vector<BoundEntry> bounds;
  std::uint64_t nodes_visited = 0;

  std::string to_json_line() const;
  static LedgerRecord from_json_line(const std::string& line);
};

LedgerRecord make_record(int n, const IntersectionProfile& profile,
                         const SearchOutcome& outcome, const BoundReport& bounds,
                         std::string timestamp);

struct LedgerLoadResult {
  std::vector<LedgerRecord> records;
  std::vector<std::string> warnings;  // skipped lines under lenient mode
};

// Loads and audits a ledger: witnesses are re-verified against their
// recorded profile, and exhausted maxima are checked against every recorded
// applicable bound. Malformed lines are fatal unless lenient.
LedgerLoadResult ledger_load(const std::string& path, bool lenient = false);

enum class TableFormat { Csv, Json };

struct ExperimentSpec {
  std::vector<int> ground_sizes;
  std::vector<std::string> profile_templates;  // "{p}" expands over moduli
  std::vector<std::int64_t> moduli;            // used only by templates with "{p}"
  SearchBudget budget;
  SearchOptions search;
  std::string ledger_path;  // empty: records are not persisted
  TableFormat format = TableFormat::Csv;
};

// Runs the grid, appends one certified record per point to the ledger, and
// writes a summary table (max size vs tightest bound, with the gap) to out.
std::vector<LedgerRecord> run_experiment(const ExperimentSpec& spec, std::ostream& out);

}  // namespace trislice
