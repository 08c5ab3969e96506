#include "trislice/ledger.hpp"

#include <ctime>
#include <fstream>
#include <ostream>

#include <json.hpp>

#include "trislice/verify.hpp"
#include "trislice/version.hpp"

namespace trislice {

namespace {

using Json = nlohmann::ordered_json;

// Bound values can exceed 64 bits; they travel as decimal strings.
Json bounds_to_json(const std::vector<BoundEntry>& entries) {
  Json arr = Json::array();
  for (const BoundEntry& e : entries) {
    Json j;
    j["name"] = e.name;
    j["value"] = e.value ? Json(e.value->str()) : Json(nullptr);
    j["applicable"] = e.applicable;
    j["conjectural"] = e.conjectural;
    j["note"] = e.note;
    j["hypotheses"] = e.hypotheses;
    arr.push_back(std::move(j));
  }
  return arr;
}

std::vector<BoundEntry> bounds_from_json(const Json& arr) {
  std::vector<BoundEntry> out;
  if (!arr.is_array()) fail(ErrorKind::Parse, "ledger bounds must be an array");
  for (const auto& j : arr) {
    BoundEntry e;
    e.name = j.at("name").get<std::string>();
    if (!j.at("value").is_null()) e.value = BigInt(j.at("value").get<std::string>());
    e.applicable = j.at("applicable").get<bool>();
    e.conjectural = j.at("conjectural").get<bool>();
    e.note = j.at("note").get<std::string>();
    e.hypotheses = j.at("hypotheses").get<std::vector<std::string>>();
    out.push_back(std::move(e));
  }
  return out;
}

std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

std::string LedgerRecord::to_json_line() const {
  Json j;
  j["schema"] = schema;
  j["tool"] = tool;
  j["timestamp"] = timestamp;
  j["n"] = n;
  j["p"] = p ? Json(*p) : Json(nullptr);
  j["profile"] = profile;
  j["max_size"] = max_size;
  j["exhausted"] = exhausted;
  j["infeasible"] = infeasible;
  j["witness"] = Json::parse(witness.to_json_line());
  j["bounds"] = bounds_to_json(bounds);
  j["nodes_visited"] = nodes_visited;
  return j.dump();
}

LedgerRecord LedgerRecord::from_json_line(const std::string& line) {
  Json j;
  try {
    j = Json::parse(line);
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::Parse, std::string("ledger line is not valid JSON: ") + e.what());
  }
  LedgerRecord r;
  try {
    r.schema = j.at("schema").get<int>();
    r.tool = j.at("tool").get<std::string>();
    r.timestamp = j.at("timestamp").get<std::string>();
    r.n = j.at("n").get<int>();
    if (!j.at("p").is_null()) r.p = j.at("p").get<std::int64_t>();
    r.profile = j.at("profile").get<std::string>();
    r.max_size = j.at("max_size").get<int>();
    r.exhausted = j.at("exhausted").get<bool>();
    r.infeasible = j.at("infeasible").get<bool>();
    r.witness = SetFamily::from_json_line(j.at("witness").dump());
    r.bounds = bounds_from_json(j.at("bounds"));
    r.nodes_visited = j.at("nodes_visited").get<std::uint64_t>();
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::Parse, std::string("ledger line is missing fields: ") + e.what());
  }
  return r;
}

LedgerRecord make_record(int n, const IntersectionProfile& profile,
                         const SearchOutcome& outcome, const BoundReport& bounds,
                         std::string timestamp) {
  LedgerRecord r;
  r.schema = kLedgerSchemaVersion;
  r.tool = kToolVersion;
  r.timestamp = std::move(timestamp);
  r.n = n;
  r.p = profile.modulus();
  r.profile = profile.to_string();
  r.max_size = outcome.max_size;
  r.exhausted = outcome.exhausted;
  r.infeasible = outcome.infeasible;
  r.witness = outcome.witness;
  r.bounds = bounds.entries;
  r.nodes_visited = outcome.nodes_visited;
  return r;
}

LedgerLoadResult ledger_load(const std::string& path, bool lenient) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::Io, "cannot open ledger " + path);
  LedgerLoadResult result;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    LedgerRecord record;
    try {
      record = LedgerRecord::from_json_line(line);
    } catch (const Error& e) {
      if (lenient) {
        result.warnings.push_back("line " + std::to_string(lineno) + " skipped: " + e.what());
        continue;
      }
      fail(e.kind(), path + ":" + std::to_string(lineno) + ": " + e.what());
    }

    // Audit: the recorded witness must still verify, and an exhausted
    // maximum must respect every applicable proven bound.
    IntersectionProfile profile = IntersectionProfile::parse(record.profile);
    if (!record.infeasible) {
      if (record.witness.size() != record.max_size ||
          !verify_family(record.witness, profile).valid)
        fail(ErrorKind::Hypothesis, path + ": line " + std::to_string(lineno) +
                                        ": witness fails re-verification");
    }
    if (record.exhausted && !record.infeasible) {
      for (const BoundEntry& e : record.bounds) {
        if (!e.applicable || e.conjectural || !e.value) continue;
        if (BigInt(record.max_size) > *e.value)
          fail(ErrorKind::Hypothesis,
               path + ": line " + std::to_string(lineno) + ": max_size " +
                   std::to_string(record.max_size) + " exceeds bound " + e.name + " = " +
                   e.value->str());
      }
    }
    result.records.push_back(std::move(record));
  }
  return result;
}

namespace {

std::string utc_timestamp() {
  std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buffer[32];
  std::strftime(buffer, sizeof(buffer), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buffer;
}

std::string substitute_modulus(const std::string& tmpl, std::int64_t p) {
  std::string out;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = tmpl.find("{p}", start);
    if (pos == std::string::npos) {
      out += tmpl.substr(start);
      return out;
    }
    out += tmpl.substr(start, pos - start);
    out += std::to_string(p);
    start = pos + 3;
  }
}

struct GridPoint {
  int n;
  IntersectionProfile profile;
};

std::vector<GridPoint> expand_grid(const ExperimentSpec& spec) {
  if (spec.ground_sizes.empty() || spec.profile_templates.empty())
    fail(ErrorKind::Parameter, "experiment grid must be nonempty");
  std::vector<GridPoint> points;
  for (int n : spec.ground_sizes) {
    for (const std::string& tmpl : spec.profile_templates) {
      if (tmpl.find("{p}") != std::string::npos) {
        if (spec.moduli.empty())
          fail(ErrorKind::Parameter,
               "profile template '" + tmpl + "' needs at least one modulus");
        for (std::int64_t p : spec.moduli)
          points.push_back({n, IntersectionProfile::parse(substitute_modulus(tmpl, p))});
      } else {
        points.push_back({n, IntersectionProfile::parse(tmpl)});
      }
    }
  }
  return points;
}

}  // namespace

std::vector<LedgerRecord> run_experiment(const ExperimentSpec& spec, std::ostream& out) {
  std::vector<GridPoint> points = expand_grid(spec);

  std::ofstream ledger;
  if (!spec.ledger_path.empty()) {
    ledger.open(spec.ledger_path, std::ios::app);
    if (!ledger) fail(ErrorKind::Io, "cannot open ledger " + spec.ledger_path + " for append");
  }

  std::vector<LedgerRecord> records;
  Json summary = Json::array();
  if (spec.format == TableFormat::Csv)
    out << "n,p,profile,max_size,exhausted,tightest_bound,gap\n";

  for (const GridPoint& point : points) {
    SearchOutcome outcome = max_family(point.n, point.profile, spec.budget, spec.search);
    if (!certify(outcome, point.profile))
      fail(ErrorKind::Internal, "experiment witness failed certification");
    BoundReport bounds = bound_report(point.n, point.profile.modulus(), point.profile);
    LedgerRecord record = make_record(point.n, point.profile, outcome, bounds, utc_timestamp());
    if (ledger.is_open()) {
      ledger << record.to_json_line() << '\n';
      ledger.flush();
    }

    std::string tightest = bounds.tightest ? bounds.tightest->str() : "";
    std::string gap =
        bounds.tightest ? (*bounds.tightest - outcome.max_size).str() : "";
    if (spec.format == TableFormat::Csv) {
      out << record.n << ',' << (record.p ? std::to_string(*record.p) : "") << ','
          << csv_escape(record.profile) << ',' << record.max_size << ','
          << (record.exhausted ? "true" : "false") << ',' << tightest << ',' << gap << '\n';
    } else {
      Json row;
      row["n"] = record.n;
      row["p"] = record.p ? Json(*record.p) : Json(nullptr);
      row["profile"] = record.profile;
      row["max_size"] = record.max_size;
      row["exhausted"] = record.exhausted;
      row["tightest_bound"] = tightest.empty() ? Json(nullptr) : Json(tightest);
      row["gap"] = gap.empty() ? Json(nullptr) : Json(gap);
      summary.push_back(std::move(row));
    }
    records.push_back(std::move(record));
  }
  if (spec.format == TableFormat::Json) out << summary.dump() << '\n';
  return records;
}

}  // namespace trislice
