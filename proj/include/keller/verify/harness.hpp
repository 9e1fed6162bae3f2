#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "keller/jelonek/properness.hpp"
#include "keller/pencil/pencil.hpp"
#include "keller/resolve/resolution.hpp"

namespace keller {

// One [[map]] table of a corpus file.
struct CorpusEntry {
  std::string name;
  std::string P, Q;
  std::vector<std::string> tags;
  nlohmann::json expected = nlohmann::json::object();  // optional golden values
};

// TOML corpus: [[map]] tables with name, P, Q, optional tags and an
// optional [map.expect] table. Throws ParseError (with line and column) or
// InvalidArgument for duplicate names.
std::vector<CorpusEntry> parse_corpus(std::string_view text, std::string_view source = "corpus");
std::vector<CorpusEntry> load_corpus(const std::string& path);

struct RunConfig {
  std::uint64_t seed = kDefaultSeed;
  int samples = 50;
  int cap = kDefaultDegreeCap;
  int fibre_sum_samples = 10;
};

// KELLER_SEED overrides the default seed when set.
std::uint64_t default_seed();

enum class Outcome { Pass, Fail, Skipped };
const char* to_string(Outcome o);

struct Check {
  std::string id;
  Outcome outcome = Outcome::Skipped;
  std::string detail;  // reason when skipped
};

struct Theorem2Row {
  bool applicable = false;
  std::string reason;  // failed hypothesis when not applicable
  bool a = false, b = false, c = false;
  std::optional<bool> equivalent;  // only when applicable
};

enum class MapStatus { Ok, CapExceeded, Error };

struct MapReport {
  std::string name;
  MapStatus status = MapStatus::Ok;
  std::string error;          // first stage error
  std::string offending;      // minimal polynomial beyond the cap
  std::vector<Check> checks;
  Theorem2Row theorem2;
  nlohmann::json doc;         // dossier, profile, resolution, jelonek, stage errors

  // Summary fields.
  std::optional<bool> finite;
  std::optional<int> deg_geo;
  std::string r_profile;
  std::optional<int> h_infinity, sum_h_b;
  std::string a_f;
  std::string situation;

  bool failed() const;
  // 0 pass, 1 a check failed, 3 cap or budget exceeded.
  int exit_code() const;
};

// finite_fibres_check, resolve_pencil, scan_pencil, nonproper_set,
// predicates, identity checks. Stage errors are recorded and skip
// dependent stages.
MapReport run_map(const CorpusEntry& entry, const RunConfig& cfg = {});

struct SuiteVerdict {
  Outcome outcome = Outcome::Skipped;
  int applicable = 0;
  std::vector<std::string> violations;
};
// a <=> b <=> c on every applicable map.
SuiteVerdict theorem2_harness(const std::vector<MapReport>& maps);

struct HarnessReport {
  std::vector<MapReport> maps;
  SuiteVerdict theorem2;
  int passed = 0, failed = 0, skipped = 0;
};

// Maps run on up to `jobs` threads; the report is assembled in corpus order.
HarnessReport run_corpus(const std::vector<CorpusEntry>& corpus, const RunConfig& cfg = {}, int jobs = 1);

nlohmann::json to_json(const MapReport& r);
nlohmann::json to_json(const HarnessReport& r);
std::string summary_table(const HarnessReport& r);
// 0 all pass, 1 a check failed or an expectation mismatched, 3 an unexpected
// cap or budget failure.
int exit_code(const HarnessReport& r);

// Serializers shared with the command-line tool.
nlohmann::json to_json(const AlgebraicPoint& p);
nlohmann::json to_json(const PencilProfile& p);
nlohmann::json to_json(const ResolutionTree& t);
nlohmann::json to_json(const FiniteFibres& f);
nlohmann::json to_json(const NonProperSet& s);

}  // namespace keller
