#ifndef WLM_INGEST_HPP
#define WLM_INGEST_HPP

#include <array>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "wlm/core.hpp"

namespace wlm::ingest {

// One NASA-TLX total: tally of pairwise wins per factor plus the
// win-weighted average of the six ratings.
struct TlxScore {
  std::array<int, kTlxFactorCount> weights{};  // sums to 15
  double score = 0.0;                          // in [0, 100]
};

struct QualityReport {
  double valid_fraction = 1.0;  // RR intervals surviving the artifact filter
  std::int64_t artifact_count = 0;
  std::int64_t total_rr = 0;
};

struct RejectedRow {
  long line = 0;
  std::string reason;
};

struct RrParseResult {
  RrSeries series;
  std::vector<RejectedRow> rejected;  // rows outside the RR plausibility gate
};

struct AccelParseResult {
  AccelSeries series;
  std::optional<double> rate_warning_hz;  // set when median rate is off-nominal
  std::vector<std::string> warnings;
};

// CSV with header `t_ms,rr_ms`. Rows outside [200, 3000] ms are dropped and
// reported; surviving timestamps must be strictly increasing.
RrParseResult parse_rr_csv(const std::filesystem::path& path);

// CSV with header `t_ms,x,y,z`. Sorted on load; warns when the median sample
// interval deviates more than 10% from the nominal 50 ms.
AccelParseResult parse_accel_csv(const std::filesystem::path& path);

TlxScore score_tlx(const TlxResponse& r);

// Raw-TLX fallback for datasets without pairwise comparisons: plain mean of
// the six ratings, uniform weights. Off by default.
double score_tlx_unweighted(const TlxResponse& r);

struct SessionMeta {
  std::string id;
  std::string participant_id;
  std::int64_t duration_ms = 0;
  std::string accel_unit = "g";
  std::optional<TlxResponse> tlx;
  std::optional<double> tlx_delay_min;
};

SessionMeta parse_session_meta(const std::filesystem::path& path);

// Builds the Session and rejects it (ValidationError) unless every core
// invariant holds.
Session assemble_session(RrSeries rr, AccelSeries accel, SessionMeta meta);

enum class ExcludeReason {
  low_quality,
  missing_questionnaire,
  stale_questionnaire,
  missing_accel,
};

const char* exclude_reason_name(ExcludeReason r);

struct Admissibility {
  bool admitted = true;
  std::optional<ExcludeReason> reason;
};

// Session-level exclusion rules: quality < 50%, questionnaire missing or
// completed more than 30 minutes after the session. Equality admits.
Admissibility session_admissible(const Session& s, const QualityReport& q,
                                 double min_quality = 0.5,
                                 double max_delay_min = 30.0);

struct ManifestEntry {
  std::string id;
  std::filesystem::path rr;
  std::filesystem::path accel;
  std::filesystem::path meta;
};

struct Manifest {
  std::vector<ManifestEntry> entries;
  std::optional<std::uint64_t> corpus_seed;
  std::optional<std::string> config_hash;
};

// JSON-lines, one session descriptor per line; relative paths resolve
// against the manifest directory.
Manifest load_manifest(const std::filesystem::path& path);

}  // namespace wlm::ingest

#endif  // WLM_INGEST_HPP
