#include "wlm/ingest.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "wlm/errors.hpp"
#include "wlm/json_io.hpp"
#include "wlm/stats.hpp"

namespace wlm::ingest {

namespace {

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::io_error, "cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct LineReader {
  const std::string& text;
  std::size_t pos = 0;
  long line_no = 0;

  bool next(std::string_view& out) {
    if (pos >= text.size()) return false;
    std::size_t end = text.find('\n', pos);
    if (end == std::string::npos) end = text.size();
    out = std::string_view(text).substr(pos, end - pos);
    if (!out.empty() && out.back() == '\r') out.remove_suffix(1);
    pos = end + 1;
    ++line_no;
    return true;
  }
};

bool parse_double(std::string_view s, double& out) {
  const char* first = s.data();
  const char* last = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc() && ptr == last;
}

bool parse_i64(std::string_view s, std::int64_t& out) {
  const char* first = s.data();
  const char* last = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc() && ptr == last;
}

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = line.find(',', start);
    if (comma == std::string_view::npos) {
      out.push_back(line.substr(start));
      break;
    }
    out.push_back(line.substr(start, comma - start));
    start = comma + 1;
  }
  return out;
}

}  // namespace

RrParseResult parse_rr_csv(const std::filesystem::path& path) {
  const std::string text = read_file(path);
  LineReader reader{text};
  std::string_view line;
  if (!reader.next(line)) throw Error(Errc::empty_file, "empty RR file " + path.string());
  if (line != "t_ms,rr_ms") {
    throw Error(Errc::malformed_row, "bad RR header in " + path.string(), reader.line_no);
  }

  RrParseResult result;
  bool any_row = false;
  while (reader.next(line)) {
    if (line.empty()) continue;
    any_row = true;
    auto fields = split_fields(line);
    std::int64_t t = 0, rr = 0;
    if (fields.size() != 2 || !parse_i64(fields[0], t) || !parse_i64(fields[1], rr)) {
      throw Error(Errc::malformed_row,
                  "malformed RR row at line " + std::to_string(reader.line_no),
                  reader.line_no);
    }
    if (rr < kRrMinMs || rr > kRrMaxMs) {
      result.rejected.push_back(
          {reader.line_no, "rr_ms " + std::to_string(rr) + " outside plausibility bounds"});
      continue;
    }
    if (!result.series.empty() && t <= result.series.back().t_ms) {
      throw Error(Errc::non_monotonic_timestamp,
                  "t_ms not strictly increasing at line " + std::to_string(reader.line_no),
                  reader.line_no);
    }
    result.series.push_back({t, static_cast<double>(rr)});
  }
  if (!any_row) throw Error(Errc::empty_file, "no RR rows in " + path.string());
  return result;
}

AccelParseResult parse_accel_csv(const std::filesystem::path& path) {
  const std::string text = read_file(path);
  LineReader reader{text};
  std::string_view line;
  if (!reader.next(line)) throw Error(Errc::empty_file, "empty accel file " + path.string());
  if (line != "t_ms,x,y,z") {
    throw Error(Errc::malformed_row, "bad accel header in " + path.string(), reader.line_no);
  }

  AccelParseResult result;
  while (reader.next(line)) {
    if (line.empty()) continue;
    auto fields = split_fields(line);
    AccelSample s;
    if (fields.size() != 4 || !parse_i64(fields[0], s.t_ms) || !parse_double(fields[1], s.x) ||
        !parse_double(fields[2], s.y) || !parse_double(fields[3], s.z)) {
      throw Error(Errc::malformed_row,
                  "malformed accel row at line " + std::to_string(reader.line_no),
                  reader.line_no);
    }
    result.series.push_back(s);
  }
  if (result.series.empty()) throw Error(Errc::empty_file, "no accel rows in " + path.string());

  std::stable_sort(result.series.begin(), result.series.end(),
                   [](const AccelSample& a, const AccelSample& b) { return a.t_ms < b.t_ms; });
  AccelSeries dedup;
  dedup.reserve(result.series.size());
  for (const auto& s : result.series) {
    if (!dedup.empty() && s.t_ms == dedup.back().t_ms) {
      result.warnings.push_back("duplicate accel timestamp " + std::to_string(s.t_ms) +
                                " dropped");
      continue;
    }
    dedup.push_back(s);
  }
  result.series = std::move(dedup);

  if (result.series.size() >= 2) {
    std::vector<double> dts;
    dts.reserve(result.series.size() - 1);
    for (std::size_t i = 1; i < result.series.size(); ++i) {
      dts.push_back(static_cast<double>(result.series[i].t_ms - result.series[i - 1].t_ms));
    }
    double med = median(dts);
    if (med > 0 && std::abs(med - 50.0) / 50.0 > 0.10) {
      result.rate_warning_hz = 1000.0 / med;
      result.warnings.push_back("accel rate " + std::to_string(*result.rate_warning_hz) +
                                " Hz deviates from nominal 20 Hz");
    }
  }
  return result;
}

TlxScore score_tlx(const TlxResponse& r) {
  TlxScore out;
  for (const auto& c : r.comparisons) out.weights[c.winner] += 1;
  double sum = 0.0;
  for (int i = 0; i < kTlxFactorCount; ++i) sum += out.weights[i] * r.ratings[i];
  out.score = sum / kTlxComparisonCount;
  return out;
}

double score_tlx_unweighted(const TlxResponse& r) {
  double sum = 0.0;
  for (double v : r.ratings) sum += v;
  return sum / kTlxFactorCount;
}

SessionMeta parse_session_meta(const std::filesystem::path& path) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(read_file(path));
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(Errc::malformed_row, "bad session meta JSON " + path.string() + ": " + e.what());
  }
  SessionMeta m;
  try {
    j.at("id").get_to(m.id);
    j.at("participant_id").get_to(m.participant_id);
    j.at("duration_ms").get_to(m.duration_ms);
    if (j.contains("accel_unit")) j.at("accel_unit").get_to(m.accel_unit);
    if (j.contains("tlx") && !j.at("tlx").is_null()) {
      const auto& t = j.at("tlx");
      TlxResponse resp;
      t.at("ratings").get_to(resp.ratings);
      t.at("comparisons").get_to(resp.comparisons);
      m.tlx = std::move(resp);
      if (t.contains("delay_min")) m.tlx_delay_min = t.at("delay_min").get<double>();
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::malformed_row, "bad session meta " + path.string() + ": " + e.what());
  }
  return m;
}

Session assemble_session(RrSeries rr, AccelSeries accel, SessionMeta meta) {
  Session s;
  s.id = std::move(meta.id);
  s.participant_id = std::move(meta.participant_id);
  s.duration_ms = meta.duration_ms;
  s.accel_unit = std::move(meta.accel_unit);
  s.rr = std::move(rr);
  s.accel = std::move(accel);
  s.tlx = std::move(meta.tlx);
  s.tlx_delay_min = meta.tlx_delay_min;
  auto violations = validate_session(s);
  if (!violations.empty()) throw ValidationError(std::move(violations));
  return s;
}

const char* exclude_reason_name(ExcludeReason r) {
  switch (r) {
    case ExcludeReason::low_quality: return "LowQuality";
    case ExcludeReason::missing_questionnaire: return "MissingQuestionnaire";
    case ExcludeReason::stale_questionnaire: return "StaleQuestionnaire";
    case ExcludeReason::missing_accel: return "MissingAccel";
  }
  return "Unknown";
}

Admissibility session_admissible(const Session& s, const QualityReport& q,
                                 double min_quality, double max_delay_min) {
  if (q.valid_fraction < min_quality) {
    return {false, ExcludeReason::low_quality};
  }
  if (!s.tlx) {
    return {false, ExcludeReason::missing_questionnaire};
  }
  if (s.tlx_delay_min && *s.tlx_delay_min > max_delay_min) {
    return {false, ExcludeReason::stale_questionnaire};
  }
  if (s.accel.empty()) {
    return {false, ExcludeReason::missing_accel};
  }
  return {true, std::nullopt};
}

Manifest load_manifest(const std::filesystem::path& path) {
  const std::string text = read_file(path);
  Manifest m;
  const auto dir = path.parent_path();
  LineReader reader{text};
  std::string_view line;
  while (reader.next(line)) {
    if (line.empty()) continue;
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(line);
    } catch (const nlohmann::json::parse_error& e) {
      throw Error(Errc::malformed_row,
                  "bad manifest line " + std::to_string(reader.line_no) + ": " + e.what(),
                  reader.line_no);
    }
    if (!j.contains("id")) {
      // corpus header line
      if (j.contains("corpus_seed")) m.corpus_seed = j.at("corpus_seed").get<std::uint64_t>();
      if (j.contains("config_hash")) m.config_hash = j.at("config_hash").get<std::string>();
      continue;
    }
    ManifestEntry e;
    e.id = j.at("id").get<std::string>();
    e.rr = dir / j.at("rr").get<std::string>();
    e.accel = dir / j.at("accel").get<std::string>();
    e.meta = dir / j.at("meta").get<std::string>();
    m.entries.push_back(std::move(e));
  }
  if (m.entries.empty()) throw Error(Errc::empty_file, "manifest has no sessions: " + path.string());
  return m;
}

}  // namespace wlm::ingest
