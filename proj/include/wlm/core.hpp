#ifndef WLM_CORE_HPP
#define WLM_CORE_HPP

#include <Eigen/Dense>
#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace wlm {

// Hard plausibility gate for inter-beat intervals at ingest time.
inline constexpr double kRrMinMs = 200.0;
inline constexpr double kRrMaxMs = 3000.0;
inline constexpr std::int64_t kMaxSessionMs = 3'600'000;  // 60-minute trials

struct RrSample {
  std::int64_t t_ms = 0;  // since session start
  double rr_ms = 0.0;
};
using RrSeries = std::vector<RrSample>;

struct AccelSample {
  std::int64_t t_ms = 0;
  double x = 0.0, y = 0.0, z = 0.0;  // unit declared by session metadata
};
using AccelSeries = std::vector<AccelSample>;

enum class TlxFactor : int {
  mental = 0,
  physical,
  temporal,
  performance,
  effort,
  frustration,
};
inline constexpr int kTlxFactorCount = 6;
inline constexpr int kTlxComparisonCount = 15;
inline constexpr std::array<const char*, kTlxFactorCount> kTlxFactorNames = {
    "mental", "physical", "temporal", "performance", "effort", "frustration"};

struct TlxComparison {
  int a = 0, b = 0;    // factor indices, unordered pair
  int winner = 0;      // must equal a or b
};

struct TlxResponse {
  std::array<double, kTlxFactorCount> ratings{};  // each in [0,100]
  std::vector<TlxComparison> comparisons;         // exactly 15, one per pair
};

struct Session {
  std::string id;
  std::string participant_id;
  std::int64_t duration_ms = 0;
  RrSeries rr;
  AccelSeries accel;
  std::string accel_unit = "g";
  std::optional<TlxResponse> tlx;
  std::optional<double> tlx_delay_min;  // session end -> questionnaire done
};

enum class Label : int { low = 0, high = 1 };

inline const char* label_name(Label l) { return l == Label::high ? "High" : "Low"; }

inline constexpr int kFeatureCount = 19;

enum class Feature : int {
  mean_rr = 0,
  sdnn,
  rmssd,
  pnn50,
  triangular_index,
  tinn,
  vlf,
  lf,
  hf,
  lf_hf,
  sdsd,
  mean_x,
  mean_y,
  mean_z,
  mean_mag,
  std_x,
  std_y,
  std_z,
  energy,
};

// Canonical order: 11 HRV features then 8 acceleration features.
inline constexpr std::array<const char*, kFeatureCount> kFeatureNames = {
    "mean_rr", "sdnn",   "rmssd",  "pnn50",  "triangular_index",
    "tinn",    "vlf",    "lf",     "hf",     "lf_hf",
    "sdsd",    "mean_x", "mean_y", "mean_z", "mean_mag",
    "std_x",   "std_y",  "std_z",  "energy"};

using FeatureVector = Eigen::Matrix<double, kFeatureCount, 1>;

inline double& feature(FeatureVector& v, Feature f) { return v[static_cast<int>(f)]; }
inline double feature(const FeatureVector& v, Feature f) { return v[static_cast<int>(f)]; }

int feature_index(const std::string& name);  // -1 if unknown

// Pure invariant check. Returns an empty list iff all core invariants hold;
// each violation names the offending field and sample index.
std::vector<std::string> validate_session(const Session& s);

}  // namespace wlm

#endif  // WLM_CORE_HPP
