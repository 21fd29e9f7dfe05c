#ifndef WLM_CLEAN_HPP
#define WLM_CLEAN_HPP

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

#include "wlm/core.hpp"
#include "wlm/ingest.hpp"

namespace wlm::clean {

struct ArtifactMask {
  std::vector<bool> flags;        // true = artifact; same length as the series
  std::vector<double> local_avgs; // reference average used per sample, ms
};

struct Window {
  std::int64_t start_ms = 0;
  std::int64_t end_ms = 0;              // start + 120 s
  RrSeries rr_clean;                    // repaired samples inside [start, end)
  Eigen::VectorXd tachogram;            // evenly resampled RR, ms
  AccelSeries accel_slice;              // samples inside [start, end)
  double interpolated_fraction = 0.0;   // flagged / total within the window
};

struct WindowParams {
  std::int64_t window_ms = 120'000;
  std::int64_t stride_ms = 60'000;
  double tachogram_hz = 4.0;
  std::int64_t hard_gap_ms = 5'000;     // no spline bridging across longer gaps
  std::int64_t tachogram_slack_ms = 2'500;  // tolerated boundary extrapolation
};

// Causal 20% rule: sample i is an artifact when it deviates from the mean of
// the up-to-`window_pts` most recent unflagged preceding samples by more than
// `threshold`. The first sample has no history and is never flagged.
ArtifactMask detect_artifacts(const RrSeries& rr, int window_pts = 10,
                              double threshold = 0.20);

// Replaces flagged values with a natural cubic spline through the unflagged
// (t, rr) knots; timestamps are preserved.
std::pair<RrSeries, ingest::QualityReport> repair(const RrSeries& rr,
                                                  const ArtifactMask& mask);

// Spline evaluation on the even grid start, start+1000/rate, ..., end;
// length floor(span/step)+1. `slack_ms` allows boundary extrapolation past
// the knot range before SpanNotCovered is raised.
Eigen::VectorXd resample_tachogram(const RrSeries& repaired, double rate_hz,
                                   std::int64_t start_ms, std::int64_t end_ms,
                                   std::int64_t slack_ms = 0);

// Sliding windows at the configured stride. Windows overlapping a hard data
// gap (or whose tachogram span is uncoverable) are marked fully interpolated
// so the quality filter drops them.
std::vector<Window> make_windows(const Session& s, const RrSeries& repaired,
                                 const ArtifactMask& mask,
                                 const WindowParams& params = {});

// Drops windows with interpolated_fraction > max_interp (strict), preserving order.
std::vector<Window> window_quality_filter(std::vector<Window> windows,
                                          double max_interp = 0.10);

// Paper-parity cap: keep the `cap` lowest-interpolation windows (ties go to
// the earlier window), restored to chronological order. cap <= 0 keeps all.
std::vector<Window> cap_windows_per_session(std::vector<Window> windows, int cap);

std::int64_t candidate_window_count(std::int64_t duration_ms,
                                    std::int64_t window_ms = 120'000,
                                    std::int64_t stride_ms = 60'000);

}  // namespace wlm::clean

#endif  // WLM_CLEAN_HPP
