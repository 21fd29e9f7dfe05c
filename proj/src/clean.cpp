#include "wlm/clean.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numeric>

#include "wlm/cubic_spline.hpp"
#include "wlm/errors.hpp"

namespace wlm::clean {

ArtifactMask detect_artifacts(const RrSeries& rr, int window_pts, double threshold) {
  if (rr.empty()) throw Error(Errc::too_few_samples, "detect_artifacts: empty series");
  ArtifactMask mask;
  mask.flags.assign(rr.size(), false);
  mask.local_avgs.assign(rr.size(), 0.0);

  std::deque<double> history;  // most recent unflagged values, newest at back
  double history_sum = 0.0;
  auto push = [&](double v) {
    history.push_back(v);
    history_sum += v;
    if (static_cast<int>(history.size()) > window_pts) {
      history_sum -= history.front();
      history.pop_front();
    }
  };

  mask.local_avgs[0] = rr[0].rr_ms;
  push(rr[0].rr_ms);
  for (std::size_t i = 1; i < rr.size(); ++i) {
    double avg = history_sum / static_cast<double>(history.size());
    mask.local_avgs[i] = avg;
    bool artifact = std::abs(rr[i].rr_ms - avg) / avg > threshold;
    mask.flags[i] = artifact;
    if (!artifact) push(rr[i].rr_ms);
  }
  return mask;
}

std::pair<RrSeries, ingest::QualityReport> repair(const RrSeries& rr,
                                                  const ArtifactMask& mask) {
  if (mask.flags.size() != rr.size()) {
    throw Error(Errc::length_mismatch, "repair: mask/series size mismatch");
  }
  const std::int64_t total = static_cast<std::int64_t>(rr.size());
  std::int64_t flagged = std::count(mask.flags.begin(), mask.flags.end(), true);
  std::int64_t valid = total - flagged;
  if (valid < 4) {
    throw Error(Errc::too_few_valid_samples,
                "repair: " + std::to_string(valid) + " unflagged samples, need >= 4");
  }

  RrSeries repaired = rr;
  if (flagged > 0) {
    Eigen::VectorXd xs(valid), ys(valid);
    Eigen::Index k = 0;
    for (std::size_t i = 0; i < rr.size(); ++i) {
      if (!mask.flags[i]) {
        xs[k] = static_cast<double>(rr[i].t_ms);
        ys[k] = rr[i].rr_ms;
        ++k;
      }
    }
    CubicSpline<double> spline(xs, ys);
    for (std::size_t i = 0; i < rr.size(); ++i) {
      if (mask.flags[i]) repaired[i].rr_ms = spline(static_cast<double>(rr[i].t_ms));
    }
  }

  ingest::QualityReport q;
  q.total_rr = total;
  q.artifact_count = flagged;
  q.valid_fraction = total > 0 ? static_cast<double>(valid) / static_cast<double>(total) : 0.0;
  return {std::move(repaired), q};
}

Eigen::VectorXd resample_tachogram(const RrSeries& repaired, double rate_hz,
                                   std::int64_t start_ms, std::int64_t end_ms,
                                   std::int64_t slack_ms) {
  if (repaired.size() < 2) {
    throw Error(Errc::too_few_samples, "resample_tachogram: need >= 2 samples");
  }
  if (end_ms <= start_ms || rate_hz <= 0) {
    throw Error(Errc::bad_config, "resample_tachogram: bad span or rate");
  }
  const double step_ms = 1000.0 / rate_hz;
  const auto count = static_cast<Eigen::Index>(
      std::floor(static_cast<double>(end_ms - start_ms) / step_ms)) + 1;

  const double cover_lo = static_cast<double>(repaired.front().t_ms - slack_ms);
  const double cover_hi = static_cast<double>(repaired.back().t_ms + slack_ms);
  const double last_t = start_ms + (count - 1) * step_ms;
  if (start_ms < cover_lo || last_t > cover_hi) {
    throw Error(Errc::span_not_covered,
                "resample_tachogram: span [" + std::to_string(start_ms) + ", " +
                    std::to_string(end_ms) + "] not covered by series");
  }

  Eigen::VectorXd xs(repaired.size()), ys(repaired.size());
  for (std::size_t i = 0; i < repaired.size(); ++i) {
    xs[static_cast<Eigen::Index>(i)] = static_cast<double>(repaired[i].t_ms);
    ys[static_cast<Eigen::Index>(i)] = repaired[i].rr_ms;
  }
  CubicSpline<double> spline(xs, ys);
  Eigen::VectorXd out(count);
  for (Eigen::Index k = 0; k < count; ++k) {
    out[k] = spline(start_ms + k * step_ms);
  }
  return out;
}

std::int64_t candidate_window_count(std::int64_t duration_ms, std::int64_t window_ms,
                                    std::int64_t stride_ms) {
  if (duration_ms < window_ms) return 0;
  return (duration_ms - window_ms) / stride_ms + 1;
}

std::vector<Window> make_windows(const Session& s, const RrSeries& repaired,
                                 const ArtifactMask& mask, const WindowParams& params) {
  if (mask.flags.size() != repaired.size()) {
    throw Error(Errc::length_mismatch, "make_windows: mask/series size mismatch");
  }
  if (s.duration_ms < params.window_ms) {
    throw Error(Errc::session_too_short,
                "make_windows: session " + s.id + " shorter than one window");
  }

  // Hard gaps: spans between consecutive beats further apart than the limit.
  std::vector<std::pair<std::int64_t, std::int64_t>> gaps;
  for (std::size_t i = 1; i < repaired.size(); ++i) {
    if (repaired[i].t_ms - repaired[i - 1].t_ms > params.hard_gap_ms) {
      gaps.emplace_back(repaired[i - 1].t_ms, repaired[i].t_ms);
    }
  }

  std::vector<Window> windows;
  std::size_t rr_lo = 0;
  std::size_t accel_lo = 0;
  for (std::int64_t start = 0; start + params.window_ms <= s.duration_ms;
       start += params.stride_ms) {
    const std::int64_t end = start + params.window_ms;
    Window w;
    w.start_ms = start;
    w.end_ms = end;

    while (rr_lo < repaired.size() && repaired[rr_lo].t_ms < start) ++rr_lo;
    std::size_t rr_hi = rr_lo;
    std::int64_t flagged = 0;
    while (rr_hi < repaired.size() && repaired[rr_hi].t_ms < end) {
      w.rr_clean.push_back(repaired[rr_hi]);
      if (mask.flags[rr_hi]) ++flagged;
      ++rr_hi;
    }
    const std::int64_t total = static_cast<std::int64_t>(w.rr_clean.size());
    w.interpolated_fraction =
        total > 0 ? static_cast<double>(flagged) / static_cast<double>(total) : 1.0;

    bool over_gap = std::any_of(gaps.begin(), gaps.end(), [&](const auto& g) {
      return g.first < end && g.second > start;
    });
    if (over_gap) w.interpolated_fraction = 1.0;

    if (w.interpolated_fraction < 1.0) {
      try {
        w.tachogram = resample_tachogram(repaired, params.tachogram_hz, start, end,
                                         params.tachogram_slack_ms);
      } catch (const Error& e) {
        if (e.code() != Errc::span_not_covered) throw;
        w.interpolated_fraction = 1.0;
      }
    }

    while (accel_lo < s.accel.size() && s.accel[accel_lo].t_ms < start) ++accel_lo;
    std::size_t accel_hi = accel_lo;
    while (accel_hi < s.accel.size() && s.accel[accel_hi].t_ms < end) {
      w.accel_slice.push_back(s.accel[accel_hi]);
      ++accel_hi;
    }

    windows.push_back(std::move(w));
  }
  return windows;
}

std::vector<Window> window_quality_filter(std::vector<Window> windows, double max_interp) {
  std::vector<Window> kept;
  kept.reserve(windows.size());
  for (auto& w : windows) {
    if (w.interpolated_fraction > max_interp) continue;
    kept.push_back(std::move(w));
  }
  return kept;
}

std::vector<Window> cap_windows_per_session(std::vector<Window> windows, int cap) {
  if (cap <= 0 || static_cast<int>(windows.size()) <= cap) return windows;
  std::vector<std::size_t> order(windows.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return windows[a].interpolated_fraction < windows[b].interpolated_fraction;
  });
  order.resize(cap);
  std::sort(order.begin(), order.end());
  std::vector<Window> out;
  out.reserve(cap);
  for (std::size_t idx : order) out.push_back(std::move(windows[idx]));
  return out;
}

}  // namespace wlm::clean
