#include "wlm/core.hpp"

#include <cmath>
#include <set>
#include <string>

namespace wlm {

int feature_index(const std::string& name) {
  for (int i = 0; i < kFeatureCount; ++i) {
    if (name == kFeatureNames[i]) return i;
  }
  return -1;
}

namespace {

void validate_tlx(const TlxResponse& tlx, std::vector<std::string>& out) {
  for (int i = 0; i < kTlxFactorCount; ++i) {
    double r = tlx.ratings[i];
    if (!(r >= 0.0 && r <= 100.0)) {
      out.push_back("tlx rating out of range @" + std::to_string(i));
    }
  }
  if (tlx.comparisons.size() != kTlxComparisonCount) {
    out.push_back("tlx comparisons count " + std::to_string(tlx.comparisons.size()) +
                  " != 15");
    return;
  }
  std::set<std::pair<int, int>> seen;
  for (size_t i = 0; i < tlx.comparisons.size(); ++i) {
    const auto& c = tlx.comparisons[i];
    bool ok = c.a >= 0 && c.a < kTlxFactorCount && c.b >= 0 &&
              c.b < kTlxFactorCount && c.a != c.b;
    if (!ok) {
      out.push_back("tlx comparison invalid factors @" + std::to_string(i));
      continue;
    }
    if (c.winner != c.a && c.winner != c.b) {
      out.push_back("tlx comparison winner not in pair @" + std::to_string(i));
    }
    auto key = std::minmax(c.a, c.b);
    if (!seen.insert(key).second) {
      out.push_back("tlx comparison duplicate pair @" + std::to_string(i));
    }
  }
  // 15 comparisons with no duplicates cover every unordered pair.
}

}  // namespace

std::vector<std::string> validate_session(const Session& s) {
  std::vector<std::string> out;
  if (s.duration_ms <= 0) out.push_back("duration_ms not positive");
  if (s.duration_ms > kMaxSessionMs) out.push_back("duration_ms exceeds 60 minutes");
  if (s.rr.empty()) out.push_back("rr series empty");

  for (size_t i = 0; i < s.rr.size(); ++i) {
    const auto& r = s.rr[i];
    if (!(r.rr_ms >= kRrMinMs && r.rr_ms <= kRrMaxMs) || !std::isfinite(r.rr_ms)) {
      out.push_back("rr_ms out of range @" + std::to_string(i));
    }
    if (r.t_ms < 0 || r.t_ms > s.duration_ms) {
      out.push_back("rr t_ms out of range @" + std::to_string(i));
    }
    if (i > 0 && r.t_ms <= s.rr[i - 1].t_ms) {
      out.push_back("rr t_ms not strictly increasing @" + std::to_string(i));
    }
  }
  for (size_t i = 0; i < s.accel.size(); ++i) {
    const auto& a = s.accel[i];
    if (a.t_ms < 0 || a.t_ms > s.duration_ms) {
      out.push_back("accel t_ms out of range @" + std::to_string(i));
    }
    if (i > 0 && a.t_ms <= s.accel[i - 1].t_ms) {
      out.push_back("accel t_ms not strictly increasing @" + std::to_string(i));
    }
    if (!std::isfinite(a.x) || !std::isfinite(a.y) || !std::isfinite(a.z)) {
      out.push_back("accel value not finite @" + std::to_string(i));
    }
  }
  if (s.tlx) validate_tlx(*s.tlx, out);
  if (s.tlx_delay_min && (*s.tlx_delay_min < 0 || !std::isfinite(*s.tlx_delay_min))) {
    out.push_back("tlx_delay_min negative");
  }
  return out;
}

}  // namespace wlm
