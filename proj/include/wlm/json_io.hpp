#ifndef WLM_JSON_IO_HPP
#define WLM_JSON_IO_HPP

#include <json.hpp>

#include <string>

#include "wlm/core.hpp"
#include "wlm/errors.hpp"

namespace wlm {

inline int tlx_factor_index(const std::string& name) {
  for (int i = 0; i < kTlxFactorCount; ++i) {
    if (name == kTlxFactorNames[i]) return i;
  }
  throw Error(Errc::validation_failed, "unknown TLX factor: " + name);
}

inline void to_json(nlohmann::json& j, const RrSample& s) {
  j = nlohmann::json{{"t_ms", s.t_ms}, {"rr_ms", s.rr_ms}};
}
inline void from_json(const nlohmann::json& j, RrSample& s) {
  j.at("t_ms").get_to(s.t_ms);
  j.at("rr_ms").get_to(s.rr_ms);
}

inline void to_json(nlohmann::json& j, const AccelSample& s) {
  j = nlohmann::json{{"t_ms", s.t_ms}, {"x", s.x}, {"y", s.y}, {"z", s.z}};
}
inline void from_json(const nlohmann::json& j, AccelSample& s) {
  j.at("t_ms").get_to(s.t_ms);
  j.at("x").get_to(s.x);
  j.at("y").get_to(s.y);
  j.at("z").get_to(s.z);
}

inline void to_json(nlohmann::json& j, const TlxComparison& c) {
  j = nlohmann::json{{"a", kTlxFactorNames[c.a]},
                     {"b", kTlxFactorNames[c.b]},
                     {"winner", kTlxFactorNames[c.winner]}};
}
inline void from_json(const nlohmann::json& j, TlxComparison& c) {
  c.a = tlx_factor_index(j.at("a").get<std::string>());
  c.b = tlx_factor_index(j.at("b").get<std::string>());
  c.winner = tlx_factor_index(j.at("winner").get<std::string>());
}

inline void to_json(nlohmann::json& j, const TlxResponse& t) {
  j = nlohmann::json{{"ratings", t.ratings}, {"comparisons", t.comparisons}};
}
inline void from_json(const nlohmann::json& j, TlxResponse& t) {
  j.at("ratings").get_to(t.ratings);
  j.at("comparisons").get_to(t.comparisons);
}

inline void to_json(nlohmann::json& j, const Session& s) {
  j = nlohmann::json{{"id", s.id},
                     {"participant_id", s.participant_id},
                     {"duration_ms", s.duration_ms},
                     {"accel_unit", s.accel_unit},
                     {"rr", s.rr},
                     {"accel", s.accel}};
  if (s.tlx) j["tlx"] = *s.tlx;
  if (s.tlx_delay_min) j["tlx_delay_min"] = *s.tlx_delay_min;
}
inline void from_json(const nlohmann::json& j, Session& s) {
  j.at("id").get_to(s.id);
  j.at("participant_id").get_to(s.participant_id);
  j.at("duration_ms").get_to(s.duration_ms);
  j.at("accel_unit").get_to(s.accel_unit);
  j.at("rr").get_to(s.rr);
  j.at("accel").get_to(s.accel);
  if (j.contains("tlx")) s.tlx = j.at("tlx").get<TlxResponse>();
  if (j.contains("tlx_delay_min")) s.tlx_delay_min = j.at("tlx_delay_min").get<double>();
}

}  // namespace wlm

#endif  // WLM_JSON_IO_HPP
