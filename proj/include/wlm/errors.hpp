#ifndef WLM_ERRORS_HPP
#define WLM_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace wlm {

enum class Errc {
  malformed_row,
  non_monotonic_timestamp,
  empty_file,
  io_error,
  validation_failed,
  too_few_samples,
  too_few_valid_samples,
  span_not_covered,
  session_too_short,
  degenerate_labels,
  degenerate_class,
  empty_training_set,
  non_convergence,
  non_finite_loss,
  length_mismatch,
  too_few_sessions,
  too_few_per_class,
  bad_config,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, std::string msg, long line = -1)
      : std::runtime_error(std::move(msg)), code_(code), line_(line) {}

  Errc code() const { return code_; }
  long line() const { return line_; }

 private:
  Errc code_;
  long line_;
};

// Thrown by assemble_session when core invariants fail; keeps the
// individual violation strings for reporting.
class ValidationError : public Error {
 public:
  explicit ValidationError(std::vector<std::string> violations)
      : Error(Errc::validation_failed, join(violations)),
        violations_(std::move(violations)) {}

  const std::vector<std::string>& violations() const { return violations_; }

 private:
  static std::string join(const std::vector<std::string>& v) {
    std::string out = "session validation failed:";
    for (const auto& s : v) {
      out += " [" + s + "]";
    }
    return out;
  }
  std::vector<std::string> violations_;
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::malformed_row: return "MalformedRow";
    case Errc::non_monotonic_timestamp: return "NonMonotonicTimestamp";
    case Errc::empty_file: return "EmptyFile";
    case Errc::io_error: return "IoError";
    case Errc::validation_failed: return "ValidationFailed";
    case Errc::too_few_samples: return "TooFewSamples";
    case Errc::too_few_valid_samples: return "TooFewValidSamples";
    case Errc::span_not_covered: return "SpanNotCovered";
    case Errc::session_too_short: return "SessionTooShort";
    case Errc::degenerate_labels: return "DegenerateLabels";
    case Errc::degenerate_class: return "DegenerateClass";
    case Errc::empty_training_set: return "EmptyTrainingSet";
    case Errc::non_convergence: return "NonConvergence";
    case Errc::non_finite_loss: return "NonFiniteLoss";
    case Errc::length_mismatch: return "LengthMismatch";
    case Errc::too_few_sessions: return "TooFewSessions";
    case Errc::too_few_per_class: return "TooFewPerClass";
    case Errc::bad_config: return "BadConfig";
  }
  return "Unknown";
}

}  // namespace wlm

#endif  // WLM_ERRORS_HPP
