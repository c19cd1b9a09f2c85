#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"
#include "sacolor/annealer.hpp"
#include "sacolor/sweep.hpp"

namespace sacolor {

// Output schemas (version 1):
//   trace CSV   header `step,H,beta`           one row per TraceSample
//   sweep CSV   header `c,q,h_min,n_edges,seed` one row per SweepRecord
//   summary     JSON object with keys h_min, final_beta, n_accepted,
//               all_hmins, elapsed_seconds, config
// Reals are written in shortest round-trip form.

inline constexpr const char* kTraceHeader = "step,H,beta";
inline constexpr const char* kSweepHeader = "c,q,h_min,n_edges,seed";

std::string format_real(double value);

void write_trace_csv(std::ostream& out, std::span<const TraceSample> trace);
/// Throws ParseError on a bad header or row.
std::vector<TraceSample> read_trace_csv(std::istream& in);

void write_sweep_csv(std::ostream& out, std::span<const SweepRecord> rows);
std::vector<SweepRecord> read_sweep_csv(std::istream& in);

struct SolveSummary {
  Energy h_min = 0;
  double final_beta = 0.0;
  std::uint64_t n_accepted = 0;
  std::vector<Energy> all_hmins;
  double elapsed_seconds = 0.0;
  /// Free-form echo of every parameter needed to regenerate the run.
  nlohmann::ordered_json config = nlohmann::ordered_json::object();

  friend bool operator==(const SolveSummary&, const SolveSummary&) = default;
};

nlohmann::ordered_json to_json(const SolveSummary& s);
/// Throws ParseError (line 0) when a required key is missing or mistyped.
SolveSummary summary_from_json(const nlohmann::ordered_json& j);

}  // namespace sacolor
