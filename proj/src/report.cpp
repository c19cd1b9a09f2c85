#include "sacolor/report.hpp"

#include <charconv>
#include <istream>
#include <ostream>
#include <string_view>
#include <system_error>

#include "sacolor/errors.hpp"

namespace sacolor {
namespace {

std::vector<std::string_view> split_commas(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    fields.push_back(line.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
    if (comma == std::string_view::npos) return fields;
    start = comma + 1;
  }
}

std::string_view strip_cr(std::string_view s) {
  if (!s.empty() && s.back() == '\r') s.remove_suffix(1);
  return s;
}

template <typename T>
T parse_field(std::string_view field, std::size_t line_no, std::string_view name) {
  T value{};
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc{} || ptr != field.data() + field.size() || field.empty()) {
    throw ParseError(line_no, "bad " + std::string(name) + " field '" + std::string(field) + "'");
  }
  return value;
}

// Reads the header line and yields (line number, fields) for each data row.
template <typename Row>
void read_csv(std::istream& in, std::string_view header, std::size_t n_fields, Row&& on_row) {
  std::string line;
  std::size_t line_no = 0;
  if (!std::getline(in, line)) throw ParseError(1, "missing header");
  ++line_no;
  if (strip_cr(line) != header) {
    throw ParseError(line_no, "expected header '" + std::string(header) + "', got '" + line + "'");
  }
  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view text = strip_cr(line);
    if (text.empty()) continue;
    const auto fields = split_commas(text);
    if (fields.size() != n_fields) {
      throw ParseError(line_no, "expected " + std::to_string(n_fields) + " fields, got " + std::to_string(fields.size()));
    }
    on_row(line_no, fields);
  }
}

}  // namespace

std::string format_real(double value) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, ec == std::errc{} ? ptr : buf);
}

void write_trace_csv(std::ostream& out, std::span<const TraceSample> trace) {
  out << kTraceHeader << '\n';
  for (const TraceSample& s : trace) out << s.step << ',' << s.energy << ',' << format_real(s.beta) << '\n';
}

std::vector<TraceSample> read_trace_csv(std::istream& in) {
  std::vector<TraceSample> out;
  read_csv(in, kTraceHeader, 3, [&](std::size_t line_no, const std::vector<std::string_view>& f) {
    out.push_back({parse_field<std::uint64_t>(f[0], line_no, "step"), parse_field<Energy>(f[1], line_no, "H"),
                   parse_field<double>(f[2], line_no, "beta")});
  });
  return out;
}

void write_sweep_csv(std::ostream& out, std::span<const SweepRecord> rows) {
  out << kSweepHeader << '\n';
  for (const SweepRecord& r : rows) {
    out << format_real(r.c) << ',' << r.q << ',' << r.h_min << ',' << r.n_edges << ',' << r.seed << '\n';
  }
}

std::vector<SweepRecord> read_sweep_csv(std::istream& in) {
  std::vector<SweepRecord> out;
  read_csv(in, kSweepHeader, 5, [&](std::size_t line_no, const std::vector<std::string_view>& f) {
    out.push_back({parse_field<double>(f[0], line_no, "c"), parse_field<Color>(f[1], line_no, "q"),
                   parse_field<Energy>(f[2], line_no, "h_min"), parse_field<std::size_t>(f[3], line_no, "n_edges"),
                   parse_field<std::uint64_t>(f[4], line_no, "seed")});
  });
  return out;
}

nlohmann::ordered_json to_json(const SolveSummary& s) {
  nlohmann::ordered_json j;
  j["h_min"] = s.h_min;
  j["final_beta"] = s.final_beta;
  j["n_accepted"] = s.n_accepted;
  j["all_hmins"] = s.all_hmins;
  j["elapsed_seconds"] = s.elapsed_seconds;
  j["config"] = s.config;
  return j;
}

SolveSummary summary_from_json(const nlohmann::ordered_json& j) {
  try {
    SolveSummary s;
    s.h_min = j.at("h_min").get<Energy>();
    s.final_beta = j.at("final_beta").get<double>();
    s.n_accepted = j.at("n_accepted").get<std::uint64_t>();
    s.all_hmins = j.at("all_hmins").get<std::vector<Energy>>();
    s.elapsed_seconds = j.at("elapsed_seconds").get<double>();
    s.config = j.at("config");
    return s;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(0, std::string("summary JSON: ") + e.what());
  }
}

}  // namespace sacolor
