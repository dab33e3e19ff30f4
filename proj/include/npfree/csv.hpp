#pragma once

// CSV ingestion and serialization. Input rows are either `timestamp,value`
// (NAB layout) or a bare `value`; when a row has several fields the last one
// is the value and everything before it is kept as the timestamp text. A first
// row without any digits is treated as a header.

#include <array>
#include <charconv>
#include <cmath>
#include <cstddef>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include "npfree/converter.hpp"
#include "npfree/detector.hpp"
#include "npfree/error.hpp"
#include "npfree/series.hpp"

namespace npfree::csv {

struct CsvRecord {
  std::string timestamp;  // empty when the file has no timestamp column
  double value = 0.0;
};

namespace detail {

inline std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

inline std::optional<double> parse_double(std::string_view s) {
  s = trim(s);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  if (s.empty()) return std::nullopt;
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

}  // namespace detail

/// Shortest decimal text that reads back to exactly `v`.
inline std::string format_double(double v) {
  std::array<char, 64> buf{};
  const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), ptr);
}

/// Pulls one record at a time, so callers can act on each row before the
/// next line is read.
class RecordReader {
 public:
  explicit RecordReader(std::istream& in) : in_(in) {}

  /// Next data record, or nullopt at end of input. Throws ParseError.
  std::optional<CsvRecord> next() {
    std::string line;
    while (std::getline(in_, line)) {
      ++row_;
      const std::string_view view = detail::trim(line);
      if (view.empty()) continue;
      const auto comma = view.rfind(',');
      const std::string_view field = comma == std::string_view::npos ? view : view.substr(comma + 1);
      const auto value = detail::parse_double(field);
      if (!value) {
        if (!seen_content_ && looks_like_header(view)) {
          seen_content_ = true;
          header_ = true;
          continue;
        }
        throw Error(ErrorCode::parse_error,
                    "row " + std::to_string(row_) + ": cannot parse value '" + std::string(detail::trim(field)) + "'");
      }
      if (!std::isfinite(*value))
        throw Error(ErrorCode::parse_error,
                    "row " + std::to_string(row_) + ": non-finite value '" + std::string(detail::trim(field)) + "'");
      seen_content_ = true;
      CsvRecord rec;
      rec.value = *value;
      if (comma != std::string_view::npos) rec.timestamp = std::string(detail::trim(view.substr(0, comma)));
      return rec;
    }
    return std::nullopt;
  }

  std::size_t row() const noexcept { return row_; }
  bool saw_header() const noexcept { return header_; }

 private:
  // Header text carries no digits; a timestamped row with a bad value does.
  static bool looks_like_header(std::string_view row) {
    return row.find_first_of("0123456789") == std::string_view::npos;
  }

  std::istream& in_;
  std::size_t row_ = 0;
  bool seen_content_ = false;
  bool header_ = false;
};

inline TimeSeries ingest_csv(std::istream& in, std::string name = "series") {
  TimeSeries series{std::move(name), {}, {}};
  RecordReader reader(in);
  bool any_timestamp = false;
  while (auto rec = reader.next()) {
    any_timestamp = any_timestamp || !rec->timestamp.empty();
    series.values.push_back(rec->value);
    series.timestamps.push_back(std::move(rec->timestamp));
  }
  if (series.values.empty()) throw Error(ErrorCode::empty_file, "no data rows in " + series.name);
  if (!any_timestamp) series.timestamps.clear();
  return series;
}

inline std::string stem_of(const std::string& path) {
  const auto slash = path.find_last_of('/');
  std::string base = slash == std::string::npos ? path : path.substr(slash + 1);
  const auto dot = base.find('.');
  return dot == std::string::npos || dot == 0 ? base : base.substr(0, dot);
}

inline TimeSeries ingest_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::io_error, "cannot open " + path);
  return ingest_csv(in, stem_of(path));
}

inline void write_series(std::ostream& out, const TimeSeries& series) {
  const bool stamped = !series.timestamps.empty();
  out << (stamped ? "timestamp,value\n" : "value\n");
  for (std::size_t k = 0; k < series.values.size(); ++k) {
    if (stamped) out << series.timestamps[k] << ',';
    out << format_double(series.values[k]) << '\n';
  }
}

inline constexpr std::string_view kRmseHeader = "t,rmse,retrained";
inline constexpr std::string_view kVerdictHeader = "t,aare,thd,anomalous,retrained";

inline const char* bool_text(bool b) { return b ? "true" : "false"; }

inline void write_row(std::ostream& out, const RmsePoint& p) {
  out << p.t << ',' << format_double(p.rmse) << ',' << bool_text(p.retrained) << '\n';
}

inline void write_row(std::ostream& out, const DetectionVerdict& v) {
  out << v.t << ',' << format_double(v.aare) << ',' << format_double(v.threshold) << ','
      << bool_text(v.anomalous) << ',' << bool_text(v.retrained) << '\n';
}

inline void write_rmse(std::ostream& out, const RmseSeries& series) {
  out << kRmseHeader << '\n';
  for (const auto& p : series.points) write_row(out, p);
}

/// Reads a `t,rmse,retrained` file back into memory.
inline RmseSeries read_rmse(std::istream& in, std::string name = "rmse") {
  RmseSeries out{std::move(name), {}};
  std::string line;
  std::size_t row = 0;
  auto fail = [&](const std::string& why) {
    return Error(ErrorCode::parse_error, out.source_name + " row " + std::to_string(row) + ": " + why);
  };
  while (std::getline(in, line)) {
    ++row;
    const std::string_view view = detail::trim(line);
    if (view.empty()) continue;
    if (row == 1 && view == kRmseHeader) continue;
    const auto c1 = view.find(',');
    const auto c2 = c1 == std::string_view::npos ? c1 : view.find(',', c1 + 1);
    if (c2 == std::string_view::npos) throw fail("expected 3 fields");
    const auto t = detail::parse_double(view.substr(0, c1));
    const auto rmse = detail::parse_double(view.substr(c1 + 1, c2 - c1 - 1));
    const auto flag = detail::trim(view.substr(c2 + 1));
    if (!t || *t < 0 || std::floor(*t) != *t) throw fail("bad index");
    if (!rmse || !std::isfinite(*rmse)) throw fail("bad rmse value");
    if (flag != "true" && flag != "false") throw fail("bad retrained flag");
    out.points.push_back({static_cast<std::size_t>(*t), *rmse, flag == "true"});
  }
  if (out.points.empty()) throw Error(ErrorCode::empty_file, "no data rows in " + out.source_name);
  return out;
}

inline RmseSeries read_rmse(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::io_error, "cannot open " + path);
  return read_rmse(in, stem_of(path));
}

}  // namespace npfree::csv
