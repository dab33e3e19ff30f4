// npfree command-line front end.
//
//   npfree convert    [--in FILE] [--out FILE] [--stream]
//   npfree detect     [--in FILE] [--out FILE] [--stream]
//   npfree compare    A.rmse.csv B.rmse.csv
//   npfree bench      --in FILE [--csv FILE]
//   npfree experiment offsets|reverse|sine|znorm-demo [--in FILE] [--n N --period P --amplitude A]
//
// Exit codes: 0 success, 1 usage, otherwise the npfree::ErrorCode value.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "npfree/npfree.hpp"
#include "npfree/experiments.hpp"

namespace {

using namespace npfree;

struct IoOptions {
  std::string in = "-";
  std::string out = "-";
  bool stream = false;
};

class Input {
 public:
  explicit Input(const std::string& path) {
    if (path != "-") {
      file_ = std::make_unique<std::ifstream>(path);
      if (!*file_) throw Error(ErrorCode::io_error, "cannot open " + path);
    }
  }
  std::istream& get() { return file_ ? *file_ : std::cin; }

 private:
  std::unique_ptr<std::ifstream> file_;
};

class Output {
 public:
  explicit Output(const std::string& path) {
    if (path != "-") {
      file_ = std::make_unique<std::ofstream>(path, std::ios::binary | std::ios::trunc);
      if (!*file_) throw Error(ErrorCode::io_error, "cannot write " + path);
    }
  }
  std::ostream& get() { return file_ ? *file_ : std::cout; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

// Rows are flushed one by one so a downstream reader sees each value before
// the next input line is consumed.
template <typename Stepper>
std::size_t run_stream(const IoOptions& io, std::string_view header, Stepper& stepper) {
  Input in(io.stream ? std::string("-") : io.in);
  Output out(io.out);
  auto& os = out.get();
  os << header << '\n' << std::flush;
  csv::RecordReader reader(in.get());
  std::size_t consumed = 0;
  while (auto rec = reader.next()) {
    ++consumed;
    if (auto row = stepper.step(rec->value)) {
      csv::write_row(os, *row);
      os.flush();
    }
  }
  return consumed;
}

int run_convert(const IoOptions& io) {
  Converter converter;
  const std::size_t n = run_stream(io, csv::kRmseHeader, converter);
  if (n < kMinConvertLength)
    throw Error(ErrorCode::too_short, "convert needs at least 6 values, got " + std::to_string(n));
  return 0;
}

int run_detect(const IoOptions& io) {
  Detector detector;
  run_stream(io, csv::kVerdictHeader, detector);
  return 0;
}

int run_compare(const std::string& a, const std::string& b) {
  const auto ra = csv::read_rmse(a);
  const auto rb = csv::read_rmse(b);
  std::printf("%.6f\n", euclidean_distance(ra.values(), rb.values()));
  return 0;
}

void print_latency(const char* label, const LatencyStats& s) {
  std::printf("  %-24s %8zu steps  mean %.6f s  std %.6f s\n", label, s.count, s.mean_seconds, s.std_seconds);
}

int run_bench(const std::string& in, const std::string& csv_path) {
  const auto series = csv::ingest_csv(in);
  const auto r = bench(series);
  std::printf("series %s: %zu points, %zu emitted\n", r.series_name.c_str(), r.n_points, r.n_emitted);
  std::printf("  retrains                 %zu out of %zu (%.2f%%)\n", r.n_retrains, r.n_points,
              100.0 * r.retrain_ratio);
  print_latency("with retraining", r.with_retrain);
  print_latency("without retraining", r.without_retrain);

  if (!csv_path.empty()) {
    Output out(csv_path);
    auto& os = out.get();
    os << "series,n_points,n_retrains,retrain_ratio,mean_retrain_s,std_retrain_s,mean_plain_s,std_plain_s\n";
    os << r.series_name << ',' << r.n_points << ',' << r.n_retrains << ',' << csv::format_double(r.retrain_ratio)
       << ',' << csv::format_double(r.with_retrain.mean_seconds) << ','
       << csv::format_double(r.with_retrain.std_seconds) << ','
       << csv::format_double(r.without_retrain.mean_seconds) << ','
       << csv::format_double(r.without_retrain.std_seconds) << '\n';
  }
  return 0;
}

// Writes to a sibling temp file and renames it into place.
void write_atomically(const std::filesystem::path& path, const RmseSeries& series) {
  const auto tmp = std::filesystem::path(path.string() + ".tmp");
  {
    std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
    if (!os) throw Error(ErrorCode::io_error, "cannot write " + tmp.string());
    csv::write_rmse(os, series);
  }
  std::filesystem::rename(tmp, path);
}

struct ExperimentOptions {
  std::string set;
  std::string in;
  std::string out_dir;
  std::size_t n = SineDefaults::n;
  std::size_t period = SineDefaults::period;
  double amplitude = SineDefaults::amplitude;
};

void print_opposite(const TimeSeries& s, const experiments::OppositeResult& r) {
  for (const auto& v : r.similar) std::printf("ED(%s, %s) = %.6f\n", s.name.c_str(), v.name.c_str(), v.distance);
  std::printf("ED(%s, %s-reverse) = %.6f\n", s.name.c_str(), s.name.c_str(), r.opposite_distance);
  std::printf("largest similar / opposite ratio = %.6f\n", r.worst_ratio);
}

int run_experiment(const ExperimentOptions& opt) {
  auto require_input = [&] {
    if (opt.in.empty()) throw CLI::ValidationError("--in", "experiment " + opt.set + " needs --in");
    return csv::ingest_csv(opt.in);
  };
  if (opt.set == "offsets") {
    const auto series = require_input();
    const auto r = experiments::offsets(series);
    std::printf("%-24s %s\n", "variant", "euclidean_distance");
    for (const auto& v : r.variants) std::printf("%-24s %.6f\n", v.name.c_str(), v.distance);
    if (!opt.out_dir.empty()) {
      std::filesystem::create_directories(opt.out_dir);
      write_atomically(std::filesystem::path(opt.out_dir) / (series.name + ".rmse.csv"), r.base);
      for (const auto& v : r.variants)
        write_atomically(std::filesystem::path(opt.out_dir) / (v.name + ".rmse.csv"), v.rmse);
    }
  } else if (opt.set == "reverse") {
    const auto series = require_input();
    print_opposite(series, experiments::opposite(series));
  } else if (opt.set == "sine") {
    const auto series = sine_series(opt.n, opt.period, opt.amplitude);
    print_opposite(series, experiments::opposite(series));
  } else if (opt.set == "znorm-demo") {
    const auto series = opt.in.empty() ? sine_series(24, 12, 5.0) : csv::ingest_csv(opt.in);
    const auto d = experiments::znorm_demo(series);
    std::printf("k,original,affine,original_z,affine_z\n");
    for (std::size_t k = 0; k < series.size(); ++k)
      std::printf("%zu,%s,%s,%s,%s\n", k, csv::format_double(d.original.values[k]).c_str(),
                  csv::format_double(d.affine.values[k]).c_str(), csv::format_double(d.original_z.values[k]).c_str(),
                  csv::format_double(d.affine_z.values[k]).c_str());
    std::printf("raw euclidean distance = %.6f\n", d.raw_distance);
    std::printf("max |znorm difference| = %.3e\n", d.max_z_difference);
  } else {
    throw CLI::ValidationError("set", "unknown experiment set '" + opt.set + "'");
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Normalization-free, tuning-free streaming time-series representation"};
  app.require_subcommand(1);

  IoOptions convert_io;
  auto* convert_cmd = app.add_subcommand("convert", "Convert a series into its RMSE series (t,rmse,retrained)");
  convert_cmd->add_option("--in", convert_io.in, "Input CSV (timestamp,value or value); '-' for stdin");
  convert_cmd->add_option("--out", convert_io.out, "Output CSV; '-' for stdout");
  convert_cmd->add_flag("--stream", convert_io.stream, "Read values line by line from stdin");

  IoOptions detect_io;
  auto* detect_cmd = app.add_subcommand("detect", "Anomaly verdicts (t,aare,thd,anomalous,retrained)");
  detect_cmd->add_option("--in", detect_io.in, "Input CSV; '-' for stdin");
  detect_cmd->add_option("--out", detect_io.out, "Output CSV; '-' for stdout");
  detect_cmd->add_flag("--stream", detect_io.stream, "Read values line by line from stdin");

  std::string cmp_a, cmp_b;
  auto* compare_cmd = app.add_subcommand("compare", "Euclidean distance between two RMSE series files");
  compare_cmd->add_option("a", cmp_a, "First t,rmse,retrained file")->required();
  compare_cmd->add_option("b", cmp_b, "Second t,rmse,retrained file")->required();

  std::string bench_in, bench_csv;
  auto* bench_cmd = app.add_subcommand("bench", "Retrain counts and per-step latency");
  bench_cmd->add_option("--in", bench_in, "Input CSV")->required();
  bench_cmd->add_option("--csv", bench_csv, "Also write the report as CSV");

  ExperimentOptions exp;
  auto* exp_cmd = app.add_subcommand("experiment", "Offset, opposite-pattern and z-normalization experiments");
  exp_cmd->add_option("name", exp.set, "offsets | reverse | sine | znorm-demo");
  exp_cmd->add_option("--set", exp.set, "Same as the positional set name");
  exp_cmd->add_option("--in", exp.in, "Input CSV");
  exp_cmd->add_option("--out-dir", exp.out_dir, "offsets: write every RMSE series here");
  exp_cmd->add_option("--n", exp.n, "sine: number of points")->check(CLI::PositiveNumber);
  exp_cmd->add_option("--period", exp.period, "sine: period in samples")->check(CLI::Range(2ul, 1ul << 40));
  exp_cmd->add_option("--amplitude", exp.amplitude, "sine: amplitude");

  CLI11_PARSE(app, argc, argv);

  try {
    if (convert_cmd->parsed()) return run_convert(convert_io);
    if (detect_cmd->parsed()) return run_detect(detect_io);
    if (compare_cmd->parsed()) return run_compare(cmp_a, cmp_b);
    if (bench_cmd->parsed()) return run_bench(bench_in, bench_csv);
    if (exp_cmd->parsed()) {
      if (exp.set.empty()) throw CLI::ValidationError("set", "an experiment set is required");
      return run_experiment(exp);
    }
  } catch (const Error& e) {
    std::cerr << "npfree: " << e.what() << '\n';
    return static_cast<int>(e.code());
  } catch (const CLI::Error& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "npfree: " << e.what() << '\n';
    return 1;
  }
  return 1;
}
