#include "diracwell/cli.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "diracwell/errors.hpp"
#include "diracwell/plot_script.hpp"
#include "diracwell/sweep.hpp"
#include "diracwell/validation.hpp"

namespace diracwell {

namespace {

namespace fs = std::filesystem;

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void write_file(const fs::path& path, const std::string& text) {
  if (path.has_parent_path()) {
    std::error_code ec;
    fs::create_directories(path.parent_path(), ec);
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot open " + path.string() + " for writing");
  f << text;
  if (!f) throw IoError("failed writing " + path.string());
}

struct RawOptions {
  std::string mode;
  std::optional<double> alpha, beta, gamma, w;
  std::optional<double> width_min, width_max, alpha_min, alpha_max, beta_min, beta_max;
  std::optional<double> window_max;
  std::optional<std::size_t> points;
  std::size_t nodes{4096};
  std::string out;
  std::string trace_dir;
  bool plot{false};
};

SweepConfig to_config(const RawOptions& o) {
  SweepConfig c;
  c.mode = parse_mode(o.mode);
  c.alpha = o.alpha;
  c.beta = o.beta;
  c.gamma = o.gamma;
  c.temporal_width = o.w;
  c.points = o.points;
  c.nodes = o.nodes;
  c.window_max = o.window_max;
  c.output_path = o.out;
  c.trace_dir = o.trace_dir;
  c.emit_plot_script = o.plot;

  const bool width_axis = c.mode == Mode::WidthSweep || c.mode == Mode::PhaseSweep ||
                          c.mode == Mode::Packet || c.mode == Mode::CompareNonrel;
  auto take = [&](const std::optional<double>& lo, const std::optional<double>& hi, bool used,
                  const char* name) {
    if (!lo && !hi) return;
    if (!used) throw ConfigError(std::string(name) + ": not used by mode " + o.mode);
    c.grid_min = lo;
    c.grid_max = hi;
  };
  take(o.width_min, o.width_max, width_axis, "width-min/width-max");
  take(o.alpha_min, o.alpha_max, c.mode == Mode::EnergySweep, "alpha-min/alpha-max");
  take(o.beta_min, o.beta_max, c.mode == Mode::ThresholdTable, "beta-min/beta-max");
  if (c.emit_plot_script && c.output_path.empty())
    throw ConfigError("plot: a plot script needs --out so it can reference the CSV");
  if (!c.trace_dir.empty() && c.mode != Mode::Packet)
    throw ConfigError("trace-dir: only used by packet mode");
  return c;
}

void emit(const Table& table, const SweepConfig& c, std::ostream& out) {
  const std::string csv = to_csv(table);
  if (c.output_path.empty()) {
    out << csv;
    return;
  }
  const fs::path path(c.output_path);
  write_file(path, csv);
  if (c.emit_plot_script) {
    fs::path script = path;
    script.replace_extension(".gp");
    write_file(script, plot_script(c.mode, path.filename().string()));
  }
}

int dispatch(const SweepConfig& config, std::ostream& out, std::ostream& err) {
  if (config.mode == Mode::Validate) {
    const auto results = run_validation_suite();
    print_results(results, out);
    return all_passed(results) ? kExitOk : kExitValidation;
  }
  const ResolvedConfig rc = resolve(config);
  switch (rc.mode) {
    case Mode::WidthSweep:
    case Mode::PhaseSweep:
      emit(run_width_sweep(rc), config, out);
      break;
    case Mode::EnergySweep:
      emit(run_energy_sweep(rc), config, out);
      break;
    case Mode::CompareNonrel:
      emit(run_compare_nonrel(rc), config, out);
      break;
    case Mode::ThresholdTable:
      emit(run_threshold_table(rc), config, out);
      break;
    case Mode::Packet: {
      const PacketSweep sweep = run_packet(rc, !config.trace_dir.empty());
      emit(sweep.summary, config, out);
      for (std::size_t i = 0; i < sweep.traces.size(); ++i) {
        if (sweep.traces[i].columns.empty()) continue;
        char name[32];
        std::snprintf(name, sizeof name, "trace_%03zu.csv", i);
        write_file(fs::path(config.trace_dir) / name, to_csv(sweep.traces[i]));
      }
      std::ostringstream summary;
      summary << "rows=" << sweep.summary.rows.size() << " failed=" << sweep.failed_rows
              << " max_abs_gap=" << format_number(sweep.max_abs_gap) << "\n";
      if (!config.output_path.empty()) {
        fs::path side(config.output_path);
        side.replace_extension(".summary.txt");
        write_file(side, summary.str());
      }
      err << summary.str();
      break;
    }
    case Mode::Validate:
      break;
  }
  return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Group delay of Dirac particles crossing a rectangular potential well", "diracwell"};
  RawOptions o;
  app.add_option("mode", o.mode,
                 "width-sweep | energy-sweep | phase-sweep | packet | threshold-table | "
                 "compare-nonrel | validate")
      ->required();
  app.add_option("--alpha", o.alpha, "total energy E/mc^2 (central energy in packet mode)");
  app.add_option("--beta", o.beta, "well depth V0/mc^2");
  app.add_option("--gamma", o.gamma, "hbar/(a m c), fixes the width in energy-sweep");
  app.add_option("--width-min", o.width_min, "k'a grid start");
  app.add_option("--width-max", o.width_max, "k'a grid stop");
  app.add_option("--alpha-min", o.alpha_min, "alpha grid start (energy-sweep)");
  app.add_option("--alpha-max", o.alpha_max, "alpha grid stop (energy-sweep)");
  app.add_option("--beta-min", o.beta_min, "beta grid start (threshold-table)");
  app.add_option("--beta-max", o.beta_max, "beta grid stop (threshold-table)");
  app.add_option("--points", o.points, "grid points (>= 2)");
  app.add_option("--w", o.w, "packet temporal width in hbar/mc^2");
  app.add_option("--nodes", o.nodes, "quadrature nodes for packet mode");
  app.add_option("--window-max", o.window_max, "upper end of the packet energy window");
  app.add_option("--out", o.out, "CSV output path (stdout when omitted)");
  app.add_option("--trace-dir", o.trace_dir, "directory for per-width packet intensity traces");
  app.add_flag("--plot", o.plot, "also write a gnuplot script next to the CSV");
  app.set_config("--config", "", "flat key = value file; command-line flags take precedence");
  app.allow_config_extras(CLI::config_extras_mode::error);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "configuration error: " << e.what() << "\n";
    return kExitConfig;
  }

  try {
    return dispatch(to_config(o), out, err);
  } catch (const ConfigError& e) {
    err << "configuration error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const DomainError& e) {
    err << "physics domain error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const PreconditionError& e) {
    err << "physics domain error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const IoError& e) {
    err << "i/o error: " << e.what() << "\n";
    return kExitIo;
  }
}

}  // namespace diracwell
