#include "cli/app.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <limits>
#include <map>
#include <optional>
#include <ostream>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "cli/table.hpp"
#include "pnr/pnr.hpp"

namespace pnr::cli {

namespace {

// Raised for flag combinations CLI11 cannot express; maps to exit code 2.
class UsageError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

const CLI::Validator kFinite(
    [](std::string& input) -> std::string {
      double v = 0.0;
      if (!CLI::detail::lexical_cast(input, v) || !std::isfinite(v)) {
        return "value must be a finite number, got " + input;
      }
      return {};
    },
    "FINITE");

const CLI::Validator kProbability(
    [](std::string& input) -> std::string {
      double v = 0.0;
      if (!CLI::detail::lexical_cast(input, v) || !(v >= 0.0 && v <= 1.0)) {
        return "value must lie in [0, 1], got " + input;
      }
      return {};
    },
    "PROB");

constexpr std::int64_t kMaxCutoff = 100000;

struct OutputOptions {
  std::string format = "csv";
  std::string path = "-";
};

void add_output_options(CLI::App* sub, OutputOptions& o) {
  sub->add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  sub->add_option("-o,--output", o.path, "Output file ('-' for stdout)")->capture_default_str();
}

Format parse_format(const std::string& name) { return name == "json" ? Format::Json : Format::Csv; }

std::string extension(Format f) { return f == Format::Json ? "json" : "csv"; }

void emit(const Table& table, const OutputOptions& o, std::ostream& out) {
  const Format format = parse_format(o.format);
  if (o.path == "-") {
    write_table(table, format, out);
    return;
  }
  std::ofstream file(o.path, std::ios::binary);
  if (!file) {
    throw std::runtime_error("cannot open output file '" + o.path + "'");
  }
  write_table(table, format, file);
}

CLI::Option* add_alpha_sq(CLI::App* sub, double& value) {
  return sub->add_option("--alpha-sq", value, "Mean photon number |alpha|^2 of the signal")
      ->required()
      ->check(kFinite & CLI::NonNegativeNumber);
}

CLI::Option* add_cutoff(CLI::App* sub, std::int64_t& value) {
  return sub->add_option("--m", value, "Postselection cutoff: counts 1..m are inconclusive")
      ->required()
      ->check(CLI::Range(std::int64_t{0}, kMaxCutoff));
}

// ---------------------------------------------------------------- bounds

struct BoundsCmd {
  double alpha_sq = 0.0;
  double p1 = 0.5;
  std::size_t samples = 21;
  OutputOptions output;

  void attach(CLI::App* sub) {
    add_alpha_sq(sub, alpha_sq);
    sub->add_option("--p1", p1, "Prior of |-alpha> (Helstrom only)")->check(kProbability)->capture_default_str();
    sub->add_option("--samples", samples, "Number of p_inc samples over [0, sigma]")
        ->check(CLI::Range(std::size_t{2}, std::size_t{1000000}))
        ->capture_default_str();
    add_output_options(sub, output);
  }

  int run(std::ostream& out, std::ostream& err) const {
    const Amplitude alpha = Amplitude::from_mean_photon_number(alpha_sq);
    const Alphabet alphabet(alpha, p1, 1.0 - p1);
    const double sigma = overlap(alpha);
    const double p_h = helstrom(alphabet);
    const double p_idp = idp_inconclusive(alphabet);

    Table t;
    t.columns = {"alpha_sq", "sigma", "helstrom", "idp_inconclusive"};
    if (p1 != 0.5) {
      err << "note: intermediate bound holds for equal priors only; omitted for --p1 " << p1 << '\n';
      t.rows.push_back({alpha_sq, sigma, p_h, p_idp});
    } else {
      t.columns.insert(t.columns.end(), {"p_inc", "intermediate_bound"});
      for (std::size_t i = 0; i < samples; ++i) {
        const double p_inc = sigma * static_cast<double>(i) / static_cast<double>(samples - 1);
        const double bound = p_inc < 1.0 ? intermediate_bound(p_inc, sigma) : 0.0;
        t.rows.push_back({alpha_sq, sigma, p_h, p_idp, p_inc, bound});
      }
    }
    emit(t, output, out);
    return kSuccess;
  }
};

// ---------------------------------------------------------------- receiver

struct ReceiverCmd {
  double alpha_sq = 0.0;
  double beta = 0.0;
  std::int64_t m = 0;
  bool direct = false;
  double p1 = 0.5;
  CLI::Option* p1_opt = nullptr;
  OutputOptions output;

  void attach(CLI::App* sub) {
    add_alpha_sq(sub, alpha_sq);
    sub->add_option("--beta", beta, "Displacement amplitude")->required()->check(kFinite);
    add_cutoff(sub, m);
    sub->add_flag("--direct", direct, "Direct Poisson summation only (supports --p1)");
    p1_opt = sub->add_option("--p1", p1, "Prior of |-alpha> (requires --direct)")->check(kProbability);
    add_output_options(sub, output);
  }

  int run(std::ostream& out, std::ostream&) const {
    if (p1_opt->count() > 0 && !direct) {
      throw UsageError("--p1: general priors are only supported together with --direct");
    }
    const Amplitude alpha = Amplitude::from_mean_photon_number(alpha_sq);
    const ReceiverParams params{Amplitude(beta), static_cast<std::uint32_t>(m)};
    const Rates summed = rates_direct(Alphabet(alpha, p1, 1.0 - p1), params);

    Table t;
    if (direct) {
      t.columns = {"alpha_sq", "beta", "m", "p1", "p_error_direct", "p_inc_direct"};
      t.rows.push_back({alpha_sq, beta, m, p1, summed.p_error, summed.p_inconclusive});
    } else {
      const Rates closed = rates_closed_form(alpha, params);
      t.columns = {"alpha_sq", "beta", "m", "p_error", "p_inc", "p_error_direct", "p_inc_direct"};
      t.rows.push_back(
          {alpha_sq, beta, m, closed.p_error, closed.p_inconclusive, summed.p_error, summed.p_inconclusive});
    }
    emit(t, output, out);
    return kSuccess;
  }
};

// ---------------------------------------------------------------- optimize

struct OptimizeCmd {
  double alpha_sq = 0.0;
  std::int64_t m = 0;
  OutputOptions output;

  void attach(CLI::App* sub) {
    add_alpha_sq(sub, alpha_sq)->check(CLI::PositiveNumber);
    add_cutoff(sub, m);
    add_output_options(sub, output);
  }

  int run(std::ostream& out, std::ostream&) const {
    const Amplitude alpha = Amplitude::from_mean_photon_number(alpha_sq);
    const OptResult r = optimize_displacement(alpha, static_cast<std::uint32_t>(m));
    Table t;
    t.columns = {"alpha_sq", "m", "beta_opt", "p_error", "p_inc", "matched_bound"};
    t.rows.push_back(
        {alpha_sq, m, r.beta_opt.value(), r.rates.p_error, r.rates.p_inconclusive, r.matched_bound});
    emit(t, output, out);
    return kSuccess;
  }
};

// ---------------------------------------------------------------- mc

struct McCmd {
  double alpha_sq = 0.0;
  double beta = 0.0;
  std::int64_t m = 0;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  double p1 = 0.5;
  unsigned threads = 0;
  OutputOptions output;

  void attach(CLI::App* sub) {
    add_alpha_sq(sub, alpha_sq);
    sub->add_option("--beta", beta, "Displacement amplitude")->required()->check(kFinite);
    add_cutoff(sub, m);
    sub->add_option("--trials", trials, "Number of simulated trials")
        ->required()
        ->check(CLI::Range(std::uint64_t{1}, std::numeric_limits<std::uint64_t>::max()));
    sub->add_option("--seed", seed, "64-bit seed")->required();
    sub->add_option("--p1", p1, "Prior of |-alpha>")->check(kProbability)->capture_default_str();
    sub->add_option("--threads", threads, "Worker threads (0 = all cores)")->capture_default_str();
    add_output_options(sub, output);
  }

  int run(std::ostream& out, std::ostream& err) const {
    const Alphabet alphabet(Amplitude::from_mean_photon_number(alpha_sq), p1, 1.0 - p1);
    const ReceiverParams params{Amplitude(beta), static_cast<std::uint32_t>(m)};
    const TrialTally tally = simulate(alphabet, params, trials, seed, SimulateOptions{threads});
    if (!tally.error_defined) {
      err << "warning: no conclusive trials; empirical p_error is undefined\n";
    }

    Rates exact{std::numeric_limits<double>::quiet_NaN(), std::numeric_limits<double>::quiet_NaN(),
                RatesMethod::DirectSum};
    try {
      exact = rates_direct(alphabet, params);
    } catch (const NoConclusiveResults&) {
    }

    Table t;
    t.columns = {"alpha_sq", "beta", "m", "p1", "n_trials", "seed"};
    std::vector<Cell> row = {alpha_sq, beta, m, p1, tally.n_trials, tally.seed};
    for (StateSign s : {StateSign::Minus, StateSign::Plus}) {
      for (Outcome o : kAllOutcomes) {
        t.columns.push_back(fmt::format("{}_{}", s == StateSign::Minus ? "minus" : "plus", to_string(o)));
        row.emplace_back(tally.count(s, o));
      }
    }
    t.columns.insert(t.columns.end(), {"error_defined", "p_error", "p_inc", "stderr_error", "stderr_inc",
                                       "p_error_exact", "p_inc_exact"});
    row.insert(row.end(), {std::int64_t{tally.error_defined}, tally.empirical_rates.p_error,
                           tally.empirical_rates.p_inconclusive, tally.stderr_error, tally.stderr_inc,
                           exact.p_error, exact.p_inconclusive});
    t.rows.push_back(std::move(row));
    emit(t, output, out);
    return kSuccess;
  }
};

// ---------------------------------------------------------------- sweep

struct SweepCmd {
  std::string kind;
  std::optional<double> alpha_start, alpha_stop, alpha_step;
  std::optional<std::size_t> alpha_points;
  std::optional<double> beta_start, beta_stop, beta_step;
  std::vector<std::int64_t> m_values;
  std::optional<double> fixed_alpha_sq;
  unsigned threads = 0;
  OutputOptions output;

  void attach(CLI::App* sub) {
    std::vector<std::string> kinds;
    for (auto k : {SweepKind::ErrorVsBeta, SweepKind::AcceptanceVsBeta, SweepKind::BetaOptVsAlpha,
                   SweepKind::ErrorVsAlpha, SweepKind::AcceptanceVsAlpha, SweepKind::Parametric}) {
      kinds.emplace_back(to_string(k));
    }
    sub->add_option("--kind", kind, "Sweep kind")->required()->check(CLI::IsMember(kinds));
    sub->add_option("--alpha-sq-start", alpha_start, "First |alpha|^2")->check(kFinite);
    sub->add_option("--alpha-sq-stop", alpha_stop, "Last |alpha|^2")->check(kFinite);
    sub->add_option("--alpha-sq-step", alpha_step, "Linear |alpha|^2 step")->check(kFinite);
    sub->add_option("--alpha-sq-points", alpha_points, "Log-spaced |alpha|^2 point count")
        ->excludes("--alpha-sq-step");
    sub->add_option("--beta-start", beta_start, "First displacement")->check(kFinite);
    sub->add_option("--beta-stop", beta_stop, "Last displacement")->check(kFinite);
    sub->add_option("--beta-step", beta_step, "Displacement step")->check(kFinite);
    sub->add_option("--m", m_values, "Postselection cutoffs (comma separated)")
        ->delimiter(',')
        ->check(CLI::Range(std::int64_t{0}, kMaxCutoff));
    sub->add_option("--fixed-alpha-sq", fixed_alpha_sq, "|alpha|^2 for displacement sweeps")
        ->check(kFinite & CLI::NonNegativeNumber);
    sub->add_option("--threads", threads, "Worker threads (0 = all cores)")->capture_default_str();
    add_output_options(sub, output);
  }

  SweepSpec spec() const {
    SweepSpec s = default_sweep(parse_sweep_kind(kind));
    const GridRange& a = s.alpha_sq_range;
    const double a_start = alpha_start.value_or(a.start());
    const double a_stop = alpha_stop.value_or(a.stop());
    if (alpha_points) {
      s.alpha_sq_range = GridRange::geometric(a_start, a_stop, *alpha_points);
    } else if (alpha_step || !a.is_geometric()) {
      s.alpha_sq_range = GridRange::linear(a_start, a_stop, alpha_step.value_or(a.step() > 0 ? a.step() : 0.01));
    } else {
      s.alpha_sq_range = GridRange::geometric(a_start, a_stop, a.size());
    }
    const GridRange& b = s.beta_range;
    s.beta_range = GridRange::linear(beta_start.value_or(b.start()), beta_stop.value_or(b.stop()),
                                     beta_step.value_or(b.step()));
    if (!m_values.empty()) {
      s.m_values.assign(m_values.begin(), m_values.end());
    }
    if (fixed_alpha_sq) {
      s.fixed_alpha_sq = fixed_alpha_sq;
    }
    return s;
  }

  int run(std::ostream& out, std::ostream&) const {
    emit(to_table(run_sweep(spec(), threads)), output, out);
    return kSuccess;
  }
};

// ---------------------------------------------------------------- figures

struct FiguresCmd {
  std::vector<std::string> which;
  std::string output_dir = ".";
  std::string format = "csv";
  unsigned threads = 0;

  void attach(CLI::App* sub) {
    std::vector<std::string> panels(std::begin(kFigurePanels), std::end(kFigurePanels));
    panels.emplace_back("all");
    sub->add_option("--which", which, "Figure panels to regenerate (comma separated, or 'all')")
        ->required()
        ->delimiter(',')
        ->check(CLI::IsMember(panels));
    sub->add_option("--output-dir", output_dir, "Directory receiving fig<panel>.<format>")
        ->capture_default_str();
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
    sub->add_option("--threads", threads, "Worker threads (0 = all cores)")->capture_default_str();
  }

  int run(std::ostream& out, std::ostream&) const {
    std::vector<std::string> panels;
    for (const auto& w : which) {
      if (w == "all") {
        panels.assign(std::begin(kFigurePanels), std::end(kFigurePanels));
        break;
      }
      if (std::find(panels.begin(), panels.end(), w) == panels.end()) panels.push_back(w);
    }
    std::filesystem::create_directories(output_dir);
    const Format f = parse_format(format);
    for (const auto& panel : panels) {
      const auto path = std::filesystem::path(output_dir) / ("fig" + panel + "." + extension(f));
      OutputOptions o{format, path.string()};
      emit(to_table(run_sweep(figure_sweep(panel), threads)), o, out);
      out << path.string() << '\n';
    }
    return kSuccess;
  }
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Displacement + photon-number-resolving receiver for binary coherent states"};
  app.name(args.empty() ? "pnr" : args.front());
  app.require_subcommand(1);

  BoundsCmd bounds;
  ReceiverCmd receiver;
  OptimizeCmd optimize;
  McCmd mc;
  SweepCmd sweep;
  FiguresCmd figures;

  auto* bounds_sub = app.add_subcommand("bounds", "Helstrom, IDP and intermediate bounds");
  auto* receiver_sub = app.add_subcommand("receiver", "Receiver error and inconclusive rates");
  auto* optimize_sub = app.add_subcommand("optimize", "Optimize the displacement for a cutoff m");
  auto* mc_sub = app.add_subcommand("mc", "Monte Carlo simulation of the receiver");
  auto* sweep_sub = app.add_subcommand("sweep", "Parameter sweep table");
  auto* figures_sub = app.add_subcommand("figures", "Regenerate figure data files");
  bounds.attach(bounds_sub);
  receiver.attach(receiver_sub);
  optimize.attach(optimize_sub);
  mc.attach(mc_sub);
  sweep.attach(sweep_sub);
  figures.attach(figures_sub);

  try {
    std::vector<std::string> reversed(args.size() > 1 ? args.begin() + 1 : args.end(), args.end());
    std::reverse(reversed.begin(), reversed.end());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kInvalidArguments;
  }

  try {
    if (*bounds_sub) return bounds.run(out, err);
    if (*receiver_sub) return receiver.run(out, err);
    if (*optimize_sub) return optimize.run(out, err);
    if (*mc_sub) return mc.run(out, err);
    if (*sweep_sub) return sweep.run(out, err);
    if (*figures_sub) return figures.run(out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidArguments;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidArguments;
  } catch (const OptimizationError& e) {
    err << "error: " << e.what() << " (best beta " << format_number(e.best_x()) << ", p_error "
        << format_number(e.best_value()) << ")\n";
    return kComputationFailed;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kComputationFailed;
  }
  return kInvalidArguments;
}

}  // namespace pnr::cli
