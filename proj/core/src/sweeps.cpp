#include "pnr/sweeps.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

#include "parallel.hpp"
#include "pnr/bounds.hpp"
#include "pnr/errors.hpp"
#include "pnr/optimizer.hpp"
#include "pnr/receiver.hpp"

namespace pnr {

namespace {

struct KindName {
  SweepKind kind;
  std::string_view name;
};

constexpr std::array<KindName, 6> kKindNames = {{
    {SweepKind::ErrorVsBeta, "error-vs-beta"},
    {SweepKind::AcceptanceVsBeta, "acceptance-vs-beta"},
    {SweepKind::BetaOptVsAlpha, "beta-opt-vs-alpha"},
    {SweepKind::ErrorVsAlpha, "error-vs-alpha"},
    {SweepKind::AcceptanceVsAlpha, "acceptance-vs-alpha"},
    {SweepKind::Parametric, "parametric"},
}};

// Relative slack when deciding whether the last step lands on `stop`.
constexpr double kGridSnap = 1e-9;

bool is_beta_sweep(SweepKind kind) {
  return kind == SweepKind::ErrorVsBeta || kind == SweepKind::AcceptanceVsBeta;
}

std::string m_suffix(std::uint32_t m) { return "_m" + std::to_string(m); }

class TableBuilder {
public:
  void add(std::string name, ColumnKind kind) {
    table_.columns.push_back(std::move(name));
    table_.kinds.push_back(kind);
  }
  SweepTable finish(std::size_t rows) {
    table_.rows.assign(rows, std::vector<double>(table_.columns.size(), 0.0));
    return std::move(table_);
  }

private:
  SweepTable table_;
};

SweepTable make_layout(const SweepSpec& spec, std::size_t rows) {
  TableBuilder b;
  switch (spec.kind) {
    case SweepKind::ErrorVsBeta:
      b.add("beta", ColumnKind::Abscissa);
      for (auto m : spec.m_values) b.add("p_error" + m_suffix(m), ColumnKind::Probability);
      b.add("helstrom", ColumnKind::Probability);
      break;
    case SweepKind::AcceptanceVsBeta:
      b.add("beta", ColumnKind::Abscissa);
      for (auto m : spec.m_values) b.add("accept" + m_suffix(m), ColumnKind::Probability);
      b.add("usd_accept", ColumnKind::Probability);
      break;
    case SweepKind::BetaOptVsAlpha:
      b.add("alpha_sq", ColumnKind::Abscissa);
      b.add("beta_kennedy", ColumnKind::Amplitude);
      for (auto m : spec.m_values) b.add("beta_opt" + m_suffix(m), ColumnKind::Amplitude);
      break;
    case SweepKind::ErrorVsAlpha:
      b.add("alpha_sq", ColumnKind::Abscissa);
      b.add("helstrom", ColumnKind::Probability);
      for (auto m : spec.m_values) {
        b.add("p_error" + m_suffix(m), ColumnKind::Probability);
        b.add("bound" + m_suffix(m), ColumnKind::Probability);
      }
      break;
    case SweepKind::AcceptanceVsAlpha:
      b.add("alpha_sq", ColumnKind::Abscissa);
      b.add("usd_accept", ColumnKind::Probability);
      for (auto m : spec.m_values) b.add("accept" + m_suffix(m), ColumnKind::Probability);
      break;
    case SweepKind::Parametric:
      b.add("alpha_sq", ColumnKind::Abscissa);
      b.add("marker", ColumnKind::Marker);
      for (auto m : spec.m_values) {
        b.add("p_inc" + m_suffix(m), ColumnKind::Probability);
        b.add("p_error" + m_suffix(m), ColumnKind::Probability);
        b.add("bound" + m_suffix(m), ColumnKind::Probability);
      }
      break;
  }
  return b.finish(rows);
}

void fill_beta_row(const SweepSpec& spec, Amplitude alpha, double beta, std::vector<double>& row) {
  std::size_t col = 0;
  row[col++] = beta;
  for (auto m : spec.m_values) {
    const ReceiverParams params{Amplitude(beta), m};
    row[col++] = spec.kind == SweepKind::ErrorVsBeta ? error_rate(alpha, params)
                                                    : 1.0 - inconclusive_rate(alpha, params);
  }
  row[col++] = spec.kind == SweepKind::ErrorVsBeta ? helstrom(Alphabet::equiprobable(alpha))
                                                   : 1.0 - overlap(alpha);
}

void fill_alpha_row(const SweepSpec& spec, double alpha_sq, std::vector<double>& row) {
  const Amplitude alpha = Amplitude::from_mean_photon_number(alpha_sq);
  std::vector<OptResult> opt;
  opt.reserve(spec.m_values.size());
  for (auto m : spec.m_values) {
    opt.push_back(optimize_displacement(alpha, m));
  }

  std::size_t col = 0;
  row[col++] = alpha_sq;
  switch (spec.kind) {
    case SweepKind::BetaOptVsAlpha:
      row[col++] = alpha.value();
      for (const auto& r : opt) row[col++] = r.beta_opt.value();
      break;
    case SweepKind::ErrorVsAlpha:
      row[col++] = helstrom(Alphabet::equiprobable(alpha));
      for (const auto& r : opt) {
        row[col++] = r.rates.p_error;
        row[col++] = r.matched_bound;
      }
      break;
    case SweepKind::AcceptanceVsAlpha:
      row[col++] = 1.0 - overlap(alpha);
      for (const auto& r : opt) row[col++] = 1.0 - r.rates.p_inconclusive;
      break;
    case SweepKind::Parametric:
      row[col++] = 0.0;  // marker, set after all rows exist
      for (const auto& r : opt) {
        row[col++] = r.rates.p_inconclusive;
        row[col++] = r.rates.p_error;
        row[col++] = r.matched_bound;
      }
      break;
    default:
      throw std::logic_error("fill_alpha_row: not an amplitude sweep");
  }
}

// Flags the row closest to each |a|^2 in {0.1, 0.2, ..., 1.0} that lies
// inside the swept range.
void mark_decades(SweepTable& table) {
  if (table.rows.empty()) {
    return;
  }
  const std::size_t marker = table.column_index("marker");
  const double lo = table.rows.front()[0];
  const double hi = table.rows.back()[0];
  for (int k = 1; k <= 10; ++k) {
    const double target = 0.1 * k;
    if (target < lo - kGridSnap || target > hi + kGridSnap) {
      continue;
    }
    const auto nearest = std::min_element(table.rows.begin(), table.rows.end(),
                                          [&](const auto& a, const auto& b) {
                                            return std::abs(a[0] - target) < std::abs(b[0] - target);
                                          });
    (*nearest)[marker] = 1.0;
  }
}

}  // namespace

std::string_view to_string(SweepKind kind) {
  for (const auto& [k, name] : kKindNames) {
    if (k == kind) return name;
  }
  return "?";
}

SweepKind parse_sweep_kind(std::string_view name) {
  for (const auto& [k, n] : kKindNames) {
    if (n == name) return k;
  }
  throw DomainError("unknown sweep kind '" + std::string(name) + "'");
}

GridRange GridRange::linear(double start, double stop, double step) {
  GridRange r;
  r.start_ = start;
  r.stop_ = stop;
  r.step_ = step;
  return r;
}

GridRange GridRange::geometric(double start, double stop, std::size_t points) {
  GridRange r;
  r.start_ = start;
  r.stop_ = stop;
  r.geometric_points_ = points;
  return r;
}

void GridRange::validate(std::string_view field) const {
  const std::string f(field);
  if (!std::isfinite(start_) || !std::isfinite(stop_)) {
    throw DomainError(f + ": range bounds must be finite");
  }
  if (start_ > stop_) {
    throw DomainError(f + ": range start must not exceed stop");
  }
  if (is_geometric()) {
    if (start_ <= 0.0) {
      throw DomainError(f + ": geometric range needs a positive start");
    }
    if (geometric_points_ < 2 && start_ != stop_) {
      throw DomainError(f + ": geometric range needs at least 2 points");
    }
  } else if (!std::isfinite(step_) || step_ <= 0.0) {
    throw DomainError(f + ": range step must be > 0");
  }
}

std::size_t GridRange::size() const {
  if (is_geometric()) {
    return start_ == stop_ ? 1 : geometric_points_;
  }
  return static_cast<std::size_t>(std::floor((stop_ - start_) / step_ + kGridSnap)) + 1;
}

std::vector<double> GridRange::points() const {
  const std::size_t n = size();
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (is_geometric()) {
      const double t = n == 1 ? 0.0 : static_cast<double>(i) / static_cast<double>(n - 1);
      out[i] = start_ * std::pow(stop_ / start_, t);
    } else {
      out[i] = start_ + static_cast<double>(i) * step_;
    }
  }
  // Land the final point exactly on stop when the grid reaches it.
  if (n > 1 && std::abs(out.back() - stop_) <= kGridSnap * std::max(std::abs(stop_), 1.0)) {
    out.back() = stop_;
  }
  if (is_geometric()) {
    out.front() = start_;
  }
  return out;
}

void SweepSpec::validate() const {
  if (m_values.empty()) {
    throw DomainError("m_values: at least one postselection cutoff is required");
  }
  if (is_beta_sweep(kind)) {
    if (!fixed_alpha_sq) {
      throw DomainError("fixed_alpha_sq: required for " + std::string(to_string(kind)));
    }
    if (!std::isfinite(*fixed_alpha_sq) || *fixed_alpha_sq < 0.0) {
      throw DomainError("fixed_alpha_sq: must be finite and >= 0");
    }
    beta_range.validate("beta_range");
  } else {
    alpha_sq_range.validate("alpha_sq_range");
    if (alpha_sq_range.start() <= 0.0) {
      throw DomainError("alpha_sq_range: optimized sweeps need |alpha|^2 > 0");
    }
  }
}

std::size_t SweepTable::column_index(std::string_view name) const {
  const auto it = std::find(columns.begin(), columns.end(), name);
  if (it == columns.end()) {
    throw std::out_of_range("no column named '" + std::string(name) + "'");
  }
  return static_cast<std::size_t>(it - columns.begin());
}

std::vector<double> SweepTable::column(std::string_view name) const {
  const std::size_t idx = column_index(name);
  std::vector<double> out;
  out.reserve(rows.size());
  for (const auto& row : rows) out.push_back(row[idx]);
  return out;
}

SweepTable run_sweep(const SweepSpec& spec, unsigned threads) {
  spec.validate();
  if (is_beta_sweep(spec.kind)) {
    const Amplitude alpha = Amplitude::from_mean_photon_number(*spec.fixed_alpha_sq);
    const auto betas = spec.beta_range.points();
    SweepTable table = make_layout(spec, betas.size());
    detail::parallel_for(betas.size(), threads,
                         [&](std::size_t i) { fill_beta_row(spec, alpha, betas[i], table.rows[i]); });
    return table;
  }

  const auto alpha_sqs = spec.alpha_sq_range.points();
  SweepTable table = make_layout(spec, alpha_sqs.size());
  detail::parallel_for(alpha_sqs.size(), threads,
                       [&](std::size_t i) { fill_alpha_row(spec, alpha_sqs[i], table.rows[i]); });
  if (spec.kind == SweepKind::Parametric) {
    mark_decades(table);
  }
  return table;
}

SweepSpec default_sweep(SweepKind kind) {
  SweepSpec spec;
  spec.kind = kind;
  switch (kind) {
    case SweepKind::ErrorVsBeta:
      spec.fixed_alpha_sq = 0.4;
      spec.m_values = {0, 1, 2, 3};
      break;
    case SweepKind::AcceptanceVsBeta:
      spec.fixed_alpha_sq = 0.4;
      spec.m_values = {1, 2, 3};
      break;
    case SweepKind::BetaOptVsAlpha:
    case SweepKind::ErrorVsAlpha:
      spec.m_values = {0, 1, 2, 3, 4};
      break;
    case SweepKind::AcceptanceVsAlpha:
      spec.m_values = {1, 2, 3, 4};
      break;
    case SweepKind::Parametric:
      spec.alpha_sq_range = GridRange::geometric(0.002, 1.0, 500);
      spec.m_values = {1, 2, 3, 4};
      break;
  }
  return spec;
}

SweepSpec figure_sweep(std::string_view panel) {
  if (panel == "2a") return default_sweep(SweepKind::ErrorVsBeta);
  if (panel == "2b") return default_sweep(SweepKind::AcceptanceVsBeta);
  if (panel == "3a") return default_sweep(SweepKind::BetaOptVsAlpha);
  if (panel == "3b") return default_sweep(SweepKind::ErrorVsAlpha);
  if (panel == "4a") return default_sweep(SweepKind::AcceptanceVsAlpha);
  if (panel == "4b") return default_sweep(SweepKind::Parametric);
  throw DomainError("unknown figure panel '" + std::string(panel) + "'");
}

}  // namespace pnr
