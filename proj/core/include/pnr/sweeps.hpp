#pragma once

// Tabulated parameter sweeps of the receiver: rates against displacement at a
// fixed signal, and optimized rates against signal strength, together with the
// reference bounds.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace pnr {

enum class SweepKind {
  ErrorVsBeta,        // p_error(beta) per m at fixed |a|^2
  AcceptanceVsBeta,   // 1 - p_inc(beta) per m at fixed |a|^2, with USD acceptance
  BetaOptVsAlpha,     // optimized beta per m against |a|^2, with the Kennedy line beta = a
  ErrorVsAlpha,       // optimized p_error per m with the matched intermediate bound
  AcceptanceVsAlpha,  // optimized 1 - p_inc per m with USD acceptance 1 - sigma
  Parametric,         // (p_inc, p_error) pairs at the optimum as |a|^2 varies
};

std::string_view to_string(SweepKind kind);
/// Accepts the names returned by to_string. Throws DomainError otherwise.
SweepKind parse_sweep_kind(std::string_view name);

/// Inclusive grid of sample points: either linear with a step, or geometric with
/// a point count.
class GridRange {
public:
  static GridRange linear(double start, double stop, double step);
  static GridRange geometric(double start, double stop, std::size_t points);

  double start() const noexcept { return start_; }
  double stop() const noexcept { return stop_; }
  double step() const noexcept { return step_; }
  bool is_geometric() const noexcept { return geometric_points_ > 0; }

  /// Throws DomainError naming `field` if the range is empty or malformed.
  void validate(std::string_view field) const;
  std::size_t size() const;
  std::vector<double> points() const;

private:
  double start_ = 0.0;
  double stop_ = 0.0;
  double step_ = 0.0;
  std::size_t geometric_points_ = 0;
};

struct SweepSpec {
  SweepKind kind = SweepKind::ErrorVsAlpha;
  GridRange alpha_sq_range = GridRange::linear(0.01, 1.0, 0.01);
  GridRange beta_range = GridRange::linear(0.0, 3.0, 0.005);
  std::vector<std::uint32_t> m_values;
  std::optional<double> fixed_alpha_sq;

  /// Throws DomainError naming the offending field.
  void validate() const;
};

enum class ColumnKind { Abscissa, Probability, Amplitude, Marker };

/// One row per grid point of the swept variable; columns fixed by the kind.
struct SweepTable {
  std::vector<std::string> columns;
  std::vector<ColumnKind> kinds;
  std::vector<std::vector<double>> rows;

  std::size_t column_index(std::string_view name) const;  // throws std::out_of_range
  std::vector<double> column(std::string_view name) const;
};

/// Computes the table. Grid points are evaluated in parallel; row order follows
/// the grid. `threads` = 0 uses hardware concurrency.
SweepTable run_sweep(const SweepSpec& spec, unsigned threads = 0);

/// Default grid for a kind (m values included).
SweepSpec default_sweep(SweepKind kind);

/// Sweep regenerating a figure panel: "2a", "2b", "3a", "3b", "4a" or "4b".
SweepSpec figure_sweep(std::string_view panel);

inline constexpr std::string_view kFigurePanels[] = {"2a", "2b", "3a", "3b", "4a", "4b"};

}  // namespace pnr
