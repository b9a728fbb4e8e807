#pragma once

#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qwalk/channels.hpp"
#include "qwalk/graph.hpp"
#include "qwalk/walk.hpp"

namespace qwalk {

/// Graph selection for a scenario: one of the standard families or a file.
struct GraphSpec {
  enum class Kind { Path, Cycle, Star, CompleteBipartite, File };

  Kind kind = Kind::Path;
  FamilySize size;
  std::filesystem::path file;

  Graph build() const;

  /// Short label such as "P5", "C6", "S6", "K2_3" or the file stem.
  std::string label() const;

  /// Parses CLI-style input: kind is path|cycle|star|kab|file:<p>, size is
  /// "<n>" or "<m>,<n>" (ignored for files).
  static GraphSpec parse(const std::string& kind, const std::string& size);
};

enum class ScenarioMode { StateTransfer, Periodicity };

struct NoiseSpec {
  enum class Kind { None, Rtn, Oun };

  Kind kind = Kind::None;
  double rtn_a = 0.1;
  double rtn_gamma = 0.01;
  double oun_lambda = 1.0;
  double oun_gamma = 0.05;

  std::optional<NoiseChannel> channel(std::size_t dimension) const;
};

struct Scenario {
  std::string name;
  GraphSpec graph;
  Vertex sender = 0;
  Vertex receiver = 0;  ///< ignored in periodicity mode, where the target vertex is the sender
  ScenarioMode mode = ScenarioMode::StateTransfer;
  ReceiverMode receiver_mode = ReceiverMode::Incoming;
  NoiseSpec noise;
  std::size_t steps = 100;

  Vertex target_vertex() const { return mode == ScenarioMode::Periodicity ? sender : receiver; }

  /// `name` if set, otherwise a name derived from the fields.
  std::string display_name() const;
};

/// Per-step fidelity for t = 0..T. `noisy` is empty when the scenario has no noise.
struct FidelitySeries {
  std::vector<double> noiseless;
  std::vector<double> noisy;

  std::size_t size() const noexcept { return noiseless.size(); }
  bool has_noise() const noexcept { return !noisy.empty(); }
};

/// Evolves the scenario and records fidelity against the target state
/// (receiver state for transfer, sender state for periodicity). Noisy values
/// use the pure-target formula and are cross-checked against the full
/// Uhlmann formula every `kCrossCheckStride` steps.
FidelitySeries run_scenario(const Scenario& sc);

inline constexpr std::size_t kCrossCheckStride = 10;
inline constexpr double kCrossCheckTolerance = 1e-9;

struct NamedSeries {
  std::string name;
  Scenario scenario;
  FidelitySeries series;
};

/// The case-study scenarios, each paired with RTN and OUN noise at default
/// parameters. Receiver states use the outgoing-edge convention.
std::vector<Scenario> suite_scenarios(std::size_t steps = 100);

/// Runs suite_scenarios() concurrently; results keep the scenario order.
std::vector<NamedSeries> paper_suite(std::size_t steps = 100);

/// Peak steps: F(t) >= F(t-1), F(t) >= F(t+1) (where defined) and F(t) > 0.9·max F.
std::vector<std::size_t> find_peaks(std::span<const double> values);

/// Interior and endpoint local maxima with a strictly positive value.
std::vector<std::size_t> local_maxima(std::span<const double> values);

// Output. Implemented in report.cpp.

/// CSV text: header `t,fidelity_noiseless,fidelity_noisy`, values in %.12g,
/// third column left empty without noise.
std::string format_csv(const FidelitySeries& series);
void write_csv(const FidelitySeries& series, const std::filesystem::path& path);

/// Parses text produced by format_csv.
FidelitySeries parse_csv(const std::string& text);

std::string format_svg(const FidelitySeries& series, const std::string& title);
void render_svg(const FidelitySeries& series, const std::filesystem::path& path, const std::string& title);

/// Square matrix as CSV rows of real parts in %.6f.
std::string format_matrix_csv(const ComplexMatrix& m);

/// Writes `<name>.csv` and `<name>.svg` for each entry into `dir`.
void write_series_files(const std::vector<NamedSeries>& results, const std::filesystem::path& dir);

}  // namespace qwalk
