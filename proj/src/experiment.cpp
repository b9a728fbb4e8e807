#include "qwalk/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <stdexcept>

#include "qwalk/evolution.hpp"
#include "qwalk/fidelity.hpp"

namespace qwalk {

Graph GraphSpec::build() const {
  switch (kind) {
    case Kind::Path: return path_graph(size.first);
    case Kind::Cycle: return cycle_graph(size.first);
    case Kind::Star: return star_graph(size.first);
    case Kind::CompleteBipartite: return complete_bipartite_graph(size.first, size.second);
    case Kind::File: return read_graph_file(file);
  }
  throw std::logic_error("unhandled graph kind");
}

std::string GraphSpec::label() const {
  switch (kind) {
    case Kind::Path: return "P" + std::to_string(size.first);
    case Kind::Cycle: return "C" + std::to_string(size.first);
    case Kind::Star: return "S" + std::to_string(size.first);
    case Kind::CompleteBipartite: return "K" + std::to_string(size.first) + "_" + std::to_string(size.second);
    case Kind::File: return file.stem().string();
  }
  return "graph";
}

namespace {

std::size_t parse_count(const std::string& text) {
  std::size_t used = 0;
  unsigned long value = 0;
  try {
    value = std::stoul(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size() || text.front() == '-') {
    throw std::invalid_argument("expected a nonnegative integer, got '" + text + "'");
  }
  return value;
}

}  // namespace

GraphSpec GraphSpec::parse(const std::string& kind, const std::string& size) {
  GraphSpec spec;
  if (kind.rfind("file:", 0) == 0) {
    spec.kind = Kind::File;
    spec.file = kind.substr(5);
    if (spec.file.empty()) throw std::invalid_argument("file graph needs a path after 'file:'");
    return spec;
  }

  if (kind == "path") spec.kind = Kind::Path;
  else if (kind == "cycle") spec.kind = Kind::Cycle;
  else if (kind == "star") spec.kind = Kind::Star;
  else if (kind == "kab") spec.kind = Kind::CompleteBipartite;
  else throw std::invalid_argument("unknown graph kind '" + kind + "'");

  const auto comma = size.find(',');
  if (spec.kind == Kind::CompleteBipartite) {
    if (comma == std::string::npos) throw std::invalid_argument("kab needs --size <m>,<n>");
    spec.size.first = parse_count(size.substr(0, comma));
    spec.size.second = parse_count(size.substr(comma + 1));
  } else {
    if (comma != std::string::npos) throw std::invalid_argument(kind + " takes a single size");
    spec.size.first = parse_count(size);
  }
  return spec;
}

std::optional<NoiseChannel> NoiseSpec::channel(std::size_t dimension) const {
  switch (kind) {
    case Kind::None: return std::nullopt;
    case Kind::Rtn: return NoiseChannel::rtn(dimension, rtn_a, rtn_gamma);
    case Kind::Oun: return NoiseChannel::oun(dimension, oun_lambda, oun_gamma);
  }
  return std::nullopt;
}

std::string Scenario::display_name() const {
  if (!name.empty()) return name;
  std::string out = graph.label();
  if (mode == ScenarioMode::Periodicity) {
    out += "_periodicity_" + std::to_string(sender);
  } else {
    out += "_transfer_" + std::to_string(sender) + "_" + std::to_string(receiver);
  }
  switch (noise.kind) {
    case NoiseSpec::Kind::None: out += "_none"; break;
    case NoiseSpec::Kind::Rtn: out += "_rtn"; break;
    case NoiseSpec::Kind::Oun: out += "_oun"; break;
  }
  return out;
}

FidelitySeries run_scenario(const Scenario& sc) {
  if (sc.steps < 1) throw std::invalid_argument("scenario needs at least one step");

  const WalkSpec spec(sc.graph.build(), sc.sender, sc.target_vertex());
  const WalkOperators ops = walk_unitary(spec);
  const ComplexVector psi0 = sender_state(spec);
  const ComplexVector target =
      sc.mode == ScenarioMode::Periodicity ? psi0 : receiver_state(spec, sc.receiver_mode);
  const auto channel = sc.noise.channel(spec.dimension());

  const auto records = evolve_records(ops, psi0, sc.steps, channel);
  const ComplexMatrix target_density = projector(target);

  FidelitySeries series;
  series.noiseless.reserve(records.size());
  for (const auto& rec : records) {
    series.noiseless.push_back(fidelity_pure(rec.pure_state, target));
    if (!rec.noisy_density) continue;

    const double noisy = fidelity_pure_target(*rec.noisy_density, target);
    if (rec.step % kCrossCheckStride == 0 || rec.step == sc.steps) {
      const double uhlmann = fidelity_density(*rec.noisy_density, target_density);
      if (std::abs(uhlmann - noisy) > kCrossCheckTolerance) {
        throw std::logic_error("fidelity cross-check failed at step " + std::to_string(rec.step));
      }
    }
    series.noisy.push_back(noisy);
  }
  return series;
}

std::vector<Scenario> suite_scenarios(std::size_t steps) {
  using K = GraphSpec::Kind;
  struct Family {
    GraphSpec graph;
    Vertex sender;
    Vertex receiver;
    ScenarioMode mode;
  };
  const GraphSpec p5{K::Path, {5, 0}, {}};
  const GraphSpec c6{K::Cycle, {6, 0}, {}};
  const GraphSpec s6{K::Star, {6, 0}, {}};
  const GraphSpec k23{K::CompleteBipartite, {2, 3}, {}};

  const std::vector<Family> families = {
      {p5, 0, 4, ScenarioMode::StateTransfer},  {p5, 0, 1, ScenarioMode::StateTransfer},
      {p5, 0, 0, ScenarioMode::Periodicity},    {c6, 0, 3, ScenarioMode::StateTransfer},
      {c6, 0, 1, ScenarioMode::StateTransfer},  {c6, 0, 0, ScenarioMode::Periodicity},
      {s6, 0, 1, ScenarioMode::StateTransfer},  {s6, 1, 0, ScenarioMode::StateTransfer},
      {s6, 0, 0, ScenarioMode::Periodicity},    {k23, 0, 1, ScenarioMode::StateTransfer},
      {k23, 0, 0, ScenarioMode::Periodicity},
  };

  std::vector<Scenario> out;
  for (const auto& f : families) {
    for (auto noise : {NoiseSpec::Kind::Rtn, NoiseSpec::Kind::Oun}) {
      Scenario sc;
      sc.graph = f.graph;
      sc.sender = f.sender;
      sc.receiver = f.receiver;
      sc.mode = f.mode;
      sc.receiver_mode = ReceiverMode::Outgoing;
      sc.noise.kind = noise;
      sc.steps = steps;
      sc.name = sc.display_name();
      out.push_back(std::move(sc));
    }
  }
  return out;
}

std::vector<NamedSeries> paper_suite(std::size_t steps) {
  const auto scenarios = suite_scenarios(steps);
  std::vector<std::future<FidelitySeries>> jobs;
  jobs.reserve(scenarios.size());
  for (const auto& sc : scenarios) {
    jobs.push_back(std::async(std::launch::async, [&sc] { return run_scenario(sc); }));
  }
  std::vector<NamedSeries> out;
  out.reserve(scenarios.size());
  for (std::size_t i = 0; i < scenarios.size(); ++i) {
    out.push_back({scenarios[i].name, scenarios[i], jobs[i].get()});
  }
  return out;
}

std::vector<std::size_t> find_peaks(std::span<const double> values) {
  std::vector<std::size_t> peaks;
  if (values.empty()) return peaks;
  const double threshold = 0.9 * *std::max_element(values.begin(), values.end());
  for (std::size_t t = 0; t < values.size(); ++t) {
    const bool left = t == 0 || values[t] >= values[t - 1];
    const bool right = t + 1 == values.size() || values[t] >= values[t + 1];
    if (left && right && values[t] > threshold) peaks.push_back(t);
  }
  return peaks;
}

std::vector<std::size_t> local_maxima(std::span<const double> values) {
  std::vector<std::size_t> peaks;
  for (std::size_t t = 0; t < values.size(); ++t) {
    const bool left = t == 0 || values[t] >= values[t - 1];
    const bool right = t + 1 == values.size() || values[t] >= values[t + 1];
    if (left && right && values[t] > 0.0) peaks.push_back(t);
  }
  return peaks;
}

}  // namespace qwalk
