#pragma once

#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "steerwig/state_factories.hpp"
#include "steerwig/subtraction.hpp"

namespace steerwig {

enum class StateFamily { epr, graph };
enum class OutputFormat { csv, json };

StateFamily parse_family(const std::string& name);
OutputFormat parse_format(const std::string& name);
const char* to_string(StateFamily family);

/// One swept parameter. Names: "n", "sdb" (geometric-mean squeezing in dB,
/// or the common squeezing for graphs) and "asym" (10 log10(s1/s2), EPR only).
struct SweepAxis {
  std::string name;
  double min = 0.0;
  double max = 0.0;
  int steps = 1;

  /// "name:min:max:steps"
  static SweepAxis parse(const std::string& text);
  double value(int i) const;
};

/// Which modes to use: canonical indices (0-based) unless explicit
/// phase-space vectors are supplied.
struct ModeSelection {
  Eigen::Index f = 0;
  Eigen::Index g = 1;
  std::optional<VecX> f_vector;
  std::optional<VecX> g_vector;
};

struct SweepParameters {
  double n = 1.0;
  double sdb = 0.0;
  double asym_db = 0.0;

  double s1_db() const { return sdb + asym_db / 2.0; }
  double s2_db() const { return sdb - asym_db / 2.0; }
};

struct SweepSpec {
  StateFamily family = StateFamily::epr;
  std::vector<SweepAxis> axes;
  SweepParameters fixed;
  std::optional<Graph> graph;
  std::string graph_source;  ///< echoed in metadata only
  ModeSelection modes;

  void validate() const;
  std::size_t point_count() const;
  /// Parameters of grid point `index`, row-major over axes as declared.
  SweepParameters point(std::size_t index) const;
};

struct SweepRecord {
  double n;
  double sdb;
  double asym_db;
  double nu;
  double tr_conditional;
  bool negativity_bare;
  bool negativity_steered;
  double w_min_bare;  ///< NaN when undefined (e.g. vacuum in g)
  double w_min_opt;
  double purity_f;
};

inline const std::vector<std::string>& sweep_record_fields() {
  static const std::vector<std::string> fields{
      "n",   "sdb", "asym_db", "nu", "tr_conditional", "negativity_bare", "negativity_steered",
      "w_min_bare", "w_min_opt", "purity_f"};
  return fields;
}

GaussianState build_state(StateFamily family, const SweepParameters& params,
                          const std::optional<Graph>& graph);
ModePair build_pair(const GaussianState& state, const ModeSelection& modes);
SweepRecord evaluate_point(const SweepSpec& spec, const SweepParameters& params);

/// Worker count from STEERWIG_THREADS, else hardware concurrency.
unsigned default_worker_count();
std::vector<SweepRecord> run_sweep(const SweepSpec& spec, unsigned workers = 0);

/// %.17g; "nan" for NaN.
std::string format_double(double value);

using Metadata = std::vector<std::pair<std::string, std::string>>;
Metadata sweep_metadata(const SweepSpec& spec);
/// Convention and version lines shared by every output file.
Metadata common_metadata();

void write_sweep_csv(std::ostream& out, const SweepSpec& spec, const std::vector<SweepRecord>& records);
void write_sweep_json(std::ostream& out, const SweepSpec& spec, const std::vector<SweepRecord>& records);

void write_wigner_csv(std::ostream& out, const WignerGrid& grid, const Metadata& metadata);
void write_wigner_json(std::ostream& out, const WignerGrid& grid, const Metadata& metadata);

}  // namespace steerwig
