#include "steerwig/sweep.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <limits>
#include <set>
#include <sstream>
#include <thread>

#include <json.hpp>

namespace steerwig {

StateFamily parse_family(const std::string& name) {
  if (name == "epr") return StateFamily::epr;
  if (name == "graph") return StateFamily::graph;
  throw Error(ErrorKind::domain, "unknown state family '" + name + "' (expected epr or graph)");
}

OutputFormat parse_format(const std::string& name) {
  if (name == "csv") return OutputFormat::csv;
  if (name == "json") return OutputFormat::json;
  throw Error(ErrorKind::domain, "unknown output format '" + name + "' (expected csv or json)");
}

const char* to_string(StateFamily family) { return family == StateFamily::epr ? "epr" : "graph"; }

SweepAxis SweepAxis::parse(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  for (std::string part; std::getline(ss, part, ':');) parts.push_back(part);
  if (parts.size() != 4) throw Error(ErrorKind::domain, "axis '" + text + "': expected name:min:max:steps");
  SweepAxis axis;
  axis.name = parts[0];
  try {
    axis.min = std::stod(parts[1]);
    axis.max = std::stod(parts[2]);
    axis.steps = std::stoi(parts[3]);
  } catch (const std::exception&) {
    throw Error(ErrorKind::domain, "axis '" + text + "': malformed number");
  }
  return axis;
}

double SweepAxis::value(int i) const {
  if (steps == 1) return min;
  return min + (max - min) * static_cast<double>(i) / static_cast<double>(steps - 1);
}

void SweepSpec::validate() const {
  std::set<std::string> seen;
  for (const auto& axis : axes) {
    if (axis.name != "n" && axis.name != "sdb" && axis.name != "asym")
      throw Error(ErrorKind::domain, "unknown sweep axis '" + axis.name + "' (expected n, sdb or asym)");
    if (axis.name == "asym" && family != StateFamily::epr)
      throw Error(ErrorKind::domain, "axis 'asym' only applies to the epr family");
    if (!seen.insert(axis.name).second)
      throw Error(ErrorKind::domain, "sweep axis '" + axis.name + "' given twice");
    if (axis.steps < 1) throw Error(ErrorKind::domain, "sweep axis '" + axis.name + "': steps must be >= 1");
    if (!(axis.min <= axis.max)) throw Error(ErrorKind::domain, "sweep axis '" + axis.name + "': min > max");
    if (axis.name == "n" && axis.min < 1.0)
      throw Error(ErrorKind::domain, "sweep axis 'n': thermal noise must be >= 1");
  }
  if (family == StateFamily::graph && !graph)
    throw Error(ErrorKind::domain, "graph family requires a graph");
}

std::size_t SweepSpec::point_count() const {
  std::size_t count = 1;
  for (const auto& axis : axes) count *= static_cast<std::size_t>(axis.steps);
  return count;
}

SweepParameters SweepSpec::point(std::size_t index) const {
  SweepParameters params = fixed;
  for (auto it = axes.rbegin(); it != axes.rend(); ++it) {
    const auto steps = static_cast<std::size_t>(it->steps);
    const double v = it->value(static_cast<int>(index % steps));
    index /= steps;
    if (it->name == "n") params.n = v;
    else if (it->name == "sdb") params.sdb = v;
    else params.asym_db = v;
  }
  return params;
}

GaussianState build_state(StateFamily family, const SweepParameters& params,
                          const std::optional<Graph>& graph) {
  const ThermalNoise noise(params.n);
  if (family == StateFamily::epr)
    return epr_state(SqueezingSpec::from_db(params.s1_db()), SqueezingSpec::from_db(params.s2_db()),
                     noise);
  if (!graph) throw Error(ErrorKind::domain, "graph family requires a graph");
  return graph_state(*graph, SqueezingSpec::from_db(params.sdb), noise);
}

ModePair build_pair(const GaussianState& state, const ModeSelection& modes) {
  auto pick = [&state](const std::optional<VecX>& vec, Eigen::Index index) {
    if (vec) return ModeVector(*vec);
    if (index < 0 || index >= state.modes())
      throw Error(ErrorKind::domain, "mode index " + std::to_string(index + 1) + " out of range 1.." +
                                         std::to_string(state.modes()));
    return ModeVector::canonical(state.modes(), index);
  };
  return extract_pair(state, pick(modes.f_vector, modes.f), pick(modes.g_vector, modes.g));
}

SweepRecord evaluate_point(const SweepSpec& spec, const SweepParameters& params) {
  const GaussianState state = build_state(spec.family, params, spec.graph);
  const SteeringReport rep = analyze(build_pair(state, spec.modes));
  constexpr double nan = std::numeric_limits<double>::quiet_NaN();
  return SweepRecord{params.n,
                     params.sdb,
                     params.asym_db,
                     rep.nu,
                     rep.tr_conditional,
                     rep.negativity_bare,
                     rep.negativity_steered,
                     rep.w_min_bare.value_or(nan),
                     rep.w_min_opt.value_or(nan),
                     rep.purity_f};
}

unsigned default_worker_count() {
  if (const char* env = std::getenv("STEERWIG_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

std::vector<SweepRecord> run_sweep(const SweepSpec& spec, unsigned workers) {
  spec.validate();
  const std::size_t count = spec.point_count();
  std::vector<SweepRecord> records(count);
  if (workers == 0) workers = default_worker_count();
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, count));

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::atomic<bool> failed{false};
  auto work = [&] {
    for (std::size_t i = next++; i < count && !failed; i = next++) {
      try {
        records[i] = evaluate_point(spec, spec.point(i));
      } catch (...) {
        if (!failed.exchange(true)) failure = std::current_exception();
      }
    }
  };
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
  }
  if (failure) std::rethrow_exception(failure);
  return records;
}

std::string format_double(double value) {
  if (std::isnan(value)) return "nan";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

Metadata common_metadata() {
  return {{"program", "steerwig"},
          {"version", STEERWIG_VERSION},
          {"convention", "[x,p]=2i; vacuum covariance = identity; s_dB = 10*log10(s); interleaved (x1,p1,x2,p2,...)"}};
}

Metadata sweep_metadata(const SweepSpec& spec) {
  Metadata meta = common_metadata();
  meta.emplace_back("family", to_string(spec.family));
  std::string axes;
  for (const auto& a : spec.axes)
    axes += (axes.empty() ? "" : " ") + a.name + "=" + format_double(a.min) + ":" + format_double(a.max) +
            ":" + std::to_string(a.steps);
  meta.emplace_back("axes", axes.empty() ? "none" : axes);
  meta.emplace_back("fixed", "n=" + format_double(spec.fixed.n) + " sdb=" + format_double(spec.fixed.sdb) +
                                 " asym_db=" + format_double(spec.fixed.asym_db));
  auto mode_text = [](const std::optional<VecX>& vec, Eigen::Index idx) {
    if (!vec) return std::to_string(idx + 1);
    std::string s = "[";
    for (Eigen::Index i = 0; i < vec->size(); ++i) s += (i ? "," : "") + format_double((*vec)(i));
    return s + "]";
  };
  meta.emplace_back("modes", "f=" + mode_text(spec.modes.f_vector, spec.modes.f) +
                                 " g=" + mode_text(spec.modes.g_vector, spec.modes.g));
  if (spec.graph) {
    std::string edges;
    for (const auto& [j, k] : spec.graph->edges())
      edges += (edges.empty() ? "" : " ") + std::to_string(j + 1) + "-" + std::to_string(k + 1);
    meta.emplace_back("graph", spec.graph_source + " vertices=" + std::to_string(spec.graph->vertices()) +
                                   " edges=" + edges);
  }
  meta.emplace_back("order", "row-major over axes as declared");
  return meta;
}

namespace {

void write_preamble(std::ostream& out, const Metadata& meta) {
  for (const auto& [key, value] : meta) out << "# " << key << ": " << value << '\n';
}

nlohmann::ordered_json metadata_json(const Metadata& meta) {
  nlohmann::ordered_json obj = nlohmann::ordered_json::object();
  for (const auto& [key, value] : meta) obj[key] = value;
  return obj;
}

nlohmann::ordered_json number_or_null(double v) {
  if (std::isnan(v)) return nullptr;
  return v;
}

}  // namespace

void write_sweep_csv(std::ostream& out, const SweepSpec& spec, const std::vector<SweepRecord>& records) {
  write_preamble(out, sweep_metadata(spec));
  const auto& fields = sweep_record_fields();
  for (std::size_t i = 0; i < fields.size(); ++i) out << (i ? "," : "") << fields[i];
  out << '\n';
  for (const auto& r : records) {
    out << format_double(r.n) << ',' << format_double(r.sdb) << ',' << format_double(r.asym_db) << ','
        << format_double(r.nu) << ',' << format_double(r.tr_conditional) << ','
        << (r.negativity_bare ? "true" : "false") << ',' << (r.negativity_steered ? "true" : "false")
        << ',' << format_double(r.w_min_bare) << ',' << format_double(r.w_min_opt) << ','
        << format_double(r.purity_f) << '\n';
  }
}

void write_sweep_json(std::ostream& out, const SweepSpec& spec, const std::vector<SweepRecord>& records) {
  nlohmann::ordered_json doc;
  doc["metadata"] = metadata_json(sweep_metadata(spec));
  auto arr = nlohmann::ordered_json::array();
  for (const auto& r : records) {
    nlohmann::ordered_json rec;
    rec["n"] = r.n;
    rec["sdb"] = r.sdb;
    rec["asym_db"] = r.asym_db;
    rec["nu"] = r.nu;
    rec["tr_conditional"] = r.tr_conditional;
    rec["negativity_bare"] = r.negativity_bare;
    rec["negativity_steered"] = r.negativity_steered;
    rec["w_min_bare"] = number_or_null(r.w_min_bare);
    rec["w_min_opt"] = number_or_null(r.w_min_opt);
    rec["purity_f"] = r.purity_f;
    arr.push_back(std::move(rec));
  }
  doc["records"] = std::move(arr);
  out << doc.dump(2) << '\n';
}

void write_wigner_csv(std::ostream& out, const WignerGrid& grid, const Metadata& metadata) {
  write_preamble(out, metadata);
  out << "x,p,value\n";
  for (Eigen::Index i = 0; i < grid.nx(); ++i)
    for (Eigen::Index j = 0; j < grid.np(); ++j)
      out << format_double(grid.x(i)) << ',' << format_double(grid.p(j)) << ','
          << format_double(grid.values(i, j)) << '\n';
}

void write_wigner_json(std::ostream& out, const WignerGrid& grid, const Metadata& metadata) {
  nlohmann::ordered_json doc;
  doc["metadata"] = metadata_json(metadata);
  doc["window"] = {grid.window.x_min, grid.window.x_max, grid.window.p_min, grid.window.p_max};
  doc["resolution"] = {grid.nx(), grid.np()};
  auto rows = nlohmann::ordered_json::array();
  for (Eigen::Index i = 0; i < grid.nx(); ++i) {
    auto row = nlohmann::ordered_json::array();
    for (Eigen::Index j = 0; j < grid.np(); ++j) row.push_back(grid.values(i, j));
    rows.push_back(std::move(row));
  }
  doc["values"] = std::move(rows);
  out << doc.dump(2) << '\n';
}

}  // namespace steerwig
