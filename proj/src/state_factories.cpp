#include "steerwig/state_factories.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

namespace steerwig {

SqueezingSpec SqueezingSpec::from_ratio(double s) {
  if (!(s > 0.0) || !std::isfinite(s))
    throw Error(ErrorKind::domain, "squeezing ratio must be positive and finite");
  return SqueezingSpec(s);
}

SqueezingSpec SqueezingSpec::from_db(double db) {
  if (!std::isfinite(db)) throw Error(ErrorKind::domain, "squeezing in dB must be finite");
  return from_ratio(std::pow(10.0, db / 10.0));
}

double SqueezingSpec::db() const { return 10.0 * std::log10(ratio_); }

ThermalNoise::ThermalNoise(double n) : n_(n) {
  if (!(n >= 1.0) || !std::isfinite(n))
    throw Error(ErrorKind::domain, "thermal noise n must satisfy n >= 1");
}

Graph::Graph(Eigen::MatrixXi adjacency) : adjacency_(std::move(adjacency)) {
  if (adjacency_.rows() != adjacency_.cols() || adjacency_.rows() == 0)
    throw Error(ErrorKind::dimension, "Graph: adjacency must be square and nonempty");
  for (Eigen::Index j = 0; j < adjacency_.rows(); ++j) {
    if (adjacency_(j, j) != 0) throw Error(ErrorKind::domain, "Graph: adjacency must have zero diagonal");
    for (Eigen::Index k = 0; k < adjacency_.cols(); ++k) {
      const int a = adjacency_(j, k);
      if (a != 0 && a != 1) throw Error(ErrorKind::domain, "Graph: adjacency entries must be 0 or 1");
      if (a != adjacency_(k, j)) throw Error(ErrorKind::domain, "Graph: adjacency must be symmetric");
    }
  }
}

Graph Graph::from_edges(Eigen::Index vertices,
                        const std::vector<std::pair<Eigen::Index, Eigen::Index>>& edges) {
  Eigen::MatrixXi a = Eigen::MatrixXi::Zero(vertices, vertices);
  for (const auto& [j, k] : edges) {
    if (j < 0 || k < 0 || j >= vertices || k >= vertices)
      throw Error(ErrorKind::domain, "Graph: edge endpoint out of range");
    if (j == k) throw Error(ErrorKind::domain, "Graph: self-loops are not allowed");
    a(j, k) = a(k, j) = 1;
  }
  return Graph(std::move(a));
}

std::vector<std::pair<Eigen::Index, Eigen::Index>> Graph::edges() const {
  std::vector<std::pair<Eigen::Index, Eigen::Index>> out;
  for (Eigen::Index j = 0; j < vertices(); ++j)
    for (Eigen::Index k = j + 1; k < vertices(); ++k)
      if (adjacency_(j, k) != 0) out.emplace_back(j, k);
  return out;
}

GaussianState epr_state(SqueezingSpec s1, SqueezingSpec s2, ThermalNoise n) {
  const double nv = n.value();
  MatX v = MatX::Zero(4, 4);
  v.diagonal() << nv * s1.ratio(), nv / s1.ratio(), nv / s2.ratio(), nv * s2.ratio();
  return beamsplitter(GaussianState(std::move(v)), 0, 1, 0.5);
}

GaussianState graph_state(const Graph& graph, SqueezingSpec s, ThermalNoise n) {
  const Eigen::Index m = graph.vertices();
  const MatX a = graph.adjacency().cast<double>();
  const Eigen::SelfAdjointEigenSolver<MatX> solver(a * a + MatX::Identity(m, m));
  const MatX x = solver.operatorInverseSqrt();
  const MatX y = a * x;

  MatX mix(2 * m, 2 * m);
  mix << x, y, -y, x;
  VecX squeezed(2 * m);
  squeezed << VecX::Constant(m, n.value() * s.ratio()), VecX::Constant(m, n.value() / s.ratio());

  MatX v = mix * squeezed.asDiagonal() * mix.transpose();
  v = (v + v.transpose()) / 2.0;
  return GaussianState(reorder(v, QuadratureOrdering::blockwise, QuadratureOrdering::interleaved));
}

Graph parse_graph(std::istream& in, std::vector<std::string>* warnings) {
  std::set<std::pair<Eigen::Index, Eigen::Index>> edges;
  Eigen::Index declared = 0;
  Eigen::Index max_vertex = 0;
  std::string line;
  int line_no = 0;
  auto fail = [&line_no](const std::string& msg) {
    throw Error(ErrorKind::parse, "line " + std::to_string(line_no) + ": " + msg);
  };
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream fields(line);
    std::string head;
    fields >> head;
    if (head == "vertices") {
      long long m = 0;
      if (!(fields >> m) || m <= 0) fail("expected 'vertices <m>' with m > 0");
      declared = static_cast<Eigen::Index>(m);
    } else {
      long long j = 0;
      long long k = 0;
      std::istringstream first_field(head);
      if (!(first_field >> j) || !first_field.eof() || !(fields >> k))
        fail("expected two vertex indices");
      if (j <= 0 || k <= 0) fail("vertex indices are 1-based");
      if (j == k) fail("self-loop on vertex " + std::to_string(j));
      const std::pair<Eigen::Index, Eigen::Index> edge{std::min(j, k) - 1, std::max(j, k) - 1};
      if (!edges.insert(edge).second && warnings)
        warnings->push_back("line " + std::to_string(line_no) + ": duplicate edge " +
                            std::to_string(edge.first + 1) + "-" + std::to_string(edge.second + 1) +
                            " collapsed");
      max_vertex = std::max<Eigen::Index>(max_vertex, edge.second + 1);
    }
    std::string extra;
    if (fields >> extra && extra[0] != '#') fail("unexpected trailing token '" + extra + "'");
  }
  if (declared != 0 && declared < max_vertex)
    throw Error(ErrorKind::parse, "vertex index exceeds declared vertex count");
  const Eigen::Index m = std::max(declared, max_vertex);
  if (m == 0) throw Error(ErrorKind::parse, "graph has no vertices");
  return Graph::from_edges(m, {edges.begin(), edges.end()});
}

Graph load_graph(const std::filesystem::path& path, std::vector<std::string>* warnings) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::io, "cannot open graph file " + path.string());
  return parse_graph(in, warnings);
}

}  // namespace steerwig
