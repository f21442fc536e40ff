#pragma once

#include <filesystem>
#include <istream>
#include <string>
#include <utility>
#include <vector>

#include "steerwig/gaussian_state.hpp"

namespace steerwig {

/// Quadrature variance ratio s > 0. Decibels use s_dB = 10 log10(s).
class SqueezingSpec {
 public:
  static SqueezingSpec from_ratio(double s);
  static SqueezingSpec from_db(double db);

  double ratio() const { return ratio_; }
  double db() const;

 private:
  explicit SqueezingSpec(double s) : ratio_(s) {}
  double ratio_;
};

/// Multiplicative thermal noise n >= 1 on input variances (1 = pure).
class ThermalNoise {
 public:
  explicit ThermalNoise(double n);
  double value() const { return n_; }

 private:
  double n_;
};

/// Simple undirected graph stored as a symmetric, hollow 0/1 adjacency.
class Graph {
 public:
  explicit Graph(Eigen::MatrixXi adjacency);
  static Graph from_edges(Eigen::Index vertices,
                          const std::vector<std::pair<Eigen::Index, Eigen::Index>>& edges);

  Eigen::Index vertices() const { return adjacency_.rows(); }
  const Eigen::MatrixXi& adjacency() const { return adjacency_; }
  /// Edges (j, k) with j < k, 0-based, in row-major order.
  std::vector<std::pair<Eigen::Index, Eigen::Index>> edges() const;

 private:
  Eigen::MatrixXi adjacency_;
};

/// Two squeezed thermal modes diag(n s1, n/s1) and diag(n/s2, n s2) mixed
/// on a balanced beam splitter.
GaussianState epr_state(SqueezingSpec s1, SqueezingSpec s2, ThermalNoise n);

/// Graph state V = M (+)_j diag(n s, n/s) M^t with
/// M = [[X, Y], [-Y, X]] (blockwise), X = (A^2 + 1)^{-1/2}, Y = A X.
/// Returned in interleaved ordering.
GaussianState graph_state(const Graph& graph, SqueezingSpec s, ThermalNoise n);

/// Edge list: one "j k" pair of 1-based vertices per line, '#' comments,
/// optional "vertices <m>" header. Duplicate edges are collapsed and reported
/// in `warnings`.
Graph parse_graph(std::istream& in, std::vector<std::string>* warnings = nullptr);
Graph load_graph(const std::filesystem::path& path, std::vector<std::string>* warnings = nullptr);

}  // namespace steerwig
