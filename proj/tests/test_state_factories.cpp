#include <doctest.h>

#include <random>
#include <sstream>

#include "steerwig/state_factories.hpp"
#include "steerwig/subtraction.hpp"
#include "test_support.hpp"

using namespace steerwig;

namespace {

double nu_law(double s1, double s2, double n) {
  const double p = s1 * s2;
  return 2.0 * n * std::sqrt(p) / (1.0 + p);
}

Graph parse_text(const std::string& text, std::vector<std::string>* warnings = nullptr) {
  std::istringstream in(text);
  return parse_graph(in, warnings);
}

}  // namespace

TEST_CASE("squeezing and noise specs") {
  CHECK(SqueezingSpec::from_db(4.0).ratio() == doctest::Approx(2.5118864315).epsilon(1e-10));
  CHECK(SqueezingSpec::from_db(0.0).ratio() == 1.0);
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(-15.0, 15.0);
  for (int t = 0; t < 100; ++t) {
    const double db = u(rng);
    CHECK(std::abs(SqueezingSpec::from_db(db).db() - db) < 1e-12);
  }
  CHECK_THROWS_AS(SqueezingSpec::from_ratio(0.0), Error);
  CHECK_THROWS_AS(SqueezingSpec::from_ratio(-1.0), Error);
  CHECK_THROWS_AS(ThermalNoise(0.99), Error);
  CHECK(ThermalNoise(1.0).value() == 1.0);
}

TEST_CASE("epr_state") {
  const GaussianState vac = epr_state(SqueezingSpec::from_ratio(1.0), SqueezingSpec::from_ratio(1.0), ThermalNoise(1.0));
  CHECK((vac.covariance() - MatX::Identity(4, 4)).norm() < 1e-14);

  const double s = std::pow(10.0, 0.4);
  const GaussianState st = epr_state(SqueezingSpec::from_ratio(s), SqueezingSpec::from_ratio(s), ThermalNoise(1.2));
  CHECK(st.block(0, 0)(0, 0) == doctest::Approx(1.746).epsilon(1e-3));
  CHECK(std::abs(st.block(0, 1)(0, 0)) == doctest::Approx(1.26827).epsilon(1e-5));
  CHECK(st.block(0, 1)(0, 0) == doctest::Approx(-st.block(0, 1)(1, 1)));

  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> db(-10.0, 10.0);
  std::uniform_real_distribution<double> noise(1.0, 3.0);
  for (int t = 0; t < 100; ++t)
    CHECK(validate_state(epr_state(SqueezingSpec::from_db(db(rng)), SqueezingSpec::from_db(db(rng)),
                                   ThermalNoise(noise(rng))))
              .physical);
}

TEST_CASE("nu follows the closed form and the geometric mean") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> db(0.0, 10.0);
  std::uniform_real_distribution<double> noise(1.0, 2.0);
  for (int t = 0; t < 1000; ++t) {
    const double s1 = std::pow(10.0, db(rng) / 10.0);
    const double s2 = std::pow(10.0, db(rng) / 10.0);
    const double n = noise(rng);
    const auto nu = [&](double a, double b) {
      return analyze(extract_pair(
                         epr_state(SqueezingSpec::from_ratio(a), SqueezingSpec::from_ratio(b), ThermalNoise(n)), 0, 1))
          .nu;
    };
    const double got = nu(s1, s2);
    CHECK(std::abs(got - nu_law(s1, s2, n)) < 1e-10);
    // Same geometric mean, different split.
    const double k = 1.7;
    CHECK(std::abs(nu(s1 * k, s2 / k) - got) < 1e-10);
    CHECK(std::abs(nu(s2, s1) - got) < 1e-10);
  }
}

TEST_CASE("graph_state") {
  SUBCASE("empty graph gives independent squeezed modes") {
    const GaussianState st = graph_state(Graph(Eigen::MatrixXi::Zero(3, 3)), SqueezingSpec::from_ratio(2.0),
                                         ThermalNoise(1.5));
    for (Eigen::Index k = 0; k < 3; ++k)
      CHECK((st.block(k, k) - Mat2(Vec2(3.0, 0.75).asDiagonal())).norm() < 1e-12);
    CHECK(st.block(0, 2).norm() < 1e-12);
  }
  SUBCASE("single edge is a pure two-mode entangled state") {
    const GaussianState st =
        graph_state(Graph::from_edges(2, {{0, 1}}), SqueezingSpec::from_db(5.0), ThermalNoise(1.0));
    const VecX nu = symplectic_eigenvalues<double>(st.covariance());
    CHECK(nu(0) == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(nu(1) == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(st.block(0, 1).norm() > 0.1);
  }
  SUBCASE("pure and physical for any graph at n = 1") {
    std::mt19937_64 rng(4);
    std::bernoulli_distribution coin(0.4);
    std::uniform_real_distribution<double> db(0.0, 10.0);
    for (int t = 0; t < 30; ++t) {
      Eigen::MatrixXi a = Eigen::MatrixXi::Zero(6, 6);
      for (int j = 0; j < 6; ++j)
        for (int k = j + 1; k < 6; ++k) a(j, k) = a(k, j) = coin(rng) ? 1 : 0;
      const GaussianState st = graph_state(Graph(a), SqueezingSpec::from_db(db(rng)), ThermalNoise(1.0));
      const auto diag = validate_state(st);
      CHECK(diag.physical);
      CHECK(*diag.min_symplectic_eigenvalue == doctest::Approx(1.0).epsilon(1e-9));
      CHECK(symplectic_eigenvalues<double>(st.covariance()).maxCoeff() == doctest::Approx(1.0).epsilon(1e-9));
      CHECK(st.covariance().determinant() == doctest::Approx(1.0).epsilon(1e-8));
    }
  }
  SUBCASE("noise scales the covariance") {
    const Graph g = Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}});
    const GaussianState pure = graph_state(g, SqueezingSpec::from_db(3.0), ThermalNoise(1.0));
    const GaussianState noisy = graph_state(g, SqueezingSpec::from_db(3.0), ThermalNoise(1.4));
    CHECK((noisy.covariance() - 1.4 * pure.covariance()).norm() < 1e-12);
  }
  SUBCASE("relabelling vertices permutes the modes") {
    const Graph g = Graph::from_edges(4, {{0, 1}, {1, 2}, {1, 3}});
    const std::vector<int> perm{2, 0, 3, 1};  // vertex k becomes perm[k]
    std::vector<std::pair<Eigen::Index, Eigen::Index>> edges;
    for (const auto& [j, k] : g.edges()) edges.emplace_back(perm[j], perm[k]);
    const GaussianState a = graph_state(g, SqueezingSpec::from_db(4.0), ThermalNoise(1.1));
    const GaussianState b = graph_state(Graph::from_edges(4, edges), SqueezingSpec::from_db(4.0), ThermalNoise(1.1));
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k) CHECK((a.block(j, k) - b.block(perm[j], perm[k])).norm() < 1e-12);
  }
}

TEST_CASE("Graph validation") {
  Eigen::MatrixXi a = Eigen::MatrixXi::Zero(2, 2);
  a(0, 1) = 1;
  CHECK_THROWS_AS(Graph{a}, Error);
  a(1, 0) = 1;
  CHECK(Graph(a).edges().size() == 1);
  a(0, 0) = 1;
  CHECK_THROWS_AS(Graph{a}, Error);
  Eigen::MatrixXi w = Eigen::MatrixXi::Zero(2, 2);
  w(0, 1) = w(1, 0) = 2;
  CHECK_THROWS_AS(Graph{w}, Error);
  CHECK_THROWS_AS(Graph::from_edges(3, {{1, 1}}), Error);
  CHECK_THROWS_AS(Graph::from_edges(3, {{0, 3}}), Error);
}

TEST_CASE("edge-list parsing") {
  SUBCASE("single edge") {
    const Graph g = parse_text("1 2\n");
    CHECK(g.vertices() == 2);
    CHECK(g.adjacency()(0, 1) == 1);
  }
  SUBCASE("chain with comments and header") {
    const Graph g = parse_text("# chain\nvertices 6\n1 2\n2 3  # inline\n\n3 4\n4 5\n5 6\n");
    CHECK(g.vertices() == 6);
    CHECK(g.edges().size() == 5);
    CHECK(g.edges()[4] == std::pair<Eigen::Index, Eigen::Index>{4, 5});
  }
  SUBCASE("isolated trailing vertex via header") {
    CHECK(parse_text("vertices 4\n1 2\n").vertices() == 4);
  }
  SUBCASE("six vertices, seven edges") {
    const Graph g = parse_text("1 2\n2 3\n4 5\n5 6\n1 4\n2 5\n3 6\n");
    CHECK(g.vertices() == 6);
    CHECK(g.adjacency().sum() == 14);
  }
  SUBCASE("duplicates collapse with a warning") {
    std::vector<std::string> warnings;
    const Graph g = parse_text("1 2\n2 1\n", &warnings);
    CHECK(g.edges().size() == 1);
    REQUIRE(warnings.size() == 1);
    CHECK(warnings[0].find("line 2") != std::string::npos);
  }
  SUBCASE("errors carry line numbers") {
    auto message = [](const std::string& text) {
      try {
        parse_text(text);
      } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::parse);
        return std::string(e.what());
      }
      return std::string("no error");
    };
    CHECK(message("1 2\n3 3\n").find("line 2") != std::string::npos);
    CHECK(message("3 3\n").find("self-loop") != std::string::npos);
    CHECK(message("1\n").find("line 1") != std::string::npos);
    CHECK(message("1 x\n").find("line 1") != std::string::npos);
    CHECK(message("0 1\n").find("1-based") != std::string::npos);
    CHECK(message("1 2 3\n").find("trailing") != std::string::npos);
    CHECK(message("vertices 2\n1 3\n").find("exceeds") != std::string::npos);
    CHECK(message("# nothing\n").find("no vertices") != std::string::npos);
  }
  SUBCASE("missing file is an I/O error") {
    try {
      load_graph("/nonexistent/graph.txt");
      FAIL("expected io error");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::io);
    }
  }
}
