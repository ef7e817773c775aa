#include "doctest.h"

#include <sstream>

#include "ghpoly/metric_io.hpp"
#include "ghpoly/metric_space.hpp"
#include "ghpoly/partition.hpp"
#include "oracles.hpp"

using namespace ghpoly;
using oracle::pi;

namespace {

DistanceMatrix mat(std::initializer_list<std::initializer_list<double>> rows) {
  DistanceMatrix d(static_cast<Index>(rows.size()), static_cast<Index>(rows.begin()->size()));
  Index i = 0;
  for (const auto& r : rows) {
    Index j = 0;
    for (double v : r) d(i, j++) = v;
    ++i;
  }
  return d;
}

} // namespace

TEST_CASE("PiRational arithmetic stays in lowest terms") {
  const PiRational a(2, 4);
  CHECK(a.num() == 1);
  CHECK(a.den() == 2);
  CHECK(PiRational(3, -6) == PiRational(-1, 2));
  CHECK(PiRational(1, 3) - PiRational(2, 15) == PiRational(1, 5));
  CHECK(PiRational(1, 4) - PiRational(1, 12) == PiRational(1, 6));
  CHECK(PiRational(1, 6) * 3 == PiRational(1, 2));
  CHECK(PiRational(1, 2) / 3 == PiRational(1, 6));
  CHECK(PiRational(1, 7) < PiRational(1, 6));
  CHECK_THROWS_AS(PiRational(1, 0), std::domain_error);
}

TEST_CASE("PiRational rendering") {
  CHECK(PiRational(0).to_string() == "0");
  CHECK(PiRational(1).to_string() == "π");
  CHECK(PiRational(1, 6).to_string() == "π/6");
  CHECK(PiRational(2, 15).to_string() == "2π/15");
  CHECK(PiRational(-1, 4).to_string() == "-π/4");
}

TEST_CASE("PiRational recovers q from q*pi for denominators up to 1e4") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::int64_t> den(1, 10000);
  for (int trial = 0; trial < 300; ++trial) {
    const std::int64_t b = den(rng);
    std::uniform_int_distribution<std::int64_t> num(-3 * b, 3 * b);
    const PiRational q(num(rng), b);
    const auto back = PiRational::from_multiple_of_pi(q.value());
    REQUIRE(back.has_value());
    CHECK(*back == q);
    CHECK(back->value() == q.value());
  }
  CHECK_FALSE(PiRational::from_multiple_of_pi(1.0, 100).has_value());
}

TEST_CASE("validate: small spaces") {
  CHECK(validate_matrix(mat({{0}}), false).ok());
  CHECK(validate_matrix(mat({{0, 1}, {1, 0}}), false).ok());

  const auto report = validate_matrix(mat({{0, 1, 3}, {1, 0, 1}, {3, 1, 0}}), false);
  REQUIRE(report.has(Axiom::triangle));
  const Violation& v = report.violations.front();
  CHECK(v.axiom == Axiom::triangle);
  CHECK(v.i == 0);
  CHECK(v.j == 2);
  CHECK(v.k == 1);
  CHECK(v.excess == doctest::Approx(1.0));
}

TEST_CASE("validate: each axiom is reported under its own name") {
  CHECK(validate_matrix(DistanceMatrix(2, 3), false).has(Axiom::non_square));
  CHECK(validate_matrix(DistanceMatrix(0, 0), false).has(Axiom::empty));
  CHECK(validate_matrix(mat({{0, -1}, {-1, 0}}), false).has(Axiom::negative));
  CHECK(validate_matrix(mat({{0, std::nan("")}, {1, 0}}), false).has(Axiom::non_finite));
  CHECK(validate_matrix(mat({{0, 1}, {1.5, 0}}), false).has(Axiom::asymmetric));
  CHECK(validate_matrix(mat({{1, 1}, {1, 0}}), false).has(Axiom::nonzero_diagonal));
  CHECK(validate_matrix(mat({{0, 0}, {0, 0}}), false).has(Axiom::zero_distance));
  CHECK(validate_matrix(mat({{0, 0}, {0, 0}}), true).ok());
  // Asymmetry below the tolerance is accepted.
  CHECK(validate_matrix(mat({{0, 1}, {1 + 1e-12, 0}}), false).ok());

  CHECK_THROWS_AS(FiniteMetricSpace({"a", "b"}, mat({{0, 1, 3}, {1, 0, 1}, {3, 1, 0}})), InvalidMetricError);
  CHECK_THROWS_AS(FiniteMetricSpace({"a"}, mat({{0, 1}, {1, 0}})), InvalidMetricError);
}

TEST_CASE("regular_polygon distances") {
  CHECK(regular_polygon(2)(0, 1) == pi);
  const auto p4 = regular_polygon(4);
  CHECK(p4(0, 1) == pi / 2);
  CHECK(p4(0, 2) == pi);
  CHECK(p4.labels() == std::vector<std::string>{"v1", "v2", "v3", "v4"});
  CHECK(regular_polygon(3, "u").labels().front() == "u1");
  CHECK(diam(regular_polygon(5)) == doctest::Approx(4 * pi / 5));
  CHECK(*p4.exact_distance(0, 2) == PiRational(1));
  CHECK(*regular_polygon(6).exact_distance(0, 2) == PiRational(2, 3));
  CHECK_THROWS_AS(regular_polygon(1), std::domain_error);
  CHECK_THROWS_AS(regular_polygon(0), std::domain_error);
}

TEST_CASE("regular_polygon agrees with the arc formula and is circulant") {
  for (int n = 2; n <= 24; ++n) {
    const auto p = regular_polygon(n);
    CHECK(validate(p).ok());
    CHECK((p.dist() - oracle::polygon(n)).cwiseAbs().maxCoeff() <= 1e-15);
    std::vector<double> row0;
    for (Index j = 0; j < n; ++j) row0.push_back(p(0, j));
    std::sort(row0.begin(), row0.end());
    for (Index i = 1; i < n; ++i) {
      for (Index j = 0; j < n; ++j) CHECK(p(i, j) == p(0, (j - i + n) % n));
      std::vector<double> row;
      for (Index j = 0; j < n; ++j) row.push_back(p(i, j));
      std::sort(row.begin(), row.end());
      CHECK(row == row0);
    }
  }
}

TEST_CASE("diam and set_distance") {
  CHECK(diam(regular_polygon(2)) == pi);
  // (2π/7)·3 = π − π/7; see the README note on odd polygons.
  CHECK(diam(regular_polygon(7)) == doctest::Approx(pi - pi / 7).epsilon(1e-15));
  const std::vector<Index> a{0}, b{1};
  for (int m = 2; m <= 9; ++m) CHECK(set_distance(regular_polygon(m), a, b) == doctest::Approx(2 * pi / m));
  const std::vector<Index> none;
  CHECK_THROWS_AS(set_distance(regular_polygon(3), none, b), std::domain_error);
  const FiniteMetricSpace one({"p"}, DistanceMatrix::Zero(1, 1));
  CHECK(diam(one) == 0.0);
}

TEST_CASE("partition statistics") {
  const auto p7 = regular_polygon(7);

  SUBCASE("singletons") {
    const Partition d = Partition::canonical({0, 1, 2, 3, 4, 5, 6});
    CHECK(partition_diam(d, p7) == 0.0);
    CHECK(partition_alpha(d, p7) == doctest::Approx(2 * pi / 7));
  }
  SUBCASE("three consecutive runs of P_7 with q = 2") {
    const Partition d({0, 0, 1, 1, 2, 2, 2}, 3);
    // Reference: max pairwise distance inside each block, straight from the arc formula.
    double expect = 0;
    const auto members = d.members();
    for (const auto& block : members)
      for (Index i : block)
        for (Index j : block) expect = std::max(expect, oracle::polygon_distance(7, static_cast<int>(i), static_cast<int>(j)));
    CHECK(expect == doctest::Approx(4 * pi / 7));
    CHECK(partition_diam(d, p7) == doctest::Approx(expect));
    CHECK(partition_alpha(d, p7) == doctest::Approx(2 * pi / 7));
  }
  SUBCASE("one block") {
    const Partition d({0, 0, 0, 0}, 1);
    CHECK(partition_diam(d, regular_polygon(4)) == pi);
    CHECK(std::isinf(partition_alpha(d, regular_polygon(4))));
    CHECK_THROWS_AS(Partition({0, 0, 0, 0}, 3), std::domain_error);
  }
  SUBCASE("invalid partitions") {
    CHECK_THROWS_AS(Partition({0, 2, 2}, 3), std::domain_error);
    CHECK_THROWS_AS(Partition({0, 1}, 3), std::domain_error);
    CHECK_THROWS_AS(Partition({0, 3}, 2), std::domain_error);
  }
  SUBCASE("canonical form") {
    const Partition d = Partition::canonical({4, 4, 1, 4, 7});
    CHECK(d.assignment() == std::vector<int>{0, 0, 1, 0, 2});
    CHECK(d.blocks() == 3);
    CHECK(d.is_canonical());
    CHECK_FALSE(Partition({1, 0}, 2).is_canonical());
  }
}

TEST_CASE("random metrics validate and partition bounds hold") {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + trial % 9;
    const FiniteMetricSpace x(numbered_labels(n, "x"), oracle::random_metric(n, rng));
    CHECK(validate(x).ok());
    std::uniform_int_distribution<int> pick(0, n - 1);
    std::vector<int> raw(static_cast<std::size_t>(n));
    for (int& b : raw) b = pick(rng);
    const Partition d = Partition::canonical(raw);
    CHECK(partition_diam(d, x) <= diam(x));
    double min_off = std::numeric_limits<double>::infinity();
    for (Index i = 0; i < n; ++i)
      for (Index j = 0; j < n; ++j)
        if (i != j) min_off = std::min(min_off, x(i, j));
    CHECK(partition_alpha(d, x) >= min_off);
  }
}

TEST_CASE("matrix files round-trip bit-exactly") {
  for (MatrixFormat f : {MatrixFormat::csv, MatrixFormat::json}) {
    for (int n : {2, 3, 7, 12}) {
      const auto p = regular_polygon(n);
      std::stringstream ss;
      write_space(ss, p, f);
      const auto back = read_space(ss, f);
      CHECK(back.dist() == p.dist());
      CHECK(back.labels() == p.labels());
      REQUIRE(back.polygon_order().has_value());
      CHECK(*back.polygon_order() == n);
    }
    std::mt19937_64 rng(3);
    const FiniteMetricSpace x(numbered_labels(6, "x"), oracle::random_metric(6, rng));
    std::stringstream ss;
    write_space(ss, x, f);
    const auto back = read_space(ss, f);
    CHECK(back.dist() == x.dist());
    CHECK_FALSE(back.polygon_order().has_value());
  }
}

TEST_CASE("reader rejects malformed and non-metric input") {
  {
    std::istringstream is("a,b\n0,1\n1,0,5\n");
    CHECK_THROWS_AS(read_space(is, MatrixFormat::csv), InvalidMetricError);
  }
  {
    std::istringstream is("a,b\n0,x\n1,0\n");
    CHECK_THROWS_AS(read_space(is, MatrixFormat::csv), ParseError);
  }
  {
    std::istringstream is("a,b,c\n0,1,3\n1,0,1\n3,1,0\n");
    try {
      read_space(is, MatrixFormat::csv);
      FAIL("expected a triangle violation");
    } catch (const InvalidMetricError& e) {
      CHECK(e.report().has(Axiom::triangle));
    }
  }
  {
    std::istringstream is(R"({"labels": ["a"], "dist": [[0, 1], [1, 0]]})");
    CHECK_THROWS_AS(read_space(is, MatrixFormat::json), InvalidMetricError);
  }
  {
    std::istringstream is(R"({"labels": ["a", "b"]})");
    CHECK_THROWS_AS(read_space(is, MatrixFormat::json), ParseError);
  }
  {
    std::istringstream is("{not json");
    CHECK_THROWS_AS(read_space(is, MatrixFormat::json), ParseError);
  }
  {
    std::istringstream is(R"({"labels": ["a", "b"], "dist": [[0, 0], [0, 0]]})");
    CHECK_THROWS_AS(read_space(is, MatrixFormat::json), InvalidMetricError);
    std::istringstream again(R"({"labels": ["a", "b"], "dist": [[0, 0], [0, 0]]})");
    CHECK(read_space(again, MatrixFormat::json, true).is_pseudo());
  }
}
