#ifndef GHPOLY_SIMPLEX_HPP
#define GHPOLY_SIMPLEX_HPP

#include <cstdint>
#include <functional>
#include <optional>

#include "ghpoly/gh_exact.hpp"

namespace ghpoly {

/// λΔ_m: m points, every nonzero distance equal to λ.
class SimplexSpec {
public:
  /// Throws std::domain_error unless m >= 2 and lambda > 0.
  SimplexSpec(Index m, double lambda);

  Index m() const { return m_; }
  double lambda() const { return lambda_; }

  FiniteMetricSpace materialize(const std::string& prefix = "s") const;

private:
  Index m_;
  double lambda_;
};

/// Restricted-growth strings of length n with exactly m distinct values, in
/// increasing lexicographic order: every partition of n points into m
/// nonempty blocks exactly once.
class PartitionStream {
public:
  /// Throws std::domain_error unless 1 <= m <= n.
  PartitionStream(Index n, int m);

  std::optional<Partition> next();

private:
  bool advance();

  std::vector<int> rgs_;
  int m_;
  bool started_ = false;
  bool done_ = false;
};

PartitionStream enumerate_partitions(Index n, int m);

/// max{diam D, λ − α(D), diam X − λ}.
double partition_objective(const Partition& part, const SimplexSpec& s, const FiniteMetricSpace& x);

struct SimplexOptions {
  std::uint64_t budget = 1'000'000'000;
  /// For polygon targets, seed the bound with partitions into runs of consecutive vertices.
  bool consecutive_seed = true;
};

/// d_GH(λΔ_m, X) = ½ min over partitions D of X into m blocks of
/// max{diam D, λ − α(D), diam X − λ}, by branch and bound over block
/// assignments in point order. Every term of the objective is nondecreasing
/// as points are assigned, so a partial assignment bounds its completions.
GHResult simplex_distance(const SimplexSpec& s, const FiniteMetricSpace& x,
                          const SimplexOptions& options = {});

} // namespace ghpoly

#endif
