#ifndef GHPOLY_PARTITION_HPP
#define GHPOLY_PARTITION_HPP

#include <limits>
#include <vector>

#include "ghpoly/metric_space.hpp"

namespace ghpoly {

/// Assignment of points 0..n-1 to exactly m nonempty blocks.
class Partition {
public:
  /// Throws std::domain_error if a block id is out of range or a block is empty.
  Partition(std::vector<int> block_of, int m);

  /// Renumbers blocks so that first occurrences appear in increasing order.
  static Partition canonical(std::vector<int> block_of);

  int blocks() const { return m_; }
  Index points() const { return static_cast<Index>(block_of_.size()); }
  int block_of(Index i) const { return block_of_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& assignment() const { return block_of_; }

  /// True for a restricted-growth string.
  bool is_canonical() const;

  std::vector<std::vector<Index>> members() const;

  friend bool operator==(const Partition&, const Partition&) = default;

private:
  std::vector<int> block_of_;
  int m_;
};

/// diam D: the largest block diameter.
template <typename Derived>
typename Derived::Scalar partition_diam(const Partition& part, const Eigen::MatrixBase<Derived>& d) {
  typename Derived::Scalar best(0);
  const Index n = part.points();
  for (Index i = 0; i < n; ++i)
    for (Index j = i + 1; j < n; ++j)
      if (part.block_of(i) == part.block_of(j)) best = std::max(best, d(i, j));
  return best;
}

/// α(D): the smallest distance between points of distinct blocks; +inf when m = 1.
template <typename Derived>
typename Derived::Scalar partition_alpha(const Partition& part, const Eigen::MatrixBase<Derived>& d) {
  auto best = std::numeric_limits<typename Derived::Scalar>::infinity();
  const Index n = part.points();
  for (Index i = 0; i < n; ++i)
    for (Index j = i + 1; j < n; ++j)
      if (part.block_of(i) != part.block_of(j)) best = std::min(best, d(i, j));
  return best;
}

double partition_diam(const Partition& part, const FiniteMetricSpace& space);
double partition_alpha(const Partition& part, const FiniteMetricSpace& space);

} // namespace ghpoly

#endif
