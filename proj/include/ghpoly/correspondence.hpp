#ifndef GHPOLY_CORRESPONDENCE_HPP
#define GHPOLY_CORRESPONDENCE_HPP

#include <cmath>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "ghpoly/metric_space.hpp"

namespace ghpoly {

using IndexPair = std::pair<Index, Index>;

/// A relation R ⊂ X × Y in which every point of X and every point of Y
/// appears at least once. Pairs are kept sorted and unique.
class Correspondence {
public:
  /// Throws std::domain_error naming the first uncovered point, or an index out of range.
  Correspondence(Index x_size, Index y_size, std::vector<IndexPair> pairs);

  /// graph(f) ∪ transpose(graph(g)) for f: X → Y and g: Y → X.
  static Correspondence from_maps(std::span<const Index> f, std::span<const Index> g);

  Index x_size() const { return x_size_; }
  Index y_size() const { return y_size_; }
  const std::vector<IndexPair>& pairs() const { return pairs_; }
  std::size_t size() const { return pairs_.size(); }

  bool contains(Index i, Index j) const;
  Correspondence transposed() const;

  friend bool operator==(const Correspondence&, const Correspondence&) = default;

private:
  Index x_size_;
  Index y_size_;
  std::vector<IndexPair> pairs_;
};

/// max over (i,j),(k,l) in R of |dx(i,k) - dy(j,l)|. Does not check coverage.
template <typename DerivedX, typename DerivedY>
typename DerivedX::Scalar distortion(std::span<const IndexPair> pairs,
                                     const Eigen::MatrixBase<DerivedX>& dx,
                                     const Eigen::MatrixBase<DerivedY>& dy) {
  typename DerivedX::Scalar worst(0);
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    const auto [i, j] = pairs[p];
    for (std::size_t q = p + 1; q < pairs.size(); ++q) {
      const auto [k, l] = pairs[q];
      using std::abs;
      worst = std::max(worst, abs(dx(i, k) - dy(j, l)));
    }
  }
  return worst;
}

/// dis R. Throws std::domain_error when R does not fit the spaces.
double distortion(const Correspondence& r, const FiniteMetricSpace& x, const FiniteMetricSpace& y);

/// dis R in exact arithmetic; nullopt unless both spaces are polygons.
std::optional<PiRational> exact_distortion(const Correspondence& r, const FiniteMetricSpace& x,
                                           const FiniteMetricSpace& y);

} // namespace ghpoly

#endif
