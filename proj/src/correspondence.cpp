#include "ghpoly/correspondence.hpp"

#include <algorithm>
#include <string>

namespace ghpoly {

Correspondence::Correspondence(Index x_size, Index y_size, std::vector<IndexPair> pairs)
    : x_size_(x_size), y_size_(y_size), pairs_(std::move(pairs)) {
  std::sort(pairs_.begin(), pairs_.end());
  pairs_.erase(std::unique(pairs_.begin(), pairs_.end()), pairs_.end());
  std::vector<bool> cx(static_cast<std::size_t>(x_size_), false);
  std::vector<bool> cy(static_cast<std::size_t>(y_size_), false);
  for (const auto& [i, j] : pairs_) {
    if (i < 0 || i >= x_size_ || j < 0 || j >= y_size_)
      throw std::domain_error("correspondence: pair (" + std::to_string(i) + "," + std::to_string(j) +
                              ") out of range");
    cx[static_cast<std::size_t>(i)] = true;
    cy[static_cast<std::size_t>(j)] = true;
  }
  for (Index i = 0; i < x_size_; ++i)
    if (!cx[static_cast<std::size_t>(i)])
      throw std::domain_error("correspondence: point " + std::to_string(i) + " of X is uncovered");
  for (Index j = 0; j < y_size_; ++j)
    if (!cy[static_cast<std::size_t>(j)])
      throw std::domain_error("correspondence: point " + std::to_string(j) + " of Y is uncovered");
}

Correspondence Correspondence::from_maps(std::span<const Index> f, std::span<const Index> g) {
  std::vector<IndexPair> pairs;
  pairs.reserve(f.size() + g.size());
  for (std::size_t i = 0; i < f.size(); ++i) pairs.emplace_back(static_cast<Index>(i), f[i]);
  for (std::size_t j = 0; j < g.size(); ++j) pairs.emplace_back(g[j], static_cast<Index>(j));
  return Correspondence(static_cast<Index>(f.size()), static_cast<Index>(g.size()), std::move(pairs));
}

bool Correspondence::contains(Index i, Index j) const {
  return std::binary_search(pairs_.begin(), pairs_.end(), IndexPair{i, j});
}

Correspondence Correspondence::transposed() const {
  std::vector<IndexPair> t;
  t.reserve(pairs_.size());
  for (const auto& [i, j] : pairs_) t.emplace_back(j, i);
  return Correspondence(y_size_, x_size_, std::move(t));
}

double distortion(const Correspondence& r, const FiniteMetricSpace& x, const FiniteMetricSpace& y) {
  if (r.x_size() != x.size() || r.y_size() != y.size())
    throw std::domain_error("distortion: correspondence does not match the spaces' sizes");
  return distortion(std::span<const IndexPair>(r.pairs()), x.dist(), y.dist());
}

std::optional<PiRational> exact_distortion(const Correspondence& r, const FiniteMetricSpace& x,
                                           const FiniteMetricSpace& y) {
  if (!x.polygon_order() || !y.polygon_order()) return std::nullopt;
  if (r.x_size() != x.size() || r.y_size() != y.size())
    throw std::domain_error("distortion: correspondence does not match the spaces' sizes");
  // Over the common unit 2pi/(n*m) every distance is an integer.
  const std::int64_t n = *x.polygon_order();
  const std::int64_t m = *y.polygon_order();
  const StepMatrix sx = x.polygon_steps() * m;
  const StepMatrix sy = y.polygon_steps() * n;
  const auto& pairs = r.pairs();
  std::int64_t worst = distortion(std::span<const IndexPair>(pairs), sx, sy);
  return PiRational(2 * worst, n * m);
}

} // namespace ghpoly
