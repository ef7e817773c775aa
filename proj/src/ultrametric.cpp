#include "ghpoly/ultrametric.hpp"

#include "ghpoly/simplex.hpp"

namespace ghpoly {

UltrametricQuotient quotient(const FiniteMetricSpace& x) {
  const DistanceMatrix u = minimax_metric(x.dist());
  const Index n = x.size();
  std::vector<Index> class_of(static_cast<std::size_t>(n), -1);
  std::vector<Index> reps;
  for (Index i = 0; i < n; ++i) {
    if (class_of[static_cast<std::size_t>(i)] >= 0) continue;
    const auto c = static_cast<Index>(reps.size());
    reps.push_back(i);
    for (Index j = i; j < n; ++j)
      if (u(i, j) == 0) class_of[static_cast<std::size_t>(j)] = c;
  }
  const auto k = static_cast<Index>(reps.size());
  DistanceMatrix q(k, k);
  std::vector<std::string> labels;
  for (Index a = 0; a < k; ++a) {
    labels.push_back(x.labels()[static_cast<std::size_t>(reps[static_cast<std::size_t>(a)])]);
    for (Index b = 0; b < k; ++b) q(a, b) = u(reps[static_cast<std::size_t>(a)], reps[static_cast<std::size_t>(b)]);
  }
  return {FiniteMetricSpace(std::move(labels), std::move(q)), std::move(class_of)};
}

GHResult gh_lower_ultrametric(const FiniteMetricSpace& x, const FiniteMetricSpace& y,
                              const SearchOptions& options) {
  const UltrametricQuotient ux = quotient(x);
  const UltrametricQuotient uy = quotient(y);

  GHResult inner;
  const bool both_simplices = ux.space.is_simplex() && uy.space.is_simplex() &&
                              ux.space.size() >= 2 && uy.space.size() >= 2;
  if (both_simplices) {
    const bool x_smaller = ux.space.size() <= uy.space.size();
    const FiniteMetricSpace& small = x_smaller ? ux.space : uy.space;
    const FiniteMetricSpace& large = x_smaller ? uy.space : ux.space;
    SimplexOptions sopts;
    sopts.budget = options.budget;
    inner = simplex_distance(SimplexSpec(small.size(), small(0, 1)), large, sopts);
  } else {
    SearchOptions inner_options = options;
    inner_options.seed.reset();
    inner = gh_bruteforce(ux.space, uy.space, inner_options);
  }

  GHResult r;
  r.method = "ultra-lower";
  r.bound = BoundKind::lower;
  r.nodes = inner.nodes;
  r.exhausted = inner.exhausted;
  r.value = inner.exhausted ? inner.lower_bound.value_or(0.0) : inner.value;
  if (!inner.exhausted) r.exact = inner.exact;
  r.witness = std::move(inner.witness);
  return r;
}

} // namespace ghpoly
