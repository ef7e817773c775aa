#ifndef GHPOLY_ULTRAMETRIC_HPP
#define GHPOLY_ULTRAMETRIC_HPP

#include <limits>
#include <vector>

#include "ghpoly/gh_exact.hpp"

namespace ghpoly {

/// Min-max chain distance u(x, y): the smallest achievable largest link over
/// all chains from x to y. Computed as the heaviest edge on the x–y path of a
/// minimum spanning tree (Prim, dense), so every output entry is a copy of an
/// input entry.
template <typename Derived>
typename Derived::PlainObject minimax_metric(const Eigen::MatrixBase<Derived>& d) {
  using Scalar = typename Derived::Scalar;
  using Plain = typename Derived::PlainObject;
  const Index n = d.rows();
  Plain u = Plain::Zero(n, n);
  if (n <= 1) return u;

  std::vector<Index> parent(static_cast<std::size_t>(n), -1);
  std::vector<Scalar> key(static_cast<std::size_t>(n), std::numeric_limits<Scalar>::infinity());
  std::vector<bool> in_tree(static_cast<std::size_t>(n), false);
  std::vector<std::vector<Index>> adj(static_cast<std::size_t>(n));
  key[0] = Scalar(0);
  for (Index step = 0; step < n; ++step) {
    Index v = -1;
    for (Index i = 0; i < n; ++i)
      if (!in_tree[static_cast<std::size_t>(i)] && (v < 0 || key[static_cast<std::size_t>(i)] < key[static_cast<std::size_t>(v)]))
        v = i;
    in_tree[static_cast<std::size_t>(v)] = true;
    if (const Index p = parent[static_cast<std::size_t>(v)]; p >= 0) {
      adj[static_cast<std::size_t>(p)].push_back(v);
      adj[static_cast<std::size_t>(v)].push_back(p);
    }
    for (Index i = 0; i < n; ++i) {
      if (!in_tree[static_cast<std::size_t>(i)] && d(v, i) < key[static_cast<std::size_t>(i)]) {
        key[static_cast<std::size_t>(i)] = d(v, i);
        parent[static_cast<std::size_t>(i)] = v;
      }
    }
  }

  // Heaviest edge on the tree path, one traversal per source.
  std::vector<Index> stack;
  std::vector<Index> from(static_cast<std::size_t>(n));
  for (Index s = 0; s < n; ++s) {
    stack.assign(1, s);
    from[static_cast<std::size_t>(s)] = -1;
    while (!stack.empty()) {
      const Index v = stack.back();
      stack.pop_back();
      for (Index w : adj[static_cast<std::size_t>(v)]) {
        if (w == from[static_cast<std::size_t>(v)]) continue;
        from[static_cast<std::size_t>(w)] = v;
        u(s, w) = std::max(u(s, v), d(v, w));
        stack.push_back(w);
      }
    }
  }
  return u;
}

/// U(X): points of X glued along u = 0, with the induced u distances.
struct UltrametricQuotient {
  FiniteMetricSpace space;
  std::vector<Index> class_of;
};

UltrametricQuotient quotient(const FiniteMetricSpace& x);

/// d_GH(U(X), U(Y)), which bounds d_GH(X, Y) from below. Simplex quotients go
/// through the partition formula, anything else through gh_bruteforce.
GHResult gh_lower_ultrametric(const FiniteMetricSpace& x, const FiniteMetricSpace& y,
                              const SearchOptions& options = {});

} // namespace ghpoly

#endif
