#ifndef GHPOLY_GH_EXACT_HPP
#define GHPOLY_GH_EXACT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <variant>

#include "ghpoly/correspondence.hpp"
#include "ghpoly/partition.hpp"

namespace ghpoly {

enum class BoundKind { exact, lower, upper };

std::string to_string(BoundKind kind);

/// A Gromov–Hausdorff value with its provenance.
struct GHResult {
  double value = 0.0;
  BoundKind bound = BoundKind::exact;
  std::variant<std::monostate, Correspondence, Partition> witness;
  std::string method;
  /// Exact value when it is known as a multiple of pi.
  std::optional<PiRational> exact;
  /// True when the node budget ran out before the search finished.
  bool exhausted = false;
  /// Best lower bound known when the search was cut short.
  std::optional<double> lower_bound;
  std::uint64_t nodes = 0;

  const Correspondence* correspondence() const { return std::get_if<Correspondence>(&witness); }
  const Partition* partition() const { return std::get_if<Partition>(&witness); }
};

struct SearchOptions {
  /// Search-tree node limit; exceeding it yields an upper-bound result.
  std::uint64_t budget = 1'000'000'000;
  /// Worker threads over the top-level branches; 1 searches sequentially.
  unsigned threads = 1;
  /// Overrides the automatic seed correspondence (polygon arcs or distance profiles).
  std::optional<Correspondence> seed;
};

/// d_GH(X, Y) = ½ min dis R, searched by branch and bound over correspondences
/// of the form graph(f) ∪ transpose(graph(g)).
///
/// Restricting to that family loses nothing. Every correspondence R contains
/// one: pick any partner f(x) with (x, f(x)) ∈ R for each x and any g(y) with
/// (g(y), y) ∈ R for each y. Distortion is a max over pairs of pairs, so it can
/// only drop on a subset. Hence the minimum over all R is attained in the family.
///
/// f is enumerated over the smaller space, then g only for points left
/// uncovered by f. Partial distortion never decreases along a branch, which is
/// what the pruning relies on. Among optimal witnesses the lexicographically
/// smallest (f, g) encoding is returned.
GHResult gh_bruteforce(const FiniteMetricSpace& x, const FiniteMetricSpace& y,
                       const SearchOptions& options = {});

/// ½ |diam X − diam Y|.
GHResult gh_lower_diameter(const FiniteMetricSpace& x, const FiniteMetricSpace& y);

/// Pairs vertex j of P_m with vertex ⌊j·n/m⌋ of P_n (the coarser polygon is
/// taken as the domain of the rounding). Both spaces must be polygons.
Correspondence arc_seed(const FiniteMetricSpace& x, const FiniteMetricSpace& y);

/// Matches each point to the point on the other side with the closest sorted
/// distance profile, in both directions.
Correspondence profile_seed(const FiniteMetricSpace& x, const FiniteMetricSpace& y);

/// arc_seed for two polygons, profile_seed otherwise.
Correspondence default_seed(const FiniteMetricSpace& x, const FiniteMetricSpace& y);

} // namespace ghpoly

#endif
