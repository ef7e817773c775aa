#ifndef GHPOLY_METRIC_SPACE_HPP
#define GHPOLY_METRIC_SPACE_HPP

#include <cmath>
#include <cstddef>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "ghpoly/pi_rational.hpp"

namespace ghpoly {

using Index = Eigen::Index;
using DistanceMatrix = Eigen::MatrixXd;
using StepMatrix = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;

/// Absolute tolerance for metric axiom checks.
inline constexpr double kMetricEps = 1e-9;

enum class Axiom {
  empty,
  non_square,
  label_count,
  non_finite,
  negative,
  nonzero_diagonal,
  asymmetric,
  zero_distance,
  triangle,
};

std::string to_string(Axiom a);

struct Violation {
  Axiom axiom;
  Index i = -1;
  Index j = -1;
  Index k = -1;  // triangle only: d(i,j) > d(i,k) + d(k,j)
  double excess = 0.0;

  std::string describe() const;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  bool has(Axiom a) const;
  std::string summary() const;
};

class InvalidMetricError : public std::invalid_argument {
public:
  explicit InvalidMetricError(ValidationReport report);
  const ValidationReport& report() const { return report_; }

private:
  ValidationReport report_;
};

/// Checks every metric axiom on a dense matrix. Stops listing triangle
/// violations after `max_triangle_reports` to keep reports bounded.
template <typename Derived>
ValidationReport validate_matrix(const Eigen::MatrixBase<Derived>& d, bool allow_pseudo,
                                 double eps = kMetricEps, std::size_t max_triangle_reports = 16) {
  ValidationReport report;
  auto add = [&](Axiom a, Index i = -1, Index j = -1, Index k = -1, double excess = 0.0) {
    report.violations.push_back({a, i, j, k, excess});
  };
  if (d.rows() == 0 || d.cols() == 0) {
    add(Axiom::empty);
    return report;
  }
  if (d.rows() != d.cols()) {
    add(Axiom::non_square);
    return report;
  }
  const Index n = d.rows();
  bool entries_ok = true;
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) {
      const double v = static_cast<double>(d(i, j));
      if (!std::isfinite(v)) {
        add(Axiom::non_finite, i, j);
        entries_ok = false;
      } else if (v < 0) {
        add(Axiom::negative, i, j, -1, -v);
        entries_ok = false;
      }
    }
  }
  if (!entries_ok) return report;
  for (Index i = 0; i < n; ++i) {
    if (d(i, i) != 0) add(Axiom::nonzero_diagonal, i, i, -1, static_cast<double>(d(i, i)));
  }
  for (Index i = 0; i < n; ++i) {
    for (Index j = i + 1; j < n; ++j) {
      const double gap = std::abs(static_cast<double>(d(i, j) - d(j, i)));
      if (gap > eps) add(Axiom::asymmetric, i, j, -1, gap);
      if (!allow_pseudo && (d(i, j) == 0 || d(j, i) == 0)) add(Axiom::zero_distance, i, j);
    }
  }
  std::size_t triangles = 0;
  for (Index i = 0; i < n && triangles < max_triangle_reports; ++i) {
    for (Index j = i + 1; j < n && triangles < max_triangle_reports; ++j) {
      for (Index k = 0; k < n; ++k) {
        if (k == i || k == j) continue;
        const double excess = static_cast<double>(d(i, j) - (d(i, k) + d(k, j)));
        if (excess > eps) {
          add(Axiom::triangle, i, j, k, excess);
          if (++triangles >= max_triangle_reports) break;
        }
      }
    }
  }
  return report;
}

/// Largest entry; 0 for a one-point space.
template <typename Derived>
typename Derived::Scalar diameter(const Eigen::MatrixBase<Derived>& d) {
  return d.size() == 0 ? typename Derived::Scalar(0) : d.maxCoeff();
}

/// Largest distance inside a point subset.
template <typename Derived>
typename Derived::Scalar subset_diameter(const Eigen::MatrixBase<Derived>& d,
                                         std::span<const Index> a) {
  if (a.empty()) throw std::domain_error("subset_diameter: empty set");
  typename Derived::Scalar best(0);
  for (std::size_t p = 0; p < a.size(); ++p)
    for (std::size_t q = p + 1; q < a.size(); ++q) best = std::max(best, d(a[p], a[q]));
  return best;
}

/// |AB| = min over a in A, b in B of d(a, b).
template <typename Derived>
typename Derived::Scalar set_distance(const Eigen::MatrixBase<Derived>& d, std::span<const Index> a,
                                      std::span<const Index> b) {
  if (a.empty() || b.empty()) throw std::domain_error("set_distance: empty set");
  auto best = std::numeric_limits<typename Derived::Scalar>::max();
  for (Index i : a)
    for (Index j : b) best = std::min(best, d(i, j));
  return best;
}

/// Labeled finite metric space over a validated dense distance matrix.
///
/// Spaces produced by `regular_polygon` additionally carry their distances
/// exactly, as integer multiples of the unit 2pi/n.
class FiniteMetricSpace {
public:
  /// Throws InvalidMetricError when an axiom fails.
  FiniteMetricSpace(std::vector<std::string> labels, DistanceMatrix dist, bool allow_pseudo = false);

  Index size() const { return dist_.rows(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const DistanceMatrix& dist() const { return dist_; }
  double operator()(Index i, Index j) const { return dist_(i, j); }

  /// Throws std::out_of_range for an unknown label.
  Index index_of(const std::string& label) const;

  bool is_pseudo() const { return pseudo_; }

  /// n when this space is the vertex set P_n.
  std::optional<int> polygon_order() const { return polygon_order_; }
  /// Exact distance for polygon spaces.
  std::optional<PiRational> exact_distance(Index i, Index j) const;
  /// Exact matrix as multiples of 2pi/n; empty for non-polygon spaces.
  const StepMatrix& polygon_steps() const { return steps_; }

  /// True when every off-diagonal distance is the same value (λΔ_m).
  bool is_simplex() const;

  friend FiniteMetricSpace regular_polygon(int n, const std::string& prefix);
  friend std::optional<FiniteMetricSpace> as_polygon(const FiniteMetricSpace& space);

private:
  std::vector<std::string> labels_;
  DistanceMatrix dist_;
  bool pseudo_ = false;
  std::optional<int> polygon_order_;
  StepMatrix steps_;
};

ValidationReport validate(const FiniteMetricSpace& space, bool allow_pseudo = false);

/// Vertices of the regular n-gon inscribed in the unit circle with the arc
/// metric d(v_i, v_j) = (2pi/n) * min(|i-j|, n-|i-j|). Labels are prefix1..prefixn.
FiniteMetricSpace regular_polygon(int n, const std::string& prefix = "v");

/// If `space` is bit-identical to regular_polygon(n) (labels aside), returns a
/// copy carrying the exact polygon structure.
std::optional<FiniteMetricSpace> as_polygon(const FiniteMetricSpace& space);

/// m points, all nonzero distances equal to lambda.
FiniteMetricSpace simplex_space(Index m, double lambda, const std::string& prefix = "s");

/// Labels prefix1..prefixn.
std::vector<std::string> numbered_labels(Index n, const std::string& prefix);

double diam(const FiniteMetricSpace& space);
double set_distance(const FiniteMetricSpace& space, std::span<const Index> a,
                    std::span<const Index> b);

} // namespace ghpoly

#endif
