#include "ghpoly/metric_space.hpp"

#include <algorithm>
#include <sstream>

namespace ghpoly {

std::string to_string(Axiom a) {
  switch (a) {
    case Axiom::empty: return "empty";
    case Axiom::non_square: return "non-square";
    case Axiom::label_count: return "label-count";
    case Axiom::non_finite: return "non-finite";
    case Axiom::negative: return "negative";
    case Axiom::nonzero_diagonal: return "nonzero-diagonal";
    case Axiom::asymmetric: return "asymmetric";
    case Axiom::zero_distance: return "zero-distance";
    case Axiom::triangle: return "triangle";
  }
  return "unknown";
}

std::string Violation::describe() const {
  std::ostringstream os;
  os << to_string(axiom);
  switch (axiom) {
    case Axiom::empty:
    case Axiom::non_square:
    case Axiom::label_count:
      break;
    case Axiom::triangle:
      os << " at (" << i << "," << j << ") via " << k << ", excess " << excess;
      break;
    default:
      os << " at (" << i << "," << j << ")";
      if (excess != 0.0) os << ", by " << excess;
  }
  return os.str();
}

bool ValidationReport::has(Axiom a) const {
  return std::any_of(violations.begin(), violations.end(),
                     [a](const Violation& v) { return v.axiom == a; });
}

std::string ValidationReport::summary() const {
  if (ok()) return "valid";
  std::string s;
  for (const auto& v : violations) {
    if (!s.empty()) s += "; ";
    s += v.describe();
  }
  return s;
}

InvalidMetricError::InvalidMetricError(ValidationReport report)
    : std::invalid_argument("invalid metric: " + report.summary()), report_(std::move(report)) {}

FiniteMetricSpace::FiniteMetricSpace(std::vector<std::string> labels, DistanceMatrix dist,
                                     bool allow_pseudo)
    : labels_(std::move(labels)), dist_(std::move(dist)), pseudo_(allow_pseudo) {
  ValidationReport report = validate_matrix(dist_, allow_pseudo);
  if (report.ok() && static_cast<Index>(labels_.size()) != dist_.rows())
    report.violations.push_back({Axiom::label_count});
  if (!report.ok()) throw InvalidMetricError(std::move(report));
}

Index FiniteMetricSpace::index_of(const std::string& label) const {
  const auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) throw std::out_of_range("unknown point label '" + label + "'");
  return static_cast<Index>(it - labels_.begin());
}

std::optional<PiRational> FiniteMetricSpace::exact_distance(Index i, Index j) const {
  if (!polygon_order_) return std::nullopt;
  return PiRational(2 * steps_(i, j), *polygon_order_);
}

bool FiniteMetricSpace::is_simplex() const {
  const Index n = size();
  if (n < 2) return true;
  const double lambda = dist_(0, 1);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      if (i != j && dist_(i, j) != lambda) return false;
  return true;
}

ValidationReport validate(const FiniteMetricSpace& space, bool allow_pseudo) {
  return validate_matrix(space.dist(), allow_pseudo);
}

std::vector<std::string> numbered_labels(Index n, const std::string& prefix) {
  std::vector<std::string> labels;
  labels.reserve(static_cast<std::size_t>(n));
  for (Index i = 1; i <= n; ++i) labels.push_back(prefix + std::to_string(i));
  return labels;
}

namespace {

StepMatrix polygon_step_matrix(int n) {
  StepMatrix steps(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const int gap = std::abs(i - j);
      steps(i, j) = std::min(gap, n - gap);
    }
  return steps;
}

DistanceMatrix polygon_distances(const StepMatrix& steps) {
  const double unit = 2.0 * std::numbers::pi / static_cast<double>(steps.rows());
  return steps.cast<double>() * unit;
}

} // namespace

FiniteMetricSpace regular_polygon(int n, const std::string& prefix) {
  if (n < 2) throw std::domain_error("regular_polygon: n must be at least 2, got " + std::to_string(n));
  StepMatrix steps = polygon_step_matrix(n);
  FiniteMetricSpace space(numbered_labels(n, prefix), polygon_distances(steps));
  space.polygon_order_ = n;
  space.steps_ = std::move(steps);
  return space;
}

std::optional<FiniteMetricSpace> as_polygon(const FiniteMetricSpace& space) {
  if (space.polygon_order_) return space;
  const Index n = space.size();
  if (n < 2 || n > std::numeric_limits<int>::max()) return std::nullopt;
  StepMatrix steps = polygon_step_matrix(static_cast<int>(n));
  if (polygon_distances(steps) != space.dist()) return std::nullopt;
  FiniteMetricSpace copy = space;
  copy.polygon_order_ = static_cast<int>(n);
  copy.steps_ = std::move(steps);
  return copy;
}

FiniteMetricSpace simplex_space(Index m, double lambda, const std::string& prefix) {
  if (m < 1) throw std::domain_error("simplex_space: m must be positive");
  if (!(lambda > 0)) throw std::domain_error("simplex_space: lambda must be positive");
  DistanceMatrix d = DistanceMatrix::Constant(m, m, lambda);
  d.diagonal().setZero();
  return FiniteMetricSpace(numbered_labels(m, prefix), std::move(d));
}

double diam(const FiniteMetricSpace& space) { return diameter(space.dist()); }

double set_distance(const FiniteMetricSpace& space, std::span<const Index> a,
                    std::span<const Index> b) {
  return set_distance(space.dist(), a, b);
}

} // namespace ghpoly
