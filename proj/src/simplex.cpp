#include "ghpoly/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace ghpoly {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

class PartitionSearch {
public:
  PartitionSearch(const DistanceMatrix& d, int m, double lambda, double floor_term, double bound,
                  double eps, std::uint64_t budget)
      : d_(d), n_(d.rows()), m_(m), lambda_(lambda), floor_(floor_term), bound_(bound), eps_(eps),
        budget_(budget), block_(static_cast<std::size_t>(n_), -1) {}

  void run() {
    // Point 0 always opens block 0.
    block_[0] = 0;
    ++nodes_;
    descend(1, 1, 0.0, kInf);
  }

  bool found() const { return found_; }
  bool aborted() const { return aborted_; }
  double best() const { return best_; }
  double frontier() const { return frontier_; }
  std::uint64_t nodes() const { return nodes_; }
  const std::vector<int>& best_blocks() const { return best_blocks_; }

private:
  double objective(double diam, double alpha) const {
    return std::max({diam, lambda_ - alpha, floor_});
  }

  bool admissible(double v) const { return found_ ? v < best_ - eps_ : v <= bound_ + eps_; }

  void descend(Index i, int used, double diam, double alpha) {
    if (i == n_) {
      found_ = true;
      best_ = objective(diam, alpha);
      best_blocks_ = block_;
      return;
    }
    const Index remaining = n_ - i;
    const int last = std::min(used, m_ - 1);
    for (int b = 0; b <= last; ++b) {
      const int now_used = b == used ? used + 1 : used;
      if (remaining - 1 < m_ - now_used) continue;
      double di = diam;
      double al = alpha;
      for (Index k = 0; k < i; ++k) {
        if (block_[static_cast<std::size_t>(k)] == b) di = std::max(di, d_(i, k));
        else al = std::min(al, d_(i, k));
      }
      const double v = objective(di, al);
      if (aborted_) {
        frontier_ = std::min(frontier_, v);
        continue;
      }
      if (!admissible(v)) continue;
      if (++nodes_ > budget_) {
        aborted_ = true;
        frontier_ = std::min(frontier_, v);
        continue;
      }
      block_[static_cast<std::size_t>(i)] = b;
      descend(i + 1, now_used, di, al);
      block_[static_cast<std::size_t>(i)] = -1;
    }
  }

  const DistanceMatrix& d_;
  Index n_;
  int m_;
  double lambda_;
  double floor_;
  double bound_;
  double eps_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::vector<int> block_;

  bool found_ = false;
  bool aborted_ = false;
  double best_ = kInf;
  double frontier_ = kInf;
  std::vector<int> best_blocks_;
};

// Partitions of 0..n-1 into m runs of consecutive indices; stops after `cap`.
template <typename Visit>
void for_each_consecutive(Index n, int m, std::uint64_t cap, Visit visit) {
  std::vector<int> blocks(static_cast<std::size_t>(n));
  std::vector<Index> cuts(static_cast<std::size_t>(m - 1));
  for (int c = 0; c < m - 1; ++c) cuts[static_cast<std::size_t>(c)] = c + 1;
  std::uint64_t seen = 0;
  while (seen++ < cap) {
    int b = 0;
    for (Index i = 0; i < n; ++i) {
      while (b < m - 1 && cuts[static_cast<std::size_t>(b)] == i) ++b;
      blocks[static_cast<std::size_t>(i)] = b;
    }
    visit(blocks);
    int c = m - 2;
    while (c >= 0 && cuts[static_cast<std::size_t>(c)] == n - (m - 1 - c)) --c;
    if (c < 0) return;
    ++cuts[static_cast<std::size_t>(c)];
    for (int k = c + 1; k < m - 1; ++k) cuts[static_cast<std::size_t>(k)] = cuts[static_cast<std::size_t>(k - 1)] + 1;
  }
}

std::optional<PiRational> exact_objective(const Partition& part, const SimplexSpec& s,
                                          const FiniteMetricSpace& x) {
  if (!x.polygon_order()) return std::nullopt;
  const auto lambda = PiRational::from_multiple_of_pi(s.lambda());
  if (!lambda) return std::nullopt;
  const Index n = x.size();
  const PiRational unit(2, *x.polygon_order());
  std::int64_t diam = 0;
  std::int64_t alpha = std::numeric_limits<std::int64_t>::max();
  std::int64_t whole = 0;
  for (Index i = 0; i < n; ++i)
    for (Index j = i + 1; j < n; ++j) {
      const std::int64_t step = x.polygon_steps()(i, j);
      whole = std::max(whole, step);
      if (part.block_of(i) == part.block_of(j)) diam = std::max(diam, step);
      else alpha = std::min(alpha, step);
    }
  return std::max({unit * diam, *lambda - unit * alpha, unit * whole - *lambda});
}

} // namespace

SimplexSpec::SimplexSpec(Index m, double lambda) : m_(m), lambda_(lambda) {
  if (m < 2) throw std::domain_error("simplex: m must be at least 2, got " + std::to_string(m));
  if (!(lambda > 0) || !std::isfinite(lambda)) throw std::domain_error("simplex: lambda must be positive");
}

FiniteMetricSpace SimplexSpec::materialize(const std::string& prefix) const {
  return simplex_space(m_, lambda_, prefix);
}

PartitionStream::PartitionStream(Index n, int m) : rgs_(static_cast<std::size_t>(std::max<Index>(n, 0)), 0), m_(m) {
  if (n < 1 || m < 1 || m > n)
    throw std::domain_error("enumerate_partitions: need 1 <= m <= n, got n=" + std::to_string(n) +
                            ", m=" + std::to_string(m));
}

bool PartitionStream::advance() {
  const auto n = static_cast<int>(rgs_.size());
  if (!started_) {
    started_ = true;
    std::fill(rgs_.begin(), rgs_.end(), 0);
    for (int b = 1; b < m_; ++b) rgs_[static_cast<std::size_t>(n - m_ + b)] = b;
    return true;
  }
  std::vector<int> prefix_max(static_cast<std::size_t>(n));
  prefix_max[0] = rgs_[0];
  for (int i = 1; i < n; ++i)
    prefix_max[static_cast<std::size_t>(i)] = std::max(prefix_max[static_cast<std::size_t>(i - 1)], rgs_[static_cast<std::size_t>(i)]);
  for (int i = n - 1; i >= 1; --i) {
    const int before = prefix_max[static_cast<std::size_t>(i - 1)];
    const int v = rgs_[static_cast<std::size_t>(i)] + 1;
    if (v > before + 1 || v > m_ - 1) continue;
    const int top = std::max(before, v);
    const int need = m_ - 1 - top;
    if (n - 1 - i < need) continue;
    rgs_[static_cast<std::size_t>(i)] = v;
    for (int k = i + 1; k < n; ++k) rgs_[static_cast<std::size_t>(k)] = 0;
    for (int b = 0; b < need; ++b) rgs_[static_cast<std::size_t>(n - need + b)] = top + 1 + b;
    return true;
  }
  return false;
}

std::optional<Partition> PartitionStream::next() {
  if (done_) return std::nullopt;
  if (!advance()) {
    done_ = true;
    return std::nullopt;
  }
  return Partition(rgs_, m_);
}

PartitionStream enumerate_partitions(Index n, int m) { return PartitionStream(n, m); }

double partition_objective(const Partition& part, const SimplexSpec& s, const FiniteMetricSpace& x) {
  if (part.points() != x.size()) throw std::domain_error("partition_objective: size mismatch");
  if (part.blocks() != s.m()) throw std::domain_error("partition_objective: block count differs from m");
  return std::max({partition_diam(part, x.dist()), s.lambda() - partition_alpha(part, x.dist()),
                   diam(x) - s.lambda()});
}

GHResult simplex_distance(const SimplexSpec& s, const FiniteMetricSpace& x,
                          const SimplexOptions& options) {
  if (x.size() < 2) throw std::domain_error("simplex_distance: target must have more than one point");
  if (s.m() > x.size())
    throw std::domain_error("simplex_distance: m = " + std::to_string(s.m()) + " exceeds #X = " +
                            std::to_string(x.size()));
  const int m = static_cast<int>(s.m());
  const double floor_term = diam(x) - s.lambda();
  const double eps = 1e-12 * std::max({1.0, diam(x), s.lambda()});

  double bound = kInf;
  if (options.consecutive_seed && x.polygon_order()) {
    for_each_consecutive(x.size(), m, 200'000, [&](const std::vector<int>& blocks) {
      const Partition part(blocks, m);
      bound = std::min(bound, partition_objective(part, s, x));
    });
  }

  PartitionSearch search(x.dist(), m, s.lambda(), floor_term, bound, eps, options.budget);
  search.run();

  GHResult result;
  result.method = "simplex";
  result.nodes = std::min(search.nodes(), options.budget);
  if (search.aborted()) {
    result.exhausted = true;
    result.bound = BoundKind::upper;
    const double upper = search.found() ? search.best() : bound;
    result.value = 0.5 * upper;
    if (search.found()) result.witness = Partition(search.best_blocks(), m);
    const double lb = std::min({search.frontier(), upper});
    result.lower_bound = 0.5 * std::max(lb, floor_term);
    return result;
  }
  if (!search.found()) throw std::logic_error("simplex_distance: search found no partition under the seed bound");
  Partition witness(search.best_blocks(), m);
  result.value = 0.5 * search.best();
  result.bound = BoundKind::exact;
  if (auto e = exact_objective(witness, s, x)) result.exact = *e / 2;
  result.witness = std::move(witness);
  return result;
}

} // namespace ghpoly
