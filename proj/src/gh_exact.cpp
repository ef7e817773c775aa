#include "ghpoly/gh_exact.hpp"

#include <algorithm>
#include <atomic>
#include <cassert>
#include <limits>
#include <stdexcept>
#include <thread>

namespace ghpoly {

std::string to_string(BoundKind kind) {
  switch (kind) {
    case BoundKind::exact: return "exact";
    case BoundKind::lower: return "lower";
    case BoundKind::upper: return "upper";
  }
  return "unknown";
}

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Branch and bound over f: A → B followed by g on the points of B that f
// leaves uncovered. A is the smaller space.
class CorrespondenceSearch {
public:
  CorrespondenceSearch(const DistanceMatrix& a, const DistanceMatrix& b, double bound, double eps,
                       std::uint64_t budget, std::atomic<std::uint64_t>& nodes)
      : a_(a), b_(b), n_(a.rows()), m_(b.rows()), eps_(eps), bound_(bound), budget_(budget),
        nodes_(nodes), f_(static_cast<std::size_t>(n_), -1), g_(static_cast<std::size_t>(m_), -1),
        cover_(static_cast<std::size_t>(m_), 0) {
    pairs_.reserve(static_cast<std::size_t>(n_ + m_));
  }

  /// Explores the subtree with f(0) restricted to [first_lo, first_hi).
  void run(Index first_lo, Index first_hi) {
    lo_ = first_lo;
    hi_ = first_hi;
    assign_f(0, 0.0);
  }

  bool found() const { return found_; }
  bool aborted() const { return aborted_; }
  double best() const { return best_; }
  double bound() const { return bound_; }
  double frontier() const { return frontier_; }
  const std::vector<IndexPair>& best_pairs() const { return best_pairs_; }

private:
  bool admissible(double d) const { return found_ ? d < best_ - eps_ : d <= bound_ + eps_; }

  // Partial distortion after adding (i, j); stops early once `limit` is passed.
  double extend(Index i, Index j, double cur, double limit) const {
    for (const auto& [k, l] : pairs_) {
      cur = std::max(cur, std::abs(a_(i, k) - b_(j, l)));
      if (cur > limit) break;
    }
    return cur;
  }

  double limit() const { return found_ ? best_ - eps_ : bound_ + eps_; }

  // Returns false once the budget is gone; the caller then only sweeps siblings.
  bool charge() {
    if (nodes_.fetch_add(1, std::memory_order_relaxed) + 1 > budget_) {
      aborted_ = true;
      return false;
    }
    return true;
  }

  void assign_f(Index i, double cur) {
    if (i == n_) {
      assign_g(0, cur);
      return;
    }
    const Index lo = i == 0 ? lo_ : 0;
    const Index hi = i == 0 ? hi_ : m_;
    for (Index j = lo; j < hi; ++j) {
      if (aborted_) {
        frontier_ = std::min(frontier_, extend(i, j, cur, kInf));
        continue;
      }
      const double d = extend(i, j, cur, limit());
      if (!admissible(d)) continue;
      if (!charge()) {
        frontier_ = std::min(frontier_, d);
        continue;
      }
      push(i, j);
      f_[static_cast<std::size_t>(i)] = j;
      ++cover_[static_cast<std::size_t>(j)];
      assign_f(i + 1, d);
      --cover_[static_cast<std::size_t>(j)];
      f_[static_cast<std::size_t>(i)] = -1;
      pairs_.pop_back();
    }
  }

  void assign_g(Index j, double cur) {
    while (j < m_ && cover_[static_cast<std::size_t>(j)] > 0) ++j;
    if (j == m_) {
      leaf(cur);
      return;
    }
    for (Index i = 0; i < n_; ++i) {
      if (aborted_) {
        frontier_ = std::min(frontier_, extend(i, j, cur, kInf));
        continue;
      }
      const double d = extend(i, j, cur, limit());
      if (!admissible(d)) continue;
      if (!charge()) {
        frontier_ = std::min(frontier_, d);
        continue;
      }
      push(i, j);
      g_[static_cast<std::size_t>(j)] = i;
      assign_g(j + 1, d);
      g_[static_cast<std::size_t>(j)] = -1;
      pairs_.pop_back();
    }
  }

  void leaf(double cur) {
#ifndef NDEBUG
    for (Index j = 0; j < m_; ++j)
      assert(cover_[static_cast<std::size_t>(j)] > 0 || g_[static_cast<std::size_t>(j)] >= 0);
    for (Index i = 0; i < n_; ++i) assert(f_[static_cast<std::size_t>(i)] >= 0);
#endif
    found_ = true;
    best_ = cur;
    best_pairs_ = pairs_;
  }

  void push(Index i, Index j) { pairs_.emplace_back(i, j); }

  const DistanceMatrix& a_;
  const DistanceMatrix& b_;
  Index n_;
  Index m_;
  double eps_;
  double bound_;
  std::uint64_t budget_;
  std::atomic<std::uint64_t>& nodes_;
  Index lo_ = 0;
  Index hi_ = 0;

  std::vector<Index> f_;
  std::vector<Index> g_;
  std::vector<int> cover_;
  std::vector<IndexPair> pairs_;

  bool found_ = false;
  bool aborted_ = false;
  double best_ = kInf;
  double frontier_ = kInf;
  std::vector<IndexPair> best_pairs_;
};

struct BranchOutcome {
  bool found = false;
  bool aborted = false;
  double best = kInf;
  double frontier = kInf;
  std::vector<IndexPair> pairs;
};

BranchOutcome outcome_of(const CorrespondenceSearch& s) {
  return {s.found(), s.aborted(), s.best(), s.frontier(), s.best_pairs()};
}

std::vector<double> sorted_row(const DistanceMatrix& d, Index i) {
  std::vector<double> row;
  row.reserve(static_cast<std::size_t>(d.cols()));
  for (Index j = 0; j < d.cols(); ++j) row.push_back(d(i, j));
  std::sort(row.begin(), row.end());
  return row;
}

double profile_gap(const std::vector<double>& p, const std::vector<double>& q) {
  const std::size_t k = std::max(p.size(), q.size());
  if (k <= 1) return std::abs(p.front() - q.front());
  double worst = 0;
  for (std::size_t t = 0; t < k; ++t) {
    const double a = p[t * (p.size() - 1) / (k - 1)];
    const double b = q[t * (q.size() - 1) / (k - 1)];
    worst = std::max(worst, std::abs(a - b));
  }
  return worst;
}

} // namespace

Correspondence arc_seed(const FiniteMetricSpace& x, const FiniteMetricSpace& y) {
  if (!x.polygon_order() || !y.polygon_order())
    throw std::domain_error("arc_seed: both spaces must be regular polygons");
  const Index n = x.size();
  const Index m = y.size();
  std::vector<IndexPair> pairs;
  if (n <= m) {
    for (Index j = 0; j < m; ++j) pairs.emplace_back(j * n / m, j);
  } else {
    for (Index i = 0; i < n; ++i) pairs.emplace_back(i, i * m / n);
  }
  return Correspondence(n, m, std::move(pairs));
}

Correspondence profile_seed(const FiniteMetricSpace& x, const FiniteMetricSpace& y) {
  std::vector<std::vector<double>> px, py;
  for (Index i = 0; i < x.size(); ++i) px.push_back(sorted_row(x.dist(), i));
  for (Index j = 0; j < y.size(); ++j) py.push_back(sorted_row(y.dist(), j));
  std::vector<IndexPair> pairs;
  for (Index i = 0; i < x.size(); ++i) {
    Index arg = 0;
    double best = kInf;
    for (Index j = 0; j < y.size(); ++j) {
      const double gap = profile_gap(px[static_cast<std::size_t>(i)], py[static_cast<std::size_t>(j)]);
      if (gap < best) {
        best = gap;
        arg = j;
      }
    }
    pairs.emplace_back(i, arg);
  }
  for (Index j = 0; j < y.size(); ++j) {
    Index arg = 0;
    double best = kInf;
    for (Index i = 0; i < x.size(); ++i) {
      const double gap = profile_gap(px[static_cast<std::size_t>(i)], py[static_cast<std::size_t>(j)]);
      if (gap < best) {
        best = gap;
        arg = i;
      }
    }
    pairs.emplace_back(arg, j);
  }
  return Correspondence(x.size(), y.size(), std::move(pairs));
}

Correspondence default_seed(const FiniteMetricSpace& x, const FiniteMetricSpace& y) {
  if (x.polygon_order() && y.polygon_order()) return arc_seed(x, y);
  return profile_seed(x, y);
}

GHResult gh_lower_diameter(const FiniteMetricSpace& x, const FiniteMetricSpace& y) {
  GHResult r;
  r.value = 0.5 * std::abs(diam(x) - diam(y));
  r.bound = BoundKind::lower;
  r.method = "diam-lower";
  return r;
}

GHResult gh_bruteforce(const FiniteMetricSpace& x, const FiniteMetricSpace& y,
                       const SearchOptions& options) {
  const bool swap = x.size() > y.size();
  const FiniteMetricSpace& a = swap ? y : x;
  const FiniteMetricSpace& b = swap ? x : y;

  Correspondence seed = options.seed ? *options.seed : default_seed(x, y);
  if (seed.x_size() != x.size() || seed.y_size() != y.size())
    throw std::domain_error("gh_bruteforce: seed correspondence does not match the spaces");
  const double seed_dis = distortion(seed, x, y);
  const double eps = 1e-12 * std::max({1.0, diam(x), diam(y)});

  std::atomic<std::uint64_t> nodes{0};
  const Index m = b.size();
  std::vector<BranchOutcome> outcomes;

  const unsigned threads = std::max(1u, std::min<unsigned>(options.threads, static_cast<unsigned>(m)));
  if (threads == 1) {
    CorrespondenceSearch search(a.dist(), b.dist(), seed_dis, eps, options.budget, nodes);
    search.run(0, m);
    outcomes.push_back(outcome_of(search));
  } else {
    // One independent search per choice of f(0), so the joined result does
    // not depend on scheduling.
    outcomes.resize(static_cast<std::size_t>(m));
    std::atomic<Index> next{0};
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) {
      pool.emplace_back([&] {
        for (Index j = next++; j < m; j = next++) {
          CorrespondenceSearch search(a.dist(), b.dist(), seed_dis, eps, options.budget, nodes);
          search.run(j, j + 1);
          outcomes[static_cast<std::size_t>(j)] = outcome_of(search);
        }
      });
    }
    pool.clear();
  }

  bool aborted = false;
  double lowest = kInf;
  for (const auto& o : outcomes) {
    aborted = aborted || o.aborted;
    if (o.found) lowest = std::min(lowest, o.best);
  }
  const BranchOutcome* chosen = nullptr;
  for (const auto& o : outcomes) {
    if (o.found && o.best <= lowest + eps) {
      chosen = &o;
      break;
    }
  }

  auto orient = [&](const std::vector<IndexPair>& internal) {
    std::vector<IndexPair> pairs;
    pairs.reserve(internal.size());
    for (const auto& [i, j] : internal) pairs.push_back(swap ? IndexPair{j, i} : IndexPair{i, j});
    return Correspondence(x.size(), y.size(), std::move(pairs));
  };

  GHResult result;
  result.method = "exact";
  result.nodes = std::min<std::uint64_t>(nodes.load(), options.budget);

  if (aborted) {
    // Unexplored subtrees are bounded below by their frontier partial
    // distortion; fully explored branches by what they found or by the seed.
    double lb = kInf;
    for (const auto& o : outcomes) {
      lb = std::min({lb, o.frontier, o.found ? o.best : seed_dis});
    }
    result.bound = BoundKind::upper;
    result.exhausted = true;
    if (chosen && chosen->best < seed_dis) {
      result.witness = orient(chosen->pairs);
      result.value = 0.5 * chosen->best;
    } else {
      result.witness = seed;
      result.value = 0.5 * seed_dis;
    }
    result.lower_bound = std::max(0.5 * lb, gh_lower_diameter(x, y).value);
    return result;
  }

  if (!chosen) throw std::logic_error("gh_bruteforce: search found no correspondence under the seed bound");
  Correspondence witness = orient(chosen->pairs);
  result.value = 0.5 * chosen->best;
  result.bound = BoundKind::exact;
  if (auto e = exact_distortion(witness, x, y)) result.exact = *e / 2;
  result.witness = std::move(witness);
  return result;
}

} // namespace ghpoly
