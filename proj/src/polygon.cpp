#include "ghpoly/polygon.hpp"

#include <cstdlib>
#include <stdexcept>
#include <vector>

namespace ghpoly {

std::string to_string(PolygonRule rule) {
  switch (rule) {
    case PolygonRule::divisible: return "divisible";
    case PolygonRule::two_gon: return "p2";
    case PolygonRule::three_gon: return "p3";
    case PolygonRule::consecutive: return "consecutive";
    case PolygonRule::circle: return "circle";
  }
  return "unknown";
}

namespace {

std::optional<PiRational> apply(PolygonRule rule, int n, int m) {
  switch (rule) {
    case PolygonRule::divisible:
      if (m % n != 0) return std::nullopt;
      return PiRational(1, n) - PiRational(1, m);
    case PolygonRule::two_gon:
      if (n != 2) return std::nullopt;
      return m % 2 == 1 ? PiRational(1, 2) - PiRational(1, 2 * m) : PiRational(1, 2) - PiRational(1, m);
    case PolygonRule::three_gon: {
      if (n != 3) return std::nullopt;
      const int r = m % 3;
      return r == 0 ? PiRational(1, 3) - PiRational(1, m) : PiRational(1, 3) - PiRational(r, 3 * m);
    }
    case PolygonRule::consecutive:
      if (m != n + 1) return std::nullopt;
      return PiRational(1, n + 1);
    case PolygonRule::circle:
      return std::nullopt;
  }
  return std::nullopt;
}

} // namespace

ClosedFormAnswer closed_form(int n, int m) {
  if (n < 2 || m < 2)
    throw std::domain_error("closed_form: polygon sizes must be at least 2, got (" + std::to_string(n) +
                            ", " + std::to_string(m) + ")");
  if (n > m) std::swap(n, m);
  ClosedFormAnswer answer;
  answer.n = n;
  answer.m = m;
  for (PolygonRule rule : {PolygonRule::divisible, PolygonRule::two_gon, PolygonRule::three_gon,
                           PolygonRule::consecutive}) {
    const auto v = apply(rule, n, m);
    if (!v) continue;
    if (!answer.value) {
      answer.value = v;
      answer.rule = rule;
    } else if (*answer.value != *v) {
      throw std::logic_error("closed_form: rules " + to_string(*answer.rule) + " and " + to_string(rule) +
                             " disagree for (" + std::to_string(n) + ", " + std::to_string(m) + "): " +
                             answer.value->to_string() + " vs " + v->to_string());
    }
  }
  return answer;
}

PiRational circle_distance(int m) {
  if (m < 2) throw std::domain_error("circle_distance: m must be at least 2");
  return {1, m};
}

Correspondence divisible_correspondence(int n, int p) {
  if (n < 2) throw std::domain_error("divisible_correspondence: n must be at least 2");
  if (p < 1) throw std::domain_error("divisible_correspondence: p must be positive");
  std::vector<IndexPair> pairs;
  for (int i = 1; i <= n; ++i)
    for (int k = 0; k < p; ++k) pairs.emplace_back(i - 1, p * i - k - 1);
  return Correspondence(n, static_cast<Index>(p) * n, std::move(pairs));
}

double lemma_gap(int n, int p, int i, int j, int k, int l) {
  if (n < 2 || p < 1) throw std::domain_error("lemma_gap: need n >= 2 and p >= 1");
  if (i < 1 || i > n || j < 1 || j > n) throw std::domain_error("lemma_gap: i, j must lie in 1..n");
  if (k < 0 || k >= p || l < 0 || l >= p) throw std::domain_error("lemma_gap: k, l must lie in 0..p-1");
  const long long d = std::llabs(static_cast<long long>(i) - j);
  const long long lhs = static_cast<long long>(p) * std::min<long long>(d, n - d);
  const long long t = std::llabs(static_cast<long long>(p) * (i - j) + (k - l));
  const long long rhs = std::min<long long>(t, static_cast<long long>(p) * n - t);
  return static_cast<double>(std::llabs(lhs - rhs)) / static_cast<double>(p);
}

Partition three_arc_partition(int m) {
  if (m < 3) throw std::domain_error("three_arc_partition: m must be at least 3");
  const int q = m / 3;
  const int r = m % 3;
  const int first = q;
  const int second = r == 2 ? q + 1 : q;
  std::vector<int> blocks(static_cast<std::size_t>(m));
  for (int v = 0; v < m; ++v) blocks[static_cast<std::size_t>(v)] = v < first ? 0 : v < first + second ? 1 : 2;
  return Partition(std::move(blocks), 3);
}

} // namespace ghpoly
