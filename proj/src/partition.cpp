#include "ghpoly/partition.hpp"

#include <algorithm>
#include <string>

namespace ghpoly {

Partition::Partition(std::vector<int> block_of, int m) : block_of_(std::move(block_of)), m_(m) {
  if (m_ < 1) throw std::domain_error("Partition: block count must be positive");
  if (static_cast<std::size_t>(m_) > block_of_.size())
    throw std::domain_error("Partition: more blocks than points");
  std::vector<bool> used(static_cast<std::size_t>(m_), false);
  for (int b : block_of_) {
    if (b < 0 || b >= m_)
      throw std::domain_error("Partition: block id " + std::to_string(b) + " out of range");
    used[static_cast<std::size_t>(b)] = true;
  }
  for (int b = 0; b < m_; ++b)
    if (!used[static_cast<std::size_t>(b)])
      throw std::domain_error("Partition: block " + std::to_string(b) + " is empty");
}

Partition Partition::canonical(std::vector<int> block_of) {
  std::vector<int> rename;
  int next = 0;
  for (int& b : block_of) {
    if (b < 0) throw std::domain_error("Partition: negative block id");
    if (static_cast<std::size_t>(b) >= rename.size()) rename.resize(static_cast<std::size_t>(b) + 1, -1);
    int& r = rename[static_cast<std::size_t>(b)];
    if (r < 0) r = next++;
    b = r;
  }
  return Partition(std::move(block_of), next);
}

bool Partition::is_canonical() const {
  int next = 0;
  for (int b : block_of_) {
    if (b > next) return false;
    if (b == next) ++next;
  }
  return true;
}

std::vector<std::vector<Index>> Partition::members() const {
  std::vector<std::vector<Index>> out(static_cast<std::size_t>(m_));
  for (std::size_t i = 0; i < block_of_.size(); ++i)
    out[static_cast<std::size_t>(block_of_[i])].push_back(static_cast<Index>(i));
  return out;
}

double partition_diam(const Partition& part, const FiniteMetricSpace& space) {
  if (part.points() != space.size()) throw std::domain_error("partition_diam: size mismatch");
  return partition_diam(part, space.dist());
}

double partition_alpha(const Partition& part, const FiniteMetricSpace& space) {
  if (part.points() != space.size()) throw std::domain_error("partition_alpha: size mismatch");
  return partition_alpha(part, space.dist());
}

} // namespace ghpoly
