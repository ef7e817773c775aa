#include "ghpoly/pi_rational.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace ghpoly {

PiRational::PiRational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::domain_error("PiRational: zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num, den);
  num_ = num / g;
  den_ = den / g;
}

std::optional<PiRational> PiRational::from_multiple_of_pi(double x, std::int64_t max_den,
                                                          double tol) {
  const double q = x / std::numbers::pi;
  // Smallest denominator wins, which is what makes the recovery unique.
  for (std::int64_t den = 1; den <= max_den; ++den) {
    const double scaled = q * static_cast<double>(den);
    const double num = std::round(scaled);
    if (std::abs(scaled - num) <= tol * static_cast<double>(den) * std::max(1.0, std::abs(q))) {
      return PiRational(static_cast<std::int64_t>(num), den);
    }
  }
  return std::nullopt;
}

std::string PiRational::to_string() const {
  if (num_ == 0) return "0";
  std::string s = num_ < 0 ? "-" : "";
  const std::int64_t a = num_ < 0 ? -num_ : num_;
  if (a != 1) s += std::to_string(a);
  s += "π";
  if (den_ != 1) s += "/" + std::to_string(den_);
  return s;
}

PiRational operator+(const PiRational& a, const PiRational& b) {
  const std::int64_t l = std::lcm(a.den_, b.den_);
  return {a.num_ * (l / a.den_) + b.num_ * (l / b.den_), l};
}

PiRational operator-(const PiRational& a, const PiRational& b) { return a + (-b); }

PiRational operator*(const PiRational& a, std::int64_t k) { return {a.num_ * k, a.den_}; }

PiRational operator/(const PiRational& a, std::int64_t k) { return {a.num_, a.den_ * k}; }

std::strong_ordering operator<=>(const PiRational& a, const PiRational& b) {
  return a.num_ * b.den_ <=> b.num_ * a.den_;
}

PiRational abs(const PiRational& a) { return a.num() < 0 ? -a : a; }

} // namespace ghpoly
