#ifndef GHPOLY_PI_RATIONAL_HPP
#define GHPOLY_PI_RATIONAL_HPP

#include <compare>
#include <cstdint>
#include <numbers>
#include <optional>
#include <string>

namespace ghpoly {

/// An exact multiple of pi, q * pi with q = num / den kept in lowest terms.
///
/// Polygon distances and every closed form for p_{n,m} are of this kind, so
/// comparisons between them can be made without rounding.
class PiRational {
public:
  constexpr PiRational() = default;
  PiRational(std::int64_t num, std::int64_t den = 1);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  double coefficient() const { return static_cast<double>(num_) / static_cast<double>(den_); }
  double value() const { return std::numbers::pi * coefficient(); }

  bool is_zero() const { return num_ == 0; }

  /// Recovers q from x = q*pi when q has a denominator of at most max_den.
  static std::optional<PiRational> from_multiple_of_pi(double x, std::int64_t max_den = 10000,
                                                       double tol = 1e-12);

  /// "0", "π", "π/6", "2π/15", "-π/4".
  std::string to_string() const;

  friend PiRational operator+(const PiRational& a, const PiRational& b);
  friend PiRational operator-(const PiRational& a, const PiRational& b);
  friend PiRational operator-(const PiRational& a) { return {-a.num_, a.den_}; }
  friend PiRational operator*(const PiRational& a, std::int64_t k);
  friend PiRational operator*(std::int64_t k, const PiRational& a) { return a * k; }
  friend PiRational operator/(const PiRational& a, std::int64_t k);

  friend bool operator==(const PiRational&, const PiRational&) = default;
  friend std::strong_ordering operator<=>(const PiRational& a, const PiRational& b);

private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

PiRational abs(const PiRational& a);

} // namespace ghpoly

#endif
