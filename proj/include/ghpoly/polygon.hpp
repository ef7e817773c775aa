#ifndef GHPOLY_POLYGON_HPP
#define GHPOLY_POLYGON_HPP

#include <optional>
#include <string>

#include "ghpoly/correspondence.hpp"
#include "ghpoly/partition.hpp"

namespace ghpoly {

/// Which closed form produced a value of p_{n,m} = d_GH(P_n, P_m).
enum class PolygonRule {
  divisible,    // n | m: π/n − π/m
  two_gon,      // n = 2
  three_gon,    // n = 3
  consecutive,  // m = n + 1: π/(n+1)
  circle,       // d_GH(S¹, P_m) = π/m
};

std::string to_string(PolygonRule rule);

struct ClosedFormAnswer {
  int n = 0;  // normalized so that n <= m
  int m = 0;
  std::optional<PiRational> value;
  std::optional<PolygonRule> rule;

  bool applicable() const { return value.has_value(); }
};

/// Closed form for p_{n,m}, if one is known. Rules are tried in the order
/// divisible, two_gon, three_gon, consecutive; all that apply must agree
/// (std::logic_error otherwise). Throws std::domain_error for n or m < 2.
ClosedFormAnswer closed_form(int n, int m);

/// d_GH(S¹, P_m) = π/m. A known constant; the circle itself is never built.
PiRational circle_distance(int m);

/// The correspondence between P_n and P_{pn} that relates u_i with
/// v_{pi-k}, k = 0..p-1 (1-based vertex numbers). Its distortion is
/// 2(p−1)π/(pn).
Correspondence divisible_correspondence(int n, int p);

/// |min(|i−j|, n−|i−j|) − min(|i−j+(k−l)/p|, n−|i−j+(k−l)/p|)| for
/// i, j in 1..n and k, l in 0..p−1. Evaluated exactly, scaled by p.
double lemma_gap(int n, int p, int i, int j, int k, int l);

/// Three runs of consecutive vertices of P_m with sizes (q, q, q), (q, q, q+1)
/// or (q, q+1, q+1) for m = 3q + r. Needs m >= 3.
Partition three_arc_partition(int m);

} // namespace ghpoly

#endif
