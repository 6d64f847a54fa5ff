#include "locdet/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace locdet {

double distance(const Position& a, const Position& b) {
  return std::hypot(a.x - b.x, a.y - b.y);
}

double twice_area(const Position& a, const Position& b, const Position& c) {
  return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
}

bool is_collinear(const Position& a, const Position& b, const Position& c,
                  double tol) {
  if (tol < 0.0) throw std::invalid_argument("is_collinear: tol must be >= 0");
  const double ab = distance(a, b);
  const double ac = distance(a, c);
  const double bc = distance(b, c);
  const double scale =
      std::max({1.0, ab * ac, ab * bc, ac * bc});
  return std::fabs(twice_area(a, b, c)) < tol * scale;
}

bool all_collinear(std::span<const Position> pts, double tol) {
  const std::size_t n = pts.size();
  if (n < 3) return true;
  // Anchor on the two farthest-apart points for numeric stability.
  std::size_t i0 = 0, i1 = 1;
  double best = -1.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const double d = distance(pts[i], pts[j]);
      if (d > best) {
        best = d;
        i0 = i;
        i1 = j;
      }
    }
  if (best == 0.0) return true;  // all points coincide
  for (std::size_t k = 0; k < n; ++k) {
    if (k == i0 || k == i1) continue;
    if (!is_collinear(pts[i0], pts[i1], pts[k], tol)) return false;
  }
  return true;
}

}  // namespace locdet
