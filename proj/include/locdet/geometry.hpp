#pragma once

#include <span>

namespace locdet {

struct Position {
  double x = 0.0;
  double y = 0.0;
};

double distance(const Position& a, const Position& b);

/// Twice the signed area of triangle (a, b, c).
double twice_area(const Position& a, const Position& b, const Position& c);

inline constexpr double kCollinearTol = 1e-9;

/// True when the three points lie on one line up to `tol`, comparing the
/// unsigned twice-area against tol * max(1, largest pairwise length product)
/// so the test is scale-free and symmetric under point permutations.
bool is_collinear(const Position& a, const Position& b, const Position& c,
                  double tol = kCollinearTol);

/// True when every triple of the given points is collinear (fewer than three
/// points count as collinear).
bool all_collinear(std::span<const Position> pts, double tol = kCollinearTol);

}  // namespace locdet
