#pragma once

// Torus localization on Hilbert schemes of points of smooth complete toric
// surfaces.  Fixed points are tuples of partitions, one per chart; tangent
// and tautological weights come from the usual arm/leg combinatorics in the
// chart's dual-basis characters.  The generating series
//
//   1 + sum_n chi(Lambda_{-u} E^[n] , Lambda_{-v} F^[n]) Q^n
//
// is assembled coefficient by coefficient as an exact rational function of
// z = (one-parameter subgroup), reduced to a Laurent polynomial and
// evaluated at z = 1.

#include "tautchi/qseries.hpp"
#include "tautchi/toric.hpp"

#include <optional>
#include <vector>

namespace tautchi::hilb {

struct Partition {
  std::vector<int> parts; // weakly decreasing, positive

  int size() const;
  int rows() const { return static_cast<int>(parts.size()); }
  // Boxes are (r, c), 0-based, with 0 <= c < parts[r].
  int arm(int r, int c) const { return parts[static_cast<std::size_t>(r)] - 1 - c; }
  int leg(int r, int c) const;

  friend bool operator==(const Partition&, const Partition&) = default;
};

std::vector<Partition> partitions(int n);

// A monomial ideal per chart.
struct FixedPoint {
  std::vector<Partition> mu;
  int size() const;
  friend bool operator==(const FixedPoint&, const FixedPoint&) = default;
};

// All fixed points of Hilb^n(S), deterministic order.
std::vector<FixedPoint> enumerate_fixed_points(const toric::ToricSurface& S, int n);

// Weights of the fiber of O_Z at the fixed point: -(c) w1 - (r) w2 per box
// (0-based box coordinates).
std::vector<toric::Vec2> oz_character(const Partition& mu, const toric::Chart& chart);

// Ellingsrud-Stromme tangent weights: per box, (a+1) w1 - l w2 and
// -a w1 + (l+1) w2.
std::vector<toric::Vec2> tangent_character(const Partition& mu, const toric::Chart& chart);

// Weights of the fiber of the tautological bundle E^[n]: the bundle's chart
// fiber character (shifted by the equivariant lift twist) plus each O_Z
// weight, concatenated over charts.
std::vector<toric::Vec2> taut_character(const toric::ToricSurface& S,
                                        const toric::ToricLineBundle& E, const FixedPoint& fp,
                                        toric::Vec2 twist = {0, 0});

// <s, w> != 0 for every tangent weight that can occur up to Hilb^order.
bool is_admissible(const toric::ToricSurface& S, int order, const toric::Specialization& s);

// The first (1, b), b = 1, 2, ... that is admissible.
toric::Specialization find_specialization(const toric::ToricSurface& S, int order);

// The full generating series to the given order (coefficient of Q^0 is 1).
// `twist_e`, `twist_f` pick the equivariant lifts E x chi^{twist_e},
// F x chi^{twist_f}; the result is independent of both the twists and the
// specialization.
QSeries hilb_chi_series(const toric::ToricSurface& S, const toric::ToricLineBundle& E,
                        const toric::ToricLineBundle& F, int order,
                        std::optional<toric::Specialization> spec = std::nullopt,
                        toric::Vec2 twist_e = {0, 0}, toric::Vec2 twist_f = {0, 0});

} // namespace tautchi::hilb
