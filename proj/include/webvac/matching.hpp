#pragma once

#include <compare>
#include <string>
#include <vector>

#include "webvac/tableau.hpp"

namespace webvac {

/// Arc above the baseline with start i and end j, i < j.
struct Arc {
  int start = 0;
  int end = 0;
  auto operator<=>(const Arc&) const = default;
};

/// One noncrossing matching per color 1..n-1 on boundary points 1..N.
/// Arcs of different colors may cross; within a layer they may not.
class MulticoloredNcm {
 public:
  /// Validates the layer structure: arcs in 1..N with i < j, disjoint
  /// endpoints and no crossing within each layer, every point covered.
  static MulticoloredNcm create(int n, int boundary_points,
                                std::vector<std::vector<Arc>> layers);

  int rank() const { return n_; }                      // n
  int boundary_count() const { return boundary_; }     // N
  int layer_count() const { return n_ - 1; }
  /// Arcs of the given color (1..n-1), sorted by start point.
  const std::vector<Arc>& layer(int color) const { return layers_[color - 1]; }

  bool operator==(const MulticoloredNcm&) const = default;

 private:
  MulticoloredNcm(int n, int boundary, std::vector<std::vector<Arc>> layers)
      : n_(n), boundary_(boundary), layers_(std::move(layers)) {}
  int n_;
  int boundary_;
  std::vector<std::vector<Arc>> layers_;  // layers_[x-1] holds color x
};

/// Pairs each entry j of row x+1, read left to right, with the rightmost
/// unpaired smaller entry i of row x, giving arc (i,j) of color x.
/// Requires n >= 2.
MulticoloredNcm ncm_from_tableau(const StandardTableau& t);

/// Row x of the rotated grid, read right to left, pairs each entry j with
/// the leftmost unpaired smaller entry i of row x+1, giving arc (i,j) of
/// color x. The input must be the 180-degree rotation of a rectangular
/// standard tableau.
MulticoloredNcm ncm_from_rotated_tableau(const Grid& rotated);

struct StandardRectangularCheck {
  bool ok = true;
  int color = 0;         // layer of the first violating arc
  Arc arc{};             // the violating arc
  int endpoint = 0;      // the offending boundary point
  std::string reason;    // human-readable description
};

/// Checks the shared-endpoint pattern of matchings arising from rectangular
/// standard tableaux; on failure reports the first violation in
/// (layer, start point) order.
StandardRectangularCheck is_standard_rectangular(const MulticoloredNcm& m);

/// Maps every arc (i,j) of color x to (N+1-j, N+1-i) of color n-x.
MulticoloredNcm reflect_ncm(const MulticoloredNcm& m);

/// Inverse of ncm_from_tableau: row 1 = sorted starts of layer 1, row x+1 =
/// sorted ends of layer x. Throws NotStandardRectangular.
StandardTableau tableau_from_ncm(const MulticoloredNcm& m);

}  // namespace webvac
