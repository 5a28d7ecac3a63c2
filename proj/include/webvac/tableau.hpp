#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <vector>

#include "webvac/errors.hpp"

namespace webvac {

/// Rectangular shape: n rows of k columns, N = n*k boxes.
struct Shape {
  int rows = 0;  // n
  int cols = 0;  // k
  int boxes() const { return rows * cols; }
  auto operator<=>(const Shape&) const = default;
};

/// 1-based cell coordinates, row 1 at the top, column 1 at the left.
struct CellRef {
  int row = 0;
  int col = 0;
  auto operator<=>(const CellRef&) const = default;
};

using Grid = std::vector<std::vector<int>>;  // row-major integer grid

/// Standard Young tableau of rectangular shape: a bijective filling with
/// 1..N that strictly increases along rows and down columns.
class StandardTableau {
 public:
  /// Validates a grid and wraps it. Throws NotBijective or NotIncreasing.
  static StandardTableau validate(Grid grid);

  const Shape& shape() const { return shape_; }
  int at(int row, int col) const { return grid_[row - 1][col - 1]; }
  const Grid& grid() const { return grid_; }

  /// Row-major reading word.
  std::vector<int> reading_word() const;

  bool operator==(const StandardTableau&) const = default;

 private:
  StandardTableau(Shape shape, Grid grid)
      : shape_(shape), grid_(std::move(grid)) {}
  Shape shape_;
  Grid grid_;
};

/// Intermediate state of a jeu de taquin slide. Cells hold a positive
/// movable entry, a negative fixed entry, or 0 for the (single) hole.
class SlidingTableau {
 public:
  SlidingTableau(Shape shape, Grid cells);

  const Shape& shape() const { return shape_; }
  int cell(int row, int col) const { return cells_[row - 1][col - 1]; }
  const Grid& cells() const { return cells_; }
  bool has_hole() const;
  CellRef hole() const;  // valid only when has_hole()

  bool operator==(const SlidingTableau&) const = default;

 private:
  Shape shape_;
  Grid cells_;
};

struct SlideResult {
  SlidingTableau state;
  std::vector<CellRef> path;  // cells visited by the hole, first = removed corner
};

/// Removes the entry at `removed_corner` (must be the northwest corner) and
/// slides the hole maximally southeast: at each step the lesser of the right
/// and below neighbors moves in; fixed and absent cells do not participate.
SlideResult jdt_slide_path(const StandardTableau& t, CellRef removed_corner);

/// Remove the NW entry, slide the hole to the SE corner, subtract one from
/// every entry, and write N into the SE corner.
StandardTableau promote(const StandardTableau& t);

/// Iterated remove-slide-fix loop; an involution on standard tableaux.
StandardTableau evacuate(const StandardTableau& t);

/// Entry at (r,c) of the result is t(n+1-r, k+1-c). Not a standard tableau.
Grid rotate180(const StandardTableau& t);

/// Replace every entry i by N+1-i.
Grid complement(Grid grid, int total);

/// Rotate 180 degrees and complement; equals evacuate on rectangles.
StandardTableau evacuate_fast(const StandardTableau& t);

inline constexpr std::uint64_t kDefaultEnumerationBudget = 20000;

/// Number of standard tableaux of the shape (hook length formula).
std::uint64_t count_syt(Shape shape);

/// Calls fn for every standard tableau of the shape, in lexicographic order
/// of row-major reading words. Throws BudgetExceeded if the count exceeds
/// the budget.
void for_each_syt(Shape shape, const std::function<void(const StandardTableau&)>& fn,
                  std::uint64_t budget = kDefaultEnumerationBudget);

/// Materialized enumeration, same order and budget contract as for_each_syt.
std::vector<StandardTableau> enumerate_syt(Shape shape,
                                           std::uint64_t budget = kDefaultEnumerationBudget);

}  // namespace webvac
