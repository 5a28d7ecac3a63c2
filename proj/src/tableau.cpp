#include "webvac/tableau.hpp"

#include <algorithm>
#include <sstream>

namespace webvac {

namespace {

Shape shape_of(const Grid& grid) {
  if (grid.empty() || grid[0].empty())
    throw Error("grid must have at least one row and one column");
  Shape s{static_cast<int>(grid.size()), static_cast<int>(grid[0].size())};
  for (const auto& row : grid)
    if (static_cast<int>(row.size()) != s.cols)
      throw Error("grid rows must all have the same length");
  return s;
}

std::string cell_str(int row, int col) {
  std::ostringstream os;
  os << "(" << row << "," << col << ")";
  return os.str();
}

}  // namespace

StandardTableau StandardTableau::validate(Grid grid) {
  Shape shape = shape_of(grid);
  const int total = shape.boxes();
  std::vector<char> seen(total + 1, 0);
  for (const auto& row : grid)
    for (int v : row) {
      if (v < 1 || v > total || seen[v]) {
        std::ostringstream os;
        os << "entries are not a bijection onto 1.." << total;
        throw NotBijective(os.str());
      }
      seen[v] = 1;
    }
  for (int r = 1; r <= shape.rows; ++r)
    for (int c = 1; c <= shape.cols; ++c) {
      int v = grid[r - 1][c - 1];
      if (c > 1 && grid[r - 1][c - 2] >= v)
        throw NotIncreasing("row not increasing at " + cell_str(r, c), r, c);
      if (r > 1 && grid[r - 2][c - 1] >= v)
        throw NotIncreasing("column not increasing at " + cell_str(r, c), r, c);
    }
  return StandardTableau(shape, std::move(grid));
}

std::vector<int> StandardTableau::reading_word() const {
  std::vector<int> word;
  word.reserve(shape_.boxes());
  for (const auto& row : grid_) word.insert(word.end(), row.begin(), row.end());
  return word;
}

SlidingTableau::SlidingTableau(Shape shape, Grid cells)
    : shape_(shape), cells_(std::move(cells)) {
  int holes = 0;
  for (const auto& row : cells_)
    for (int v : row)
      if (v == 0) ++holes;
  if (holes > 1) throw Error("sliding tableau has more than one hole");
}

bool SlidingTableau::has_hole() const {
  for (const auto& row : cells_)
    for (int v : row)
      if (v == 0) return true;
  return false;
}

CellRef SlidingTableau::hole() const {
  for (int r = 1; r <= shape_.rows; ++r)
    for (int c = 1; c <= shape_.cols; ++c)
      if (cells_[r - 1][c - 1] == 0) return {r, c};
  throw Error("sliding tableau has no hole");
}

namespace {

// Slides the hole at `hole` maximally southeast. Entries <= 0 are fixed or
// absent and never move. Returns the cells the hole visited.
std::vector<CellRef> slide_hole(Grid& cells, Shape shape, CellRef hole) {
  std::vector<CellRef> path{hole};
  for (;;) {
    int r = hole.row, c = hole.col;
    int right = (c < shape.cols) ? cells[r - 1][c] : 0;
    int below = (r < shape.rows) ? cells[r][c - 1] : 0;
    CellRef from;
    if (right > 0 && below > 0) {
      if (right == below) throw Error("jdt tie: grid is not a bijective filling");
      from = (right < below) ? CellRef{r, c + 1} : CellRef{r + 1, c};
    } else if (right > 0) {
      from = {r, c + 1};
    } else if (below > 0) {
      from = {r + 1, c};
    } else {
      return path;
    }
    cells[hole.row - 1][hole.col - 1] = cells[from.row - 1][from.col - 1];
    cells[from.row - 1][from.col - 1] = 0;
    hole = from;
    path.push_back(hole);
  }
}

}  // namespace

SlideResult jdt_slide_path(const StandardTableau& t, CellRef removed_corner) {
  if (removed_corner != CellRef{1, 1})
    throw Error("jdt_slide_path removes the northwest corner");
  Grid cells = t.grid();
  cells[0][0] = 0;
  auto path = slide_hole(cells, t.shape(), {1, 1});
  return {SlidingTableau(t.shape(), std::move(cells)), std::move(path)};
}

StandardTableau promote(const StandardTableau& t) {
  const Shape shape = t.shape();
  Grid cells = t.grid();
  cells[0][0] = 0;
  slide_hole(cells, shape, {1, 1});
  for (auto& row : cells)
    for (int& v : row) --v;
  // hole (now -1) is at the SE corner of a full rectangle
  if (cells[shape.rows - 1][shape.cols - 1] != -1)
    throw Error("promotion slide did not reach the southeast corner");
  cells[shape.rows - 1][shape.cols - 1] = shape.boxes();
  return StandardTableau::validate(std::move(cells));
}

StandardTableau evacuate(const StandardTableau& t) {
  const Shape shape = t.shape();
  const int total = shape.boxes();
  Grid cells = t.grid();
  for (int step = 0; step < total; ++step) {
    int removed = cells[0][0];
    if (removed <= 0) throw Error("evacuation expects a movable NW entry");
    cells[0][0] = 0;
    auto path = slide_hole(cells, shape, {1, 1});
    CellRef rest = path.back();
    cells[rest.row - 1][rest.col - 1] = -removed;
  }
  for (auto& row : cells)
    for (int& v : row) v += total + 1;
  return StandardTableau::validate(std::move(cells));
}

Grid rotate180(const StandardTableau& t) {
  const Shape shape = t.shape();
  Grid out(shape.rows, std::vector<int>(shape.cols));
  for (int r = 1; r <= shape.rows; ++r)
    for (int c = 1; c <= shape.cols; ++c)
      out[r - 1][c - 1] = t.at(shape.rows + 1 - r, shape.cols + 1 - c);
  return out;
}

Grid complement(Grid grid, int total) {
  for (auto& row : grid)
    for (int& v : row) v = total + 1 - v;
  return grid;
}

StandardTableau evacuate_fast(const StandardTableau& t) {
  return StandardTableau::validate(complement(rotate180(t), t.shape().boxes()));
}

std::uint64_t count_syt(Shape shape) {
  if (shape.rows < 1 || shape.cols < 1) throw Error("shape must be positive");
  const int total = shape.boxes();
  unsigned __int128 num = 1, den = 1;
  for (int i = 2; i <= total; ++i) {
    if (num > (static_cast<unsigned __int128>(1) << 120))
      throw std::overflow_error("count_syt: shape too large");
    num *= static_cast<unsigned>(i);
  }
  for (int r = 1; r <= shape.rows; ++r)
    for (int c = 1; c <= shape.cols; ++c)
      den *= static_cast<unsigned>((shape.rows - r) + (shape.cols - c) + 1);
  unsigned __int128 count = num / den;
  if (count > ~static_cast<std::uint64_t>(0))
    throw std::overflow_error("count_syt: result exceeds 64 bits");
  return static_cast<std::uint64_t>(count);
}

namespace {

void enumerate_rec(Grid& grid, Shape shape, int pos, std::vector<char>& used,
                   const std::function<void(const StandardTableau&)>& fn) {
  const int total = shape.boxes();
  if (pos == total) {
    fn(StandardTableau::validate(grid));
    return;
  }
  int r = pos / shape.cols, c = pos % shape.cols;
  int lo = 1;
  if (c > 0) lo = std::max(lo, grid[r][c - 1] + 1);
  if (r > 0) lo = std::max(lo, grid[r - 1][c] + 1);
  for (int v = lo; v <= total; ++v) {
    if (used[v]) continue;
    used[v] = 1;
    grid[r][c] = v;
    enumerate_rec(grid, shape, pos + 1, used, fn);
    used[v] = 0;
  }
  grid[r][c] = 0;
}

}  // namespace

void for_each_syt(Shape shape, const std::function<void(const StandardTableau&)>& fn,
                  std::uint64_t budget) {
  std::uint64_t count;
  try {
    count = count_syt(shape);
  } catch (const std::overflow_error&) {
    throw BudgetExceeded("tableau count overflows; budget exceeded");
  }
  if (count > budget) {
    std::ostringstream os;
    os << "shape " << shape.rows << "x" << shape.cols << " has " << count
       << " tableaux, budget is " << budget;
    throw BudgetExceeded(os.str());
  }
  Grid grid(shape.rows, std::vector<int>(shape.cols, 0));
  std::vector<char> used(shape.boxes() + 1, 0);
  enumerate_rec(grid, shape, 0, used, fn);
}

std::vector<StandardTableau> enumerate_syt(Shape shape, std::uint64_t budget) {
  std::vector<StandardTableau> out;
  for_each_syt(shape, [&](const StandardTableau& t) { out.push_back(t); }, budget);
  return out;
}

}  // namespace webvac
