#include "webvac/matching.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace webvac {

MulticoloredNcm MulticoloredNcm::create(int n, int boundary_points,
                                        std::vector<std::vector<Arc>> layers) {
  if (n < 2) throw Error("a multicolored matching needs n >= 2");
  if (boundary_points < 1) throw Error("boundary point count must be positive");
  if (static_cast<int>(layers.size()) != n - 1)
    throw Error("expected one layer per color 1..n-1");
  std::vector<char> covered(boundary_points + 1, 0);
  for (int x = 1; x <= n - 1; ++x) {
    auto& arcs = layers[x - 1];
    std::sort(arcs.begin(), arcs.end());
    std::vector<char> used(boundary_points + 1, 0);
    for (const Arc& a : arcs) {
      if (a.start < 1 || a.end > boundary_points || a.start >= a.end) {
        std::ostringstream os;
        os << "arc (" << a.start << "," << a.end << ") of color " << x
           << " is out of range or not increasing";
        throw Error(os.str());
      }
      if (used[a.start] || used[a.end]) {
        std::ostringstream os;
        os << "layer " << x << " reuses a boundary point of arc (" << a.start
           << "," << a.end << ")";
        throw Error(os.str());
      }
      used[a.start] = used[a.end] = 1;
      covered[a.start] = covered[a.end] = 1;
    }
    // crossing test: arcs sorted by start, (i,j) x (i',j') cross iff i<i'<j<j'
    for (size_t p = 0; p < arcs.size(); ++p)
      for (size_t q = p + 1; q < arcs.size(); ++q)
        if (arcs[p].end > arcs[q].start && arcs[p].end < arcs[q].end) {
          std::ostringstream os;
          os << "layer " << x << " arcs (" << arcs[p].start << "," << arcs[p].end
             << ") and (" << arcs[q].start << "," << arcs[q].end << ") cross";
          throw Error(os.str());
        }
  }
  for (int p = 1; p <= boundary_points; ++p)
    if (!covered[p]) {
      std::ostringstream os;
      os << "boundary point " << p << " lies on no arc";
      throw Error(os.str());
    }
  return MulticoloredNcm(n, boundary_points, std::move(layers));
}

MulticoloredNcm ncm_from_tableau(const StandardTableau& t) {
  const Shape shape = t.shape();
  if (shape.rows < 2)
    throw Error("ncm_from_tableau needs at least two rows");
  std::vector<std::vector<Arc>> layers(shape.rows - 1);
  for (int x = 1; x <= shape.rows - 1; ++x) {
    std::vector<char> paired(shape.cols, 0);
    for (int c = 1; c <= shape.cols; ++c) {
      int j = t.at(x + 1, c);
      int pick = -1;
      for (int c2 = shape.cols; c2 >= 1; --c2)
        if (!paired[c2 - 1] && t.at(x, c2) < j) {
          pick = c2;
          break;
        }
      if (pick < 0) throw Error("pairing failed; tableau validation bug");
      paired[pick - 1] = 1;
      layers[x - 1].push_back({t.at(x, pick), j});
    }
  }
  return MulticoloredNcm::create(shape.rows, shape.boxes(), std::move(layers));
}

MulticoloredNcm ncm_from_rotated_tableau(const Grid& rotated) {
  if (rotated.empty() || rotated[0].empty())
    throw Error("rotated grid must be nonempty");
  const int rows = static_cast<int>(rotated.size());
  const int cols = static_cast<int>(rotated[0].size());
  if (rows < 2) throw Error("ncm_from_rotated_tableau needs at least two rows");
  for (const auto& row : rotated)
    if (static_cast<int>(row.size()) != cols)
      throw Error("rotated grid rows must all have the same length");
  std::vector<std::vector<Arc>> layers(rows - 1);
  for (int x = 1; x <= rows - 1; ++x) {
    std::vector<char> paired(cols, 0);
    for (int c = cols; c >= 1; --c) {
      int j = rotated[x - 1][c - 1];
      int pick = -1;
      for (int c2 = 1; c2 <= cols; ++c2)
        if (!paired[c2 - 1] && rotated[x][c2 - 1] < j) {
          pick = c2;
          break;
        }
      if (pick < 0) throw Error("rotated pairing failed; input is not a rotated tableau");
      paired[pick - 1] = 1;
      layers[x - 1].push_back({rotated[x][pick - 1], j});
    }
  }
  return MulticoloredNcm::create(rows, rows * cols, std::move(layers));
}

namespace {

struct PointUse {
  int color;
  Arc arc;
};

std::string arc_str(const Arc& a) {
  std::ostringstream os;
  os << "(" << a.start << "," << a.end << ")";
  return os.str();
}

}  // namespace

StandardRectangularCheck is_standard_rectangular(const MulticoloredNcm& m) {
  std::map<int, std::vector<PointUse>> uses;
  for (int x = 1; x <= m.layer_count(); ++x)
    for (const Arc& a : m.layer(x)) {
      uses[a.start].push_back({x, a});
      uses[a.end].push_back({x, a});
    }
  auto violation = [&](int color, Arc arc, int point, const std::string& why) {
    StandardRectangularCheck out;
    out.ok = false;
    out.color = color;
    out.arc = arc;
    out.endpoint = point;
    std::ostringstream os;
    os << "arc " << arc_str(arc) << " of color " << color << " at point "
       << point << ": " << why;
    out.reason = os.str();
    return out;
  };
  const int top = m.layer_count();
  for (int x = 1; x <= top; ++x)
    for (const Arc& a : m.layer(x)) {
      // arcs sharing the start
      std::vector<PointUse> others;
      for (const PointUse& u : uses[a.start])
        if (!(u.color == x && u.arc == a)) others.push_back(u);
      if (x == 1) {
        if (!others.empty())
          return violation(x, a, a.start, "start of a color-1 arc lies on another arc");
      } else {
        if (others.size() != 1)
          return violation(x, a, a.start, "start must be shared with exactly one other arc");
        if (others[0].color != x - 1)
          return violation(x, a, a.start, "start must be shared with the previous color");
      }
      others.clear();
      for (const PointUse& u : uses[a.end])
        if (!(u.color == x && u.arc == a)) others.push_back(u);
      if (x == top) {
        if (!others.empty())
          return violation(x, a, a.end, "end of a top-color arc lies on another arc");
      } else {
        if (others.size() != 1)
          return violation(x, a, a.end, "end must be shared with exactly one other arc");
        if (others[0].color != x + 1)
          return violation(x, a, a.end, "end must be shared with the next color");
      }
    }
  return {};
}

MulticoloredNcm reflect_ncm(const MulticoloredNcm& m) {
  const int total = m.boundary_count();
  const int n = m.rank();
  std::vector<std::vector<Arc>> layers(n - 1);
  for (int x = 1; x <= n - 1; ++x)
    for (const Arc& a : m.layer(x))
      layers[(n - x) - 1].push_back({total + 1 - a.end, total + 1 - a.start});
  return MulticoloredNcm::create(n, total, std::move(layers));
}

StandardTableau tableau_from_ncm(const MulticoloredNcm& m) {
  auto check = is_standard_rectangular(m);
  if (!check.ok) throw NotStandardRectangular(check.reason);
  Grid grid;
  std::vector<int> row;
  for (const Arc& a : m.layer(1)) row.push_back(a.start);
  std::sort(row.begin(), row.end());
  grid.push_back(row);
  for (int x = 1; x <= m.layer_count(); ++x) {
    row.clear();
    for (const Arc& a : m.layer(x)) row.push_back(a.end);
    std::sort(row.begin(), row.end());
    grid.push_back(row);
  }
  return StandardTableau::validate(std::move(grid));
}

}  // namespace webvac
