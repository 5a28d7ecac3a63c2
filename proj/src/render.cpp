#include "webvac/render.hpp"

#include <algorithm>
#include <sstream>

namespace webvac {

namespace {

// All coordinates are exact rationals rendered as fixed-point decimals with
// at most three places, so output is byte-deterministic.
std::string fmt_fp(long long num, long long den) {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  long long scaled = num * 1000;
  long long q = scaled / den;
  long long r = scaled % den;
  if (2 * std::abs(r) >= den) q += (scaled < 0 ? -1 : 1);
  std::ostringstream os;
  if (q < 0) {
    os << "-";
    q = -q;
  }
  os << q / 1000;
  long long frac = q % 1000;
  if (frac != 0) {
    std::string digits = std::to_string(frac);
    digits.insert(digits.begin(), 3 - digits.size(), '0');
    while (digits.back() == '0') digits.pop_back();
    os << "." << digits;
  }
  return os.str();
}

struct Scaler {
  long num, den;
  // model units are half-steps of the doubled grid; px per boundary step
  std::string px(long long doubled, long long unit) const {
    return fmt_fp(doubled * unit * num, 2 * den);
  }
};

const char* color_of(const std::vector<std::string>& palette, int color) {
  return palette[(color - 1) % palette.size()].c_str();
}

std::vector<std::string> palette_of(const RenderSpec& spec) {
  return spec.palette.empty() ? default_palette() : spec.palette;
}

constexpr long long kUnit = 24;  // px per boundary step in SVG output

}  // namespace

const std::vector<std::string>& default_palette() {
  static const std::vector<std::string> colors = {
      "blue", "red", "green", "violet", "orange", "teal", "brown", "olive"};
  return colors;
}

std::string render_ncm(const MulticoloredNcm& m, const RenderSpec& spec) {
  const auto palette = palette_of(spec);
  const int total = m.boundary_count();
  Scaler sc{spec.scale_num, spec.scale_den};
  if (spec.format == RenderSpec::Format::Tikz) {
    std::ostringstream os;
    os << "\\begin{tikzpicture}[xscale=" << fmt_fp(spec.scale_num, spec.scale_den)
       << ",yscale=" << fmt_fp(spec.scale_num, spec.scale_den) << "]\n";
    os << "\\draw[thick] (0.5,0) -- (" << fmt_fp(2 * total + 1, 2) << ",0);\n";
    for (int p = 1; p <= total; ++p)
      os << "\\node[below, font=\\tiny] at (" << p << ",0) {" << p << "};\n";
    for (int x = 1; x <= m.layer_count(); ++x)
      for (const Arc& a : m.layer(x))
        os << "\\draw[" << color_of(palette, x) << ", thick] (" << a.start
           << ",0) to[out=90,in=90] (" << a.end << ",0);\n";
    os << "\\end{tikzpicture}\n";
    return os.str();
  }

  // svg: baseline near the bottom, arcs as upper semicircles
  int maxspan = 1;
  for (int x = 1; x <= m.layer_count(); ++x)
    for (const Arc& a : m.layer(x)) maxspan = std::max(maxspan, a.end - a.start);
  std::ostringstream os;
  std::string width = sc.px(2 * (total + 1), kUnit);
  std::string height = sc.px(static_cast<long long>(maxspan) + 3, kUnit);
  std::string baseline = sc.px(static_cast<long long>(maxspan) + 1, kUnit);
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
     << "\" height=\"" << height << "\">\n";
  os << "<line x1=\"" << sc.px(1, kUnit) << "\" y1=\"" << baseline << "\" x2=\""
     << sc.px(2 * total + 1, kUnit) << "\" y2=\"" << baseline
     << "\" stroke=\"black\"/>\n";
  for (int p = 1; p <= total; ++p)
    os << "<text x=\"" << sc.px(2 * p, kUnit) << "\" y=\"" << sc.px(maxspan + 2, kUnit)
       << "\" font-size=\"10\" text-anchor=\"middle\">" << p << "</text>\n";
  for (int x = 1; x <= m.layer_count(); ++x)
    for (const Arc& a : m.layer(x)) {
      std::string r = sc.px(a.end - a.start, kUnit);
      os << "<path d=\"M " << sc.px(2 * a.start, kUnit) << " " << baseline << " A "
         << r << " " << r << " 0 0 0 " << sc.px(2 * a.end, kUnit) << " " << baseline
         << "\" fill=\"none\" stroke=\"" << color_of(palette, x)
         << "\" stroke-width=\"1.5\"/>\n";
    }
  os << "</svg>\n";
  return os.str();
}

std::string render_web(const WebGraph& w, const RenderSpec& spec) {
  const int total = w.boundary_count();
  Scaler sc{spec.scale_num, spec.scale_den};
  std::int64_t maxy2 = 2;
  for (const InteriorVertex& iv : w.interior()) maxy2 = std::max(maxy2, iv.pos.y2);
  for (const WebEdge& e : w.edges())
    if (e.bend) maxy2 = std::max(maxy2, e.bend->y2);

  if (spec.format == RenderSpec::Format::Tikz) {
    auto coord = [&](Point2 p) {
      return "(" + fmt_fp(p.x2, 2) + "," + fmt_fp(p.y2, 2) + ")";
    };
    std::ostringstream os;
    os << "\\begin{tikzpicture}[xscale=" << fmt_fp(spec.scale_num, spec.scale_den)
       << ",yscale=" << fmt_fp(spec.scale_num, spec.scale_den) << "]\n";
    os << "\\draw[thick] (0.5,0) -- (" << fmt_fp(2 * total + 1, 2) << ",0);\n";
    for (int p = 1; p <= total; ++p)
      os << "\\node[below, font=\\tiny] at (" << p << ",0) {" << p << "};\n";
    for (const InteriorVertex& iv : w.interior())
      os << "\\filldraw " << coord(iv.pos) << " circle (2pt);\n";
    for (const WebEdge& e : w.edges()) {
      Point2 a = w.position(e.tail), b = w.position(e.head);
      os << "\\draw[thick" << (e.undirected ? "" : ",->") << "] " << coord(a);
      if (e.bend) os << " -- " << coord(*e.bend);
      os << " -- " << coord(b) << ";\n";
      // label at the bend, or the exact midpoint in quadrupled coordinates
      Point2 mid4 = e.bend ? Point2{2 * e.bend->x2, 2 * e.bend->y2}
                           : Point2{a.x2 + b.x2, a.y2 + b.y2};
      os << "\\node[font=\\tiny, above right] at (" << fmt_fp(mid4.x2, 4) << ","
         << fmt_fp(mid4.y2, 4) << ") {" << e.weight << "};\n";
    }
    os << "\\end{tikzpicture}\n";
    return os.str();
  }

  // svg: y axis flipped, marker-end arrowheads on directed edges
  std::ostringstream os;
  auto X = [&](std::int64_t x2) { return sc.px(x2, kUnit); };
  auto Y = [&](std::int64_t y2) { return sc.px(maxy2 + 1 - y2, kUnit); };
  std::string width = sc.px(2 * (total + 1), kUnit);
  std::string height = sc.px(maxy2 + 3, kUnit);
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
     << "\" height=\"" << height << "\">\n";
  os << "<defs><marker id=\"arrow\" viewBox=\"0 0 10 10\" refX=\"8\" refY=\"5\" "
        "markerWidth=\"5\" markerHeight=\"5\" orient=\"auto-start-reverse\">"
        "<path d=\"M 0 0 L 10 5 L 0 10 z\"/></marker></defs>\n";
  os << "<line x1=\"" << X(1) << "\" y1=\"" << Y(0) << "\" x2=\"" << X(2 * total + 1)
     << "\" y2=\"" << Y(0) << "\" stroke=\"black\"/>\n";
  for (int p = 1; p <= total; ++p)
    os << "<text x=\"" << X(2 * p) << "\" y=\"" << sc.px(maxy2 + 2, kUnit)
       << "\" font-size=\"10\" text-anchor=\"middle\">" << p << "</text>\n";
  for (const WebEdge& e : w.edges()) {
    Point2 a = w.position(e.tail), b = w.position(e.head);
    os << "<path d=\"M " << X(a.x2) << " " << Y(a.y2);
    if (e.bend) os << " L " << X(e.bend->x2) << " " << Y(e.bend->y2);
    os << " L " << X(b.x2) << " " << Y(b.y2) << "\" fill=\"none\" stroke=\"black\""
       << (e.undirected ? "" : " marker-end=\"url(#arrow)\"") << "/>\n";
    // label beside the bend, or the exact midpoint in quadrupled coordinates
    Point2 mid4 = e.bend ? Point2{2 * e.bend->x2, 2 * e.bend->y2}
                         : Point2{a.x2 + b.x2, a.y2 + b.y2};
    os << "<text x=\"" << fmt_fp((mid4.x2 + 1) * kUnit * spec.scale_num, 4 * spec.scale_den)
       << "\" y=\"" << fmt_fp((4 * (maxy2 + 1) - mid4.y2 - 1) * kUnit * spec.scale_num,
                              4 * spec.scale_den)
       << "\" font-size=\"8\">" << e.weight << "</text>\n";
  }
  for (const InteriorVertex& iv : w.interior())
    os << "<circle cx=\"" << X(iv.pos.x2) << "\" cy=\"" << Y(iv.pos.y2)
       << "\" r=\"3\" fill=\"black\"/>\n";
  os << "</svg>\n";
  return os.str();
}

}  // namespace webvac
