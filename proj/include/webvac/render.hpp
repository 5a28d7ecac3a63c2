#pragma once

#include <string>
#include <vector>

#include "webvac/matching.hpp"
#include "webvac/web.hpp"

namespace webvac {

struct RenderSpec {
  enum class Format { Svg, Tikz };
  Format format = Format::Svg;
  long scale_num = 1;  // positive rational scale
  long scale_den = 1;
  std::vector<std::string> palette;  // cycled per color; empty = default
};

/// Paper palette for colors 1..4, then four more; cycled beyond that.
const std::vector<std::string>& default_palette();

/// Labeled baseline with colored semicircular arcs. Deterministic output.
std::string render_ncm(const MulticoloredNcm& m, const RenderSpec& spec);

/// Drawn from the stored doubled coordinates: baseline, boundary labels,
/// interior dots, edges with arrowheads on directed edges and weight
/// labels. Deterministic output.
std::string render_web(const WebGraph& w, const RenderSpec& spec);

}  // namespace webvac
