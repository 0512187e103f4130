#include <cstdio>
#include <sstream>

#include "costas/cli/cli.hpp"

namespace costas::cli {

std::string svg_scatter(const cloud::CloudState& state) {
  constexpr double kSize = 512;
  constexpr double kMargin = 16;
  const unsigned last = state.stages == 0 ? 1 : state.stages;
  const double lo = cloud::grid_origin(state.geometry, last).raw().get_d();
  const double span = state.geometry == cloud::Geometry::unit ? 1.0 : -2 * lo;
  const double scale = (kSize - 2 * kMargin) / span;

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kSize << "\" height=\"" << kSize
      << "\" viewBox=\"0 0 " << kSize << ' ' << kSize << "\">\n";
  svg << "<rect x=\"" << kMargin << "\" y=\"" << kMargin << "\" width=\"" << kSize - 2 * kMargin << "\" height=\""
      << kSize - 2 * kMargin << "\" fill=\"none\" stroke=\"#999\"/>\n";
  char buf[128];
  for (const auto& p : state.points) {
    const double cx = kMargin + (p.x.raw().get_d() - lo) * scale;
    const double cy = kSize - kMargin - (p.y.raw().get_d() - lo) * scale;
    std::snprintf(buf, sizeof buf, "<circle cx=\"%.3f\" cy=\"%.3f\" r=\"2\"/>\n", cx, cy);
    svg << buf;
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace costas::cli
