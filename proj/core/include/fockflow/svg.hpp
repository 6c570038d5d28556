// Static SVG figures: one polyline per streamline, one marker per singularity.
// Marker shape classes: vortex = circle, anti_vortex = diamond,
// source = up triangle, sink = down triangle.
#ifndef FOCKFLOW_SVG_HPP
#define FOCKFLOW_SVG_HPP

#include <string>
#include <vector>

#include "fockflow/types.hpp"

namespace fockflow {

struct SvgFigure {
  double xmin = -1, xmax = 1, ymin = -1, ymax = 1;
  int width_px = 640;
  std::vector<std::vector<cplx>> streamlines;
  std::vector<Singularity> markers;
};

std::string render_svg(const SvgFigure& fig);

}  // namespace fockflow

#endif  // FOCKFLOW_SVG_HPP
