#include "fockflow/svg.hpp"

#include <cstdio>

#include "fockflow/serialize.hpp"

namespace fockflow {

namespace {

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.4f", v);
  return buf;
}

}  // namespace

std::string render_svg(const SvgFigure& fig) {
  const double w = fig.xmax - fig.xmin;
  const double h = fig.ymax - fig.ymin;
  if (!(w > 0) || !(h > 0)) throw domain_error("render_svg: empty view box");
  const double px = fig.width_px;
  const double py = px * h / w;
  const double sx = px / w;

  // map math coords to SVG pixels (y axis flips)
  auto X = [&](double x) { return (x - fig.xmin) * sx; };
  auto Y = [&](double y) { return (fig.ymax - y) * sx; };

  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(px) + "\" height=\"" +
         num(py) + "\" viewBox=\"0 0 " + num(px) + " " + num(py) + "\">\n";
  out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  for (const auto& line : fig.streamlines) {
    if (line.size() < 2) continue;
    out += "<polyline class=\"streamline\" fill=\"none\" stroke=\"#3366aa\" "
           "stroke-width=\"1\" points=\"";
    for (std::size_t i = 0; i < line.size(); ++i) {
      if (i) out += ' ';
      out += num(X(line[i].real())) + "," + num(Y(line[i].imag()));
    }
    out += "\"/>\n";
  }

  const double r = 4.0;
  for (const Singularity& s : fig.markers) {
    const double cx = X(s.position.real());
    const double cy = Y(s.position.imag());
    const std::string cls = singularity_kind_name(s.kind);
    switch (s.kind) {
      case SingularityKind::vortex:
        out += "<circle class=\"" + cls + "\" cx=\"" + num(cx) + "\" cy=\"" + num(cy) +
               "\" r=\"" + num(r) + "\" fill=\"#cc3333\"/>\n";
        break;
      case SingularityKind::anti_vortex:
        out += "<path class=\"" + cls + "\" d=\"M " + num(cx) + " " + num(cy - r) + " L " +
               num(cx + r) + " " + num(cy) + " L " + num(cx) + " " + num(cy + r) + " L " +
               num(cx - r) + " " + num(cy) + " Z\" fill=\"#3333cc\"/>\n";
        break;
      case SingularityKind::source:
        out += "<path class=\"" + cls + "\" d=\"M " + num(cx) + " " + num(cy - r) + " L " +
               num(cx + r) + " " + num(cy + r) + " L " + num(cx - r) + " " + num(cy + r) +
               " Z\" fill=\"#33aa33\"/>\n";
        break;
      case SingularityKind::sink:
        out += "<path class=\"" + cls + "\" d=\"M " + num(cx) + " " + num(cy + r) + " L " +
               num(cx + r) + " " + num(cy - r) + " L " + num(cx - r) + " " + num(cy - r) +
               " Z\" fill=\"#aa7722\"/>\n";
        break;
    }
  }
  out += "</svg>\n";
  return out;
}

}  // namespace fockflow
