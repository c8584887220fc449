#pragma once

#include <ostream>
#include <string>

#include "tropcount/subdivision.hpp"

namespace tropcount {

// Draws a column-wise subdivision: triangle outline, cells (triangles and
// parallelograms filled differently), and the source path on top. 40 px
// lattice pitch, origin bottom-left. Cell counts ride along as data
// attributes so tools can check a figure without parsing geometry.
inline void write_subdivision_svg(std::ostream& os, const ColumnwiseSubdivision& s) {
  const int pitch = 40;
  const int margin = 20;
  const int d = s.degree;
  const int side = 2 * margin + pitch * d;
  auto px = [&](Int x) { return margin + static_cast<int>(x) * pitch; };
  auto py = [&](Int y) { return side - margin - static_cast<int>(y) * pitch; };

  Int triangles = 0, parallelograms = 0;
  for (const auto& c : s.cells)
    (c.kind() == PolygonKind::Triangle ? triangles : parallelograms) += 1;

  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << side << "\" height=\"" << side
     << "\" viewBox=\"0 0 " << side << " " << side << "\" data-degree=\"" << d
     << "\" data-triangle-count=\"" << triangles << "\" data-parallelogram-count=\""
     << parallelograms << "\">\n";

  for (const auto& c : s.cells) {
    bool tri = c.kind() == PolygonKind::Triangle;
    os << "  <polygon points=\"";
    bool first = true;
    for (const auto& v : c.vertices()) {
      if (!first) os << " ";
      first = false;
      os << px(v.x) << "," << py(v.y);
    }
    os << "\" fill=\"" << (tri ? "#cfe8ff" : "#ffe3b3")
       << "\" stroke=\"#555555\" stroke-width=\"1\" data-double-area=\"" << double_area(c)
       << "\"/>\n";
  }

  // lattice dots
  for (Int x = 0; x <= d; ++x)
    for (Int y = 0; x + y <= d; ++y)
      os << "  <circle cx=\"" << px(x) << "\" cy=\"" << py(y) << "\" r=\"2\" fill=\"#333333\"/>\n";

  // triangle outline
  os << "  <polygon points=\"" << px(0) << "," << py(0) << " " << px(d) << "," << py(0) << " "
     << px(0) << "," << py(d) << "\" fill=\"none\" stroke=\"#000000\" stroke-width=\"2\"/>\n";

  // the path, highlighted
  os << "  <polyline points=\"";
  bool first = true;
  for (const auto& p : s.source_path.points) {
    if (!first) os << " ";
    first = false;
    os << px(p.x) << "," << py(p.y);
  }
  os << "\" fill=\"none\" stroke=\"#d62728\" stroke-width=\"3\"/>\n";

  os << "</svg>\n";
}

}  // namespace tropcount
