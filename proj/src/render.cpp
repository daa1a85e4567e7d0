#include "scd/render.hpp"

#include <algorithm>
#include <sstream>

namespace scd {

namespace {

struct Layout {
  static constexpr int margin = 30;
  static constexpr int spacing = 50;
  static constexpr int arc_unit = 22;  // apex height per position of span
  static constexpr int label_gap = 6;
  static constexpr int node_radius = 4;
  static constexpr int text_drop = 22;
};

}  // namespace

std::string render_svg(const LabelledPartition& lambda) {
  const SignedOrder ord = lambda.order();
  const int points = ord.size();
  const std::vector<Arc> arcs = lambda.arcs();
  int max_span = 1;
  for (const Arc& a : arcs) max_span = std::max(max_span, ord.pos(a.j) - ord.pos(a.i));

  const int width = 2 * Layout::margin + std::max(points - 1, 0) * Layout::spacing;
  const int baseline = Layout::margin + max_span * Layout::arc_unit / 2 + Layout::text_drop;
  const int height = baseline + Layout::text_drop + Layout::margin / 2;
  auto x_of = [&](int pos) { return Layout::margin + (pos - 1) * Layout::spacing; };

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
      << "\" viewBox=\"0 0 " << width << " " << height << "\" font-family=\"serif\" font-size=\"14\">\n";
  svg << "  <title>" << lambda.to_string() << "</title>\n";
  for (const Arc& a : arcs) {
    const int x1 = x_of(ord.pos(a.i)), x2 = x_of(ord.pos(a.j));
    // A quadratic Bezier's apex sits halfway to its control point.
    const int rise = (ord.pos(a.j) - ord.pos(a.i)) * Layout::arc_unit;
    const int mid = (x1 + x2) / 2;
    svg << "  <path d=\"M " << x1 << " " << baseline << " Q " << mid << " " << baseline - rise << " " << x2 << " "
        << baseline << "\" fill=\"none\" stroke=\"black\"/>\n";
    svg << "  <text x=\"" << mid << "\" y=\"" << baseline - rise / 2 - Layout::label_gap
        << "\" text-anchor=\"middle\">" << static_cast<unsigned>(a.label)
        << "</text>\n";
  }
  for (int pos = 1; pos <= points; ++pos) {
    const int x = x_of(pos);
    svg << "  <circle cx=\"" << x << "\" cy=\"" << baseline << "\" r=\"" << Layout::node_radius << "\"/>\n";
    svg << "  <text x=\"" << x << "\" y=\"" << baseline + Layout::text_drop << "\" text-anchor=\"middle\">"
        << ord.value_at(pos) << "</text>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace scd
