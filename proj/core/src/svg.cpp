#include "linlay/svg.h"

#include <sstream>

namespace linlay {

std::string renderArcDiagram(const Graph& g, const MixedLayout& layout) {
  if (layout.order.size() != g.n || (int)layout.pages.pageOf.size() != g.edgeCount())
    fail(ErrorCode::EdgeSetMismatch, "layout does not match the graph");

  const int spacing = 40;
  const int margin = 30;
  int maxRadius = g.n > 1 ? (g.n - 1) * spacing / 2 : 0;
  const int baseline = maxRadius + margin;
  const int width = 2 * margin + (g.n > 0 ? (g.n - 1) * spacing : 0);
  const int height = 2 * baseline;
  auto xOf = [&](int v) { return margin + layout.order.pos[v] * spacing; };

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
      << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
  svg << "<line x1=\"" << margin << "\" y1=\"" << baseline << "\" x2=\"" << width - margin
      << "\" y2=\"" << baseline << "\" stroke=\"#999\" stroke-width=\"1\"/>\n";
  for (int e = 0; e < g.edgeCount(); e++) {
    int x1 = xOf(g.edges[e].first);
    int x2 = xOf(g.edges[e].second);
    if (x1 > x2)
      std::swap(x1, x2);
    bool stack = layout.pages.kinds[layout.pages.pageOf[e]] == PageKind::Stack;
    int r = (x2 - x1) / 2;
    // sweep 1 bows the arc above the line, 0 below
    svg << "<path d=\"M " << x1 << ' ' << baseline << " A " << r << ' ' << r << " 0 0 "
        << (stack ? 1 : 0) << ' ' << x2 << ' ' << baseline << "\" fill=\"none\" stroke=\""
        << (stack ? "blue" : "red") << "\" stroke-width=\"1.5\"/>\n";
  }
  for (int i = 0; i < g.n; i++) {
    int v = layout.order.seq[i];
    int x = margin + i * spacing;
    svg << "<circle cx=\"" << x << "\" cy=\"" << baseline << "\" r=\"3\" fill=\"black\"/>\n";
    std::string label = (int)g.labels.size() == g.n ? g.labels[v] : std::to_string(v);
    svg << "<text x=\"" << x << "\" y=\"" << baseline + 16
        << "\" font-size=\"10\" text-anchor=\"middle\">" << label << "</text>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace linlay
