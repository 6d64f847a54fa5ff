#include "locdet/svg.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace locdet {

namespace {

const char* fill_for(NodeState s) {
  switch (s) {
    case NodeState::kFlexible: return "#d62728";     // red
    case NodeState::kRigid: return "#e6b800";        // yellow
    case NodeState::kLocalizable: return "#1f77b4";  // blue
  }
  return "#000000";
}

}  // namespace

std::string state_map_svg(const NetworkGraph& net,
                          const std::vector<NodeState>& final_states,
                          const HoleSpec* hole) {
  if (final_states.empty())
    throw std::invalid_argument("state_map_svg: empty final states");
  if (static_cast<int>(final_states.size()) != net.size())
    throw std::invalid_argument("state_map_svg: state/node count mismatch");

  double lo_x = 1e300, lo_y = 1e300, hi_x = -1e300, hi_y = -1e300;
  for (const auto& p : net.positions) {
    lo_x = std::min(lo_x, p.x);
    lo_y = std::min(lo_y, p.y);
    hi_x = std::max(hi_x, p.x);
    hi_y = std::max(hi_y, p.y);
  }
  const double pad = std::max(10.0, net.radius / 4.0);
  lo_x -= pad;
  lo_y -= pad;
  hi_x += pad;
  hi_y += pad;
  const double w = hi_x - lo_x, h = hi_y - lo_y;
  const double marker = std::max(2.0, std::min(w, h) / 150.0);

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " << w
      << " " << h << "\">\n";
  svg << "<rect width=\"" << w << "\" height=\"" << h
      << "\" fill=\"white\"/>\n";
  // y flipped so the origin sits bottom-left
  auto sx = [&](double x) { return x - lo_x; };
  auto sy = [&](double y) { return hi_y - y; };

  for (NodeId u = 0; u < net.size(); ++u)
    for (NodeId v : net.adj[u])
      if (u < v)
        svg << "<line x1=\"" << sx(net.positions[u].x) << "\" y1=\""
            << sy(net.positions[u].y) << "\" x2=\"" << sx(net.positions[v].x)
            << "\" y2=\"" << sy(net.positions[v].y)
            << "\" stroke=\"#dddddd\" stroke-width=\"0.5\"/>\n";

  if (hole && hole->kind == HoleSpec::Kind::kDisc)
    svg << "<circle cx=\"" << sx(hole->x0) << "\" cy=\"" << sy(hole->y0)
        << "\" r=\"" << hole->r
        << "\" fill=\"none\" stroke=\"#555555\" stroke-dasharray=\"4 3\"/>\n";
  if (hole && hole->kind == HoleSpec::Kind::kRect)
    svg << "<rect x=\"" << sx(hole->x0) << "\" y=\"" << sy(hole->y1)
        << "\" width=\"" << hole->x1 - hole->x0 << "\" height=\""
        << hole->y1 - hole->y0
        << "\" fill=\"none\" stroke=\"#555555\" stroke-dasharray=\"4 3\"/>\n";

  for (NodeId v = 0; v < net.size(); ++v) {
    const double x = sx(net.positions[v].x), y = sy(net.positions[v].y);
    const char* fill = fill_for(final_states[v]);
    if (net.beacon[v]) {
      const double s = marker * 1.6;
      svg << "<rect class=\"node beacon\" x=\"" << x - s / 2 << "\" y=\""
          << y - s / 2 << "\" width=\"" << s << "\" height=\"" << s
          << "\" fill=\"" << fill << "\" stroke=\"black\"/>\n";
    } else {
      svg << "<circle class=\"node\" cx=\"" << x << "\" cy=\"" << y
          << "\" r=\"" << marker << "\" fill=\"" << fill << "\"/>\n";
    }
  }
  svg << "</svg>\n";
  return svg.str();
}

void render_state_map(const NetworkGraph& net,
                      const std::vector<NodeState>& final_states,
                      const std::string& path, const HoleSpec* hole) {
  const std::string svg = state_map_svg(net, final_states, hole);
  std::ofstream out(path);
  if (!out) throw std::runtime_error("render_state_map: cannot write " + path);
  out << svg;
}

}  // namespace locdet
