#include "acx4/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <numbers>
#include <sstream>

namespace acx4 {

namespace {

constexpr double kPanel = 240.0;
constexpr double kMargin = 30.0;

std::string fixed(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  // Avoid "-0.00", which would make output depend on rounding direction.
  return std::string(buf) == "-0.00" ? "0.00" : buf;
}

std::string xml_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

std::string tikz_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '_' || c == '#' || c == '&' || c == '%' || c == '$' || c == '{' || c == '}') out += '\\';
    out += c;
  }
  return out;
}

// Components of g, each listed in walk order along its normalized cycle.
std::vector<std::vector<VertexId>> cycles_of(const TorusGraph& g) {
  const TorusGraph n = normalize_orientation(g);
  std::map<VertexId, VertexId> next;
  for (const auto& e : n.edges()) next[e.from] = e.to;
  std::vector<VertexId> order = n.vertices();
  std::sort(order.begin(), order.end(), vertex_id_less);
  std::map<VertexId, bool> seen;
  std::vector<std::vector<VertexId>> out;
  for (const auto& start : order) {
    if (seen[start]) continue;
    std::vector<VertexId> cyc;
    for (VertexId v = start; !seen[v]; v = next.at(v)) {
      seen[v] = true;
      cyc.push_back(v);
    }
    out.push_back(std::move(cyc));
  }
  return out;
}

}  // namespace

std::string render_fan_svg(const MultiFanFamily& fam) {
  const double width = kPanel * static_cast<double>(fam.size());
  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << fixed(width)
     << "\" height=\"" << fixed(kPanel) << "\" viewBox=\"0 0 " << fixed(width) << " "
     << fixed(kPanel) << "\">\n"
     << "  <defs>\n"
     << "    <marker id=\"arrow\" viewBox=\"0 0 10 10\" refX=\"10\" refY=\"5\" markerWidth=\"6\" "
        "markerHeight=\"6\" orient=\"auto\">\n"
     << "      <path d=\"M 0 0 L 10 5 L 0 10 z\"/>\n"
     << "    </marker>\n"
     << "  </defs>\n";
  for (std::size_t j = 0; j < fam.size(); ++j) {
    const auto& fan = fam[j];
    Integer extent = 1;
    for (const auto& v : fan.vectors()) extent = std::max({extent, abs(v.x), abs(v.y)});
    const double scale = (kPanel / 2 - kMargin) / extent.convert_to<double>();
    const double cx = kPanel * static_cast<double>(j) + kPanel / 2;
    const double cy = kPanel / 2;
    os << "  <g class=\"fan\" id=\"fan" << j << "\">\n"
       << "    <line class=\"axis\" x1=\"" << fixed(cx - kPanel / 2 + 4) << "\" y1=\"" << fixed(cy)
       << "\" x2=\"" << fixed(cx + kPanel / 2 - 4) << "\" y2=\"" << fixed(cy)
       << "\" stroke=\"#bbbbbb\"/>\n"
       << "    <line class=\"axis\" x1=\"" << fixed(cx) << "\" y1=\"" << fixed(4) << "\" x2=\""
       << fixed(cx) << "\" y2=\"" << fixed(kPanel - 4) << "\" stroke=\"#bbbbbb\"/>\n";
    for (std::size_t i = 0; i < fan.size(); ++i) {
      const double x = cx + fan[i].x.convert_to<double>() * scale;
      const double y = cy - fan[i].y.convert_to<double>() * scale;
      os << "    <line class=\"vector\" x1=\"" << fixed(cx) << "\" y1=\"" << fixed(cy)
         << "\" x2=\"" << fixed(x) << "\" y2=\"" << fixed(y)
         << "\" stroke=\"black\" marker-end=\"url(#arrow)\"/>\n"
         << "    <text x=\"" << fixed(x + 3) << "\" y=\"" << fixed(y - 3)
         << "\" font-size=\"10\">" << xml_escape(to_string(fan[i])) << "</text>\n";
    }
    os << "  </g>\n";
  }
  os << "</svg>\n";
  return os.str();
}

std::string render_graph_dot(const TorusGraph& g) {
  std::ostringstream os;
  os << "digraph torus_graph {\n";
  for (const auto& v : g.vertices()) os << "  \"" << dot_escape(v) << "\";\n";
  for (const auto& e : g.edges()) {
    os << "  \"" << dot_escape(e.from) << "\" -> \"" << dot_escape(e.to) << "\" [label=\""
       << to_string(e.label) << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

std::string render_graph_tikz(const TorusGraph& g) {
  const auto cycles = cycles_of(g);
  std::map<VertexId, std::string> node_name;
  std::ostringstream os;
  os << "\\begin{tikzpicture}[>=stealth, vertex/.style={circle, fill, inner sep=1.5pt}]\n";
  for (std::size_t c = 0; c < cycles.size(); ++c) {
    const auto& cyc = cycles[c];
    const double n = static_cast<double>(cyc.size());
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      const double angle = 90.0 + 360.0 * static_cast<double>(i) / n;
      const double rad = angle * std::numbers::pi / 180.0;
      const double x = 6.0 * static_cast<double>(c) + 2.0 * std::cos(rad);
      const double y = 2.0 * std::sin(rad);
      const std::string name = "v" + std::to_string(c) + "_" + std::to_string(i);
      node_name[cyc[i]] = name;
      os << "  \\node[vertex, label={" << fixed(angle) << ":{$" << tikz_escape(cyc[i]) << "$}}] ("
         << name << ") at (" << fixed(x) << "," << fixed(y) << ") {};\n";
    }
  }
  for (const auto& e : g.edges()) {
    os << "  \\draw[->] (" << node_name.at(e.from) << ") -- node[midway, sloped, above, "
       << "font=\\scriptsize] {$" << to_string(e.label) << "$} (" << node_name.at(e.to) << ");\n";
  }
  os << "\\end{tikzpicture}\n";
  return os.str();
}

}  // namespace acx4
