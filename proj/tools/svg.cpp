#include "svg.hpp"

#include <algorithm>
#include <cstdio>
#include <set>
#include <sstream>

namespace gnsym::cli {

namespace {

constexpr double kMargin = 56.0;
constexpr double kSide = 400.0;

std::string f3(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

double px(const Rat& x) { return kMargin + to_double(x) * kSide; }
double py(const Rat& y) { return kMargin + (1.0 - to_double(y)) * kSide; }

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '<') out += "&lt;";
    else if (c == '>') out += "&gt;";
    else if (c == '&') out += "&amp;";
    else if (c == '"') out += "&quot;";
    else out += c;
  }
  return out;
}

std::string points(const RegionPolyline& p) {
  std::string s;
  for (const auto& [x, y] : p.vertices) {
    if (!s.empty()) s += ' ';
    s += f3(px(x)) + "," + f3(py(y));
  }
  return s;
}

}  // namespace

std::string render_svg(const DiagramSpec& spec) {
  std::ostringstream os;
  const double total = 2 * kMargin + kSide;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << f3(total) << "\" height=\""
     << f3(total) << "\" viewBox=\"0 0 " << f3(total) << " " << f3(total) << "\">\n";
  os << "  <title>" << escape(spec.title) << "</title>\n";
  os << "  <rect x=\"0\" y=\"0\" width=\"" << f3(total) << "\" height=\"" << f3(total) << "\" fill=\"white\"/>\n";
  os << "  <g id=\"axes\" stroke=\"black\" fill=\"none\">\n";
  os << "    <rect x=\"" << f3(kMargin) << "\" y=\"" << f3(kMargin) << "\" width=\"" << f3(kSide) << "\" height=\""
     << f3(kSide) << "\"/>\n";
  os << "    <line x1=\"" << f3(px(0)) << "\" y1=\"" << f3(py(0)) << "\" x2=\"" << f3(px(1)) << "\" y2=\"" << f3(py(1))
     << "\" stroke-dasharray=\"4 4\" stroke=\"#999\"/>\n";
  os << "  </g>\n";
  os << "  <g id=\"ticks\" font-family=\"sans-serif\" font-size=\"12\">\n";
  for (const auto& [t, label] : std::vector<std::pair<Rat, const char*>>{{Rat(0), "0"}, {Rat(1, 2), "1/2"}, {Rat(1), "1"}}) {
    os << "    <text x=\"" << f3(px(t)) << "\" y=\"" << f3(py(0) + 18) << "\" text-anchor=\"middle\">" << label
       << "</text>\n";
    os << "    <text x=\"" << f3(px(0) - 8) << "\" y=\"" << f3(py(t) + 4) << "\" text-anchor=\"end\">" << label
       << "</text>\n";
  }
  os << "    <text x=\"" << f3(kMargin + kSide / 2) << "\" y=\"" << f3(total - 12) << "\" text-anchor=\"middle\">"
     << escape(spec.x_label) << "</text>\n";
  os << "    <text x=\"14\" y=\"" << f3(kMargin + kSide / 2) << "\" text-anchor=\"middle\" transform=\"rotate(-90 14 "
     << f3(kMargin + kSide / 2) << ")\">" << escape(spec.y_label) << "</text>\n";
  os << "  </g>\n";

  os << "  <g id=\"regions\">\n";
  for (const auto& p : spec.polylines) {
    if (p.vertices.empty()) continue;
    const std::string label = escape(p.label);
    if (p.kind == "region") {
      os << "    <polygon class=\"region\" data-label=\"" << label << "\" points=\"" << points(p)
         << "\" fill=\"#4a90d9\" fill-opacity=\"0.3\" stroke=\"#1f4e79\" stroke-width=\"1.5\"/>\n";
    } else {
      const char* colour = p.kind == "exceptional" ? "#d62728" : p.kind == "level" ? "#1f77b4" : "black";
      const char* width = p.kind == "exceptional" ? "3" : "1.5";
      os << "    <polyline class=\"" << escape(p.kind) << "\" data-label=\"" << label << "\" points=\"" << points(p)
         << "\" fill=\"none\" stroke=\"" << colour << "\" stroke-width=\"" << width << "\"/>\n";
    }
  }
  os << "  </g>\n";

  // One circle per distinct vertex, in a fixed order.
  std::set<std::pair<Rat, Rat>> seen;
  os << "  <g id=\"vertices\" fill=\"black\">\n";
  for (const auto& p : spec.polylines) {
    for (const auto& v : p.vertices) {
      if (!seen.insert(v).second) continue;
      os << "    <circle cx=\"" << f3(px(v.first)) << "\" cy=\"" << f3(py(v.second)) << "\" r=\"2.5\" data-exact=\""
         << v.first.get_str() << "," << v.second.get_str() << "\"/>\n";
    }
  }
  os << "  </g>\n";
  os << "</svg>\n";
  return os.str();
}

}  // namespace gnsym::cli
