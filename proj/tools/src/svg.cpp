#include "lagpants/tools/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace lagpants::tools {

namespace {

// Fixed precision keeps the output byte-stable.
std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

std::string points_attr(const Viewport& vp, const std::vector<Eigen::Vector2d>& pts) {
  std::string s;
  for (const auto& p : pts) {
    Eigen::Vector2d q = vp.map(p);
    if (!s.empty()) s += ' ';
    s += num(q.x()) + ',' + num(q.y());
  }
  return s;
}

}  // namespace

Eigen::Vector2d Viewport::map(const Eigen::Vector2d& p) const {
  double sx = width / (xmax - xmin), sy = height / (ymax - ymin);
  return {left + (p.x() - xmin) * sx, top + (ymax - p.y()) * sy};
}

void Viewport::fit(const std::vector<Eigen::Vector2d>& pts, double margin) {
  if (pts.empty()) return;
  Eigen::Vector2d lo = pts.front(), hi = pts.front();
  for (const auto& p : pts) {
    lo = lo.cwiseMin(p);
    hi = hi.cwiseMax(p);
  }
  double span = std::max({hi.x() - lo.x(), hi.y() - lo.y(), 1e-6});
  double half = span * (0.5 + margin);
  Eigen::Vector2d c = (lo + hi) / 2;
  double aspect = width / height;
  xmin = c.x() - half * std::max(aspect, 1.0);
  xmax = c.x() + half * std::max(aspect, 1.0);
  ymin = c.y() - half * std::max(1.0 / aspect, 1.0);
  ymax = c.y() + half * std::max(1.0 / aspect, 1.0);
}

SvgDocument::SvgDocument(double width, double height, std::string command_line)
    : width_(width), height_(height), command_line_(std::move(command_line)) {}

void SvgDocument::polyline(const Viewport& vp, const std::vector<Eigen::Vector2d>& pts, const std::string& stroke,
                           double stroke_width, bool closed) {
  body_.push_back(std::string(closed ? "<polygon" : "<polyline") + " fill=\"none\" stroke=\"" + stroke +
                  "\" stroke-width=\"" + num(stroke_width) + "\" points=\"" + points_attr(vp, pts) + "\"/>");
}

void SvgDocument::polygon(const Viewport& vp, const std::vector<Eigen::Vector2d>& pts, const std::string& fill,
                          const std::string& stroke) {
  body_.push_back("<polygon fill=\"" + fill + "\" stroke=\"" + stroke + "\" points=\"" + points_attr(vp, pts) +
                  "\"/>");
}

void SvgDocument::circle(const Viewport& vp, const Eigen::Vector2d& c, double radius_px, const std::string& fill) {
  Eigen::Vector2d q = vp.map(c);
  body_.push_back("<circle cx=\"" + num(q.x()) + "\" cy=\"" + num(q.y()) + "\" r=\"" + num(radius_px) +
                  "\" fill=\"" + fill + "\"/>");
}

void SvgDocument::text(const Viewport& vp, const Eigen::Vector2d& at, const std::string& s, double size) {
  Eigen::Vector2d q = vp.map(at);
  body_.push_back("<text x=\"" + num(q.x()) + "\" y=\"" + num(q.y()) + "\" font-size=\"" + num(size) +
                  "\" font-family=\"sans-serif\">" + xml_escape(s) + "</text>");
}

void SvgDocument::frame(const Viewport& vp, const std::string& caption) {
  body_.push_back("<rect x=\"" + num(vp.left) + "\" y=\"" + num(vp.top) + "\" width=\"" + num(vp.width) +
                  "\" height=\"" + num(vp.height) + "\" fill=\"none\" stroke=\"#bbbbbb\"/>");
  body_.push_back("<text x=\"" + num(vp.left + 6) + "\" y=\"" + num(vp.top + 16) +
                  "\" font-size=\"13\" font-family=\"sans-serif\">" + xml_escape(caption) + "</text>");
}

std::string SvgDocument::str() const {
  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(width_) << "\" height=\"" << num(height_)
     << "\" viewBox=\"0 0 " << num(width_) << ' ' << num(height_) << "\">\n"
     << "<metadata><command>" << xml_escape(command_line_) << "</command></metadata>\n"
     << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  for (const auto& b : body_) os << b << '\n';
  os << "</svg>\n";
  return os.str();
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

}  // namespace lagpants::tools
