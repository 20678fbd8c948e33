#pragma once

#include <string>
#include <vector>

#include <Eigen/Dense>

namespace lagpants::tools {

// Maps a world rectangle onto a pixel rectangle, y axis pointing up.
struct Viewport {
  double xmin = -1, xmax = 1, ymin = -1, ymax = 1;
  double left = 0, top = 0, width = 400, height = 400;

  Eigen::Vector2d map(const Eigen::Vector2d& p) const;
  // Grows the world rectangle to keep unit aspect ratio.
  void fit(const std::vector<Eigen::Vector2d>& pts, double margin = 0.1);
};

class SvgDocument {
 public:
  SvgDocument(double width, double height, std::string command_line);

  void polyline(const Viewport& vp, const std::vector<Eigen::Vector2d>& pts, const std::string& stroke,
                double stroke_width = 1.5, bool closed = false);
  void polygon(const Viewport& vp, const std::vector<Eigen::Vector2d>& pts, const std::string& fill,
               const std::string& stroke = "none");
  void circle(const Viewport& vp, const Eigen::Vector2d& c, double radius_px, const std::string& fill);
  void text(const Viewport& vp, const Eigen::Vector2d& at, const std::string& s, double size = 12);
  void frame(const Viewport& vp, const std::string& caption);

  std::string str() const;

 private:
  double width_, height_;
  std::string command_line_;
  std::vector<std::string> body_;
};

std::string xml_escape(const std::string& s);

}  // namespace lagpants::tools
