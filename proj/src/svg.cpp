#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>

#include "plenoptic/error.hpp"
#include "plenoptic/scene.hpp"

namespace plenoptic::scene {

namespace {

constexpr double kWidth = 1200.0;
constexpr double kHeight = 600.0;
constexpr double kMargin = 60.0;
constexpr int kLabelRows = 4;
constexpr int kSegmentSamples = 48;

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string escape(std::string_view text) {
  std::string out;
  for (char ch : text) {
    switch (ch) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += ch;
    }
  }
  return out;
}

// The axis spans sub-millimeter MLA detail and object distances of meters,
// so z is compressed with asinh(z / z0) where z0 is the sensor gap.
class Viewport {
 public:
  explicit Viewport(const Scene& s) {
    double z_min = 0.0, z_max = 0.0, y_max = 0.0;
    for (const Element& e : s.elements) {
      if (e.type == ElementType::Plane) {
        z_min = std::min(z_min, *e.z);
        z_max = std::max(z_max, *e.z);
      }
      for (const auto& p : {e.from, e.to, e.at}) {
        if (!p) continue;
        z_min = std::min(z_min, p->z);
        z_max = std::max(z_max, p->z);
        y_max = std::max(y_max, std::abs(p->y));
      }
    }
    const Element* sensor = s.find("sensor");
    z0_ = sensor && sensor->z && *sensor->z != 0.0 ? std::abs(*sensor->z)
                                                   : std::max(1e-9, (z_max - z_min) * 1e-3);
    x_lo_ = std::asinh(z_min / z0_);
    x_hi_ = std::asinh(z_max / z0_);
    if (x_hi_ - x_lo_ <= 0.0) x_hi_ = x_lo_ + 1.0;
    y_max_ = y_max > 0.0 ? y_max : 1.0;
  }

  double x(double z) const {
    return kMargin + (std::asinh(z / z0_) - x_lo_) / (x_hi_ - x_lo_) * (kWidth - 2 * kMargin);
  }
  double y(double v) const { return kHeight / 2 - v / y_max_ * (kHeight / 2 - kMargin); }

 private:
  double z0_ = 1.0, x_lo_ = 0.0, x_hi_ = 1.0, y_max_ = 1.0;
};

}  // namespace

std::string render_svg(const Scene& scene) {
  if (scene.kind != Kind::RefocusSection) {
    throw Error(ErrorCode::UnsupportedKind, "only refocus-section scenes can be rendered as SVG");
  }
  const Viewport view(scene);
  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + fmt(kWidth) +
         "\" height=\"" + fmt(kHeight) + "\" viewBox=\"0 0 " + fmt(kWidth) + " " + fmt(kHeight) +
         "\">\n";
  out += "<style>.plane{stroke:#555;stroke-width:1}.ray{fill:none;stroke:#c33;stroke-width:1.2}"
         ".label{font:12px sans-serif;fill:#222}.degenerate{font:12px sans-serif;fill:#b00;"
         "font-style:italic}</style>\n";
  out += "<line x1=\"" + fmt(kMargin) + "\" y1=\"" + fmt(view.y(0.0)) + "\" x2=\"" +
         fmt(kWidth - kMargin) + "\" y2=\"" + fmt(view.y(0.0)) +
         "\" stroke=\"#aaa\" stroke-dasharray=\"4 4\"/>\n";

  int plane_index = 0;
  int note_index = 0;
  for (const Element& e : scene.elements) {
    switch (e.type) {
      case ElementType::Plane: {
        const std::string x = fmt(view.x(*e.z));
        const double label_y = kMargin - 40.0 + 12.0 * (plane_index++ % kLabelRows);
        out += "<g id=\"" + escape(e.id) + "\"><title>" + escape(e.label) + ": z = " +
               fmt(*e.z) + " mm</title>";
        out += "<line class=\"plane\" x1=\"" + x + "\" y1=\"" + fmt(kMargin) + "\" x2=\"" + x +
               "\" y2=\"" + fmt(kHeight - kMargin) + "\"/>";
        out += "<text class=\"label\" x=\"" + x + "\" y=\"" + fmt(label_y) + "\">" +
               escape(e.label) + "</text></g>\n";
        break;
      }
      case ElementType::RaySegment: {
        out += "<polyline class=\"ray\" id=\"" + escape(e.id) + "\" points=\"";
        for (int n = 0; n <= kSegmentSamples; ++n) {
          const double t = static_cast<double>(n) / kSegmentSamples;
          const double z = e.from->z + t * (e.to->z - e.from->z);
          const double y = e.from->y + t * (e.to->y - e.from->y);
          if (n > 0) out += ' ';
          out += fmt(view.x(z)) + "," + fmt(view.y(y));
        }
        out += "\"/>\n";
        break;
      }
      case ElementType::Point:
        out += "<circle id=\"" + escape(e.id) + "\" cx=\"" + fmt(view.x(e.at->z)) + "\" cy=\"" +
               fmt(view.y(e.at->y)) + "\" r=\"3\"/>\n";
        break;
      case ElementType::Label:
        out += "<text class=\"" + std::string(e.degenerate ? "degenerate" : "label") + "\" id=\"" +
               escape(e.id) + "\" x=\"" + fmt(kMargin) + "\" y=\"" +
               fmt(kHeight - kMargin + 20.0 + 14.0 * note_index++) + "\">" + escape(e.label) +
               "</text>\n";
        break;
    }
  }
  out += "</svg>\n";
  return out;
}

}  // namespace plenoptic::scene
