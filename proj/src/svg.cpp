#include "tspn/svg.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace tspn {

namespace {

const char* kPalette[] = {"#d62728", "#1f77b4", "#2ca02c", "#9467bd",
                          "#ff7f0e", "#17becf"};

std::string num(double v) {
  std::ostringstream ss;
  ss.precision(10);
  ss << v;
  return ss.str();
}

// path data for one tour; arcs use native A commands (full circles split in
// two halves since SVG arcs cannot close on themselves)
std::string tour_path(const Tour& t) {
  std::ostringstream d;
  bool first = true;
  for (const auto& e : t.elements) {
    Point s = element_start(e);
    if (first) {
      d << "M " << num(s.x) << " " << num(s.y) << " ";
      first = false;
    }
    if (const auto* seg = std::get_if<Segment>(&e)) {
      d << "L " << num(seg->b.x) << " " << num(seg->b.y) << " ";
    } else {
      const Arc& a = std::get<Arc>(e);
      auto emit = [&](double sweep, double from) {
        Point end = a.point_at(from + sweep);
        int large = std::abs(sweep) > kPi ? 1 : 0;
        int dir = sweep > 0 ? 1 : 0;
        d << "A " << num(a.radius) << " " << num(a.radius) << " 0 " << large
          << " " << dir << " " << num(end.x) << " " << num(end.y) << " ";
      };
      if (std::abs(a.sweep) > 2.0 * kPi - 1e-9) {
        emit(a.sweep / 2.0, a.start_angle);
        emit(a.sweep / 2.0, a.start_angle + a.sweep / 2.0);
      } else {
        emit(a.sweep, a.start_angle);
      }
    }
  }
  d << "Z";
  return d.str();
}

void append_region(std::ostringstream& out, const Region& r, const Rectangle& view) {
  if (const auto* p = std::get_if<Point>(&r)) {
    out << "  <circle cx=\"" << num(p->x) << "\" cy=\"" << num(p->y)
        << "\" r=\"" << num(0.01 * (view.x2 - view.x1)) << "\" fill=\"#888\"/>\n";
  } else if (const auto* s = std::get_if<Segment>(&r)) {
    out << "  <line x1=\"" << num(s->a.x) << "\" y1=\"" << num(s->a.y)
        << "\" x2=\"" << num(s->b.x) << "\" y2=\"" << num(s->b.y)
        << "\" stroke=\"#888\" stroke-width=\"" << num(0.006 * (view.x2 - view.x1))
        << "\"/>\n";
  } else if (const auto* d = std::get_if<Disk>(&r)) {
    out << "  <circle cx=\"" << num(d->center.x) << "\" cy=\"" << num(d->center.y)
        << "\" r=\"" << num(d->radius)
        << "\" fill=\"#cccccc\" fill-opacity=\"0.6\" stroke=\"#888\" "
           "stroke-width=\""
        << num(0.003 * (view.x2 - view.x1)) << "\"/>\n";
  } else if (const auto* poly = std::get_if<PolygonRegion>(&r)) {
    out << "  <polygon points=\"";
    for (const auto& v : poly->vertices) out << num(v.x) << "," << num(v.y) << " ";
    out << "\" fill=\"#cccccc\" fill-opacity=\"0.6\" stroke=\"#888\" "
           "stroke-width=\""
        << num(0.003 * (view.x2 - view.x1)) << "\"/>\n";
  } else {
    const Line& l = std::get<Line>(r);
    // clip the line to the view box by walking far along its direction
    Point mid{0.5 * (view.x1 + view.x2), 0.5 * (view.y1 + view.y2)};
    Point foot = project_onto_line(l, mid);
    Point dir{-l.b, l.a};
    double span = std::hypot(view.x2 - view.x1, view.y2 - view.y1);
    Point a = foot - span * dir;
    Point b = foot + span * dir;
    out << "  <line x1=\"" << num(a.x) << "\" y1=\"" << num(a.y) << "\" x2=\""
        << num(b.x) << "\" y2=\"" << num(b.y)
        << "\" stroke=\"#888\" stroke-width=\"" << num(0.004 * span) << "\"/>\n";
  }
}

}  // namespace

std::string render_svg(const Instance& inst,
                       const std::vector<std::pair<Tour, std::string>>& tours) {
  Rectangle box = instance_bbox(inst);
  double w = std::max(box.x2 - box.x1, 1e-6);
  double h = std::max(box.y2 - box.y1, 1e-6);
  Rectangle view{box.x1 - 0.1 * w, box.x2 + 0.1 * w, box.y1 - 0.1 * h,
                 box.y2 + 0.1 * h};
  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\""
      << num(view.x1) << " " << num(-view.y2) << " " << num(view.x2 - view.x1)
      << " " << num(view.y2 - view.y1) << "\">\n";
  // mathematical y-up coordinates
  out << " <g transform=\"scale(1,-1)\">\n";
  for (const auto& r : inst.regions) append_region(out, r, view);
  for (size_t i = 0; i < tours.size(); ++i) {
    const auto& [tour, label] = tours[i];
    if (tour.empty()) continue;
    const char* color = kPalette[i % (sizeof(kPalette) / sizeof(kPalette[0]))];
    out << "  <path d=\"" << tour_path(tour) << "\" fill=\"none\" stroke=\""
        << color << "\" stroke-width=\"" << num(0.006 * (view.x2 - view.x1))
        << "\"><title>" << label << "</title></path>\n";
  }
  out << " </g>\n";
  double ty = -view.y2;
  for (size_t i = 0; i < tours.size(); ++i) {
    const char* color = kPalette[i % (sizeof(kPalette) / sizeof(kPalette[0]))];
    ty += 0.04 * h;
    out << " <text x=\"" << num(view.x1 + 0.02 * w) << "\" y=\"" << num(ty)
        << "\" font-size=\"" << num(0.03 * h) << "\" fill=\"" << color << "\">"
        << tours[i].second << "</text>\n";
  }
  out << "</svg>\n";
  return out.str();
}

void render_svg_file(const Instance& inst,
                     const std::vector<std::pair<Tour, std::string>>& tours,
                     const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << render_svg(inst, tours);
}

}  // namespace tspn
