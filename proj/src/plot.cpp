#include "hyper/plot.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "hyper/hyperspace.hpp"

namespace hyper {
namespace {

constexpr double kSize = 800.0;
constexpr double kFrame = 10.0;
constexpr double kScale = kSize / (2.0 * kFrame);

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3f", v);
  return buf;
}

// Data frame [-10, 10]^2 to pixels, y pointing down.
double px(double x) { return (x + kFrame) * kScale; }
double py(double y) { return (kFrame - y) * kScale; }

class Svg {
 public:
  void line(Point a, Point b, const std::string& style) {
    os_ << "  <line x1=\"" << num(px(a.x)) << "\" y1=\"" << num(py(a.y)) << "\" x2=\""
        << num(px(b.x)) << "\" y2=\"" << num(py(b.y)) << "\" " << style << "/>\n";
  }
  void dot(Point p, double r, bool filled, const std::string& color, const std::string& cls) {
    os_ << "  <circle class=\"" << cls << "\" cx=\"" << num(px(p.x)) << "\" cy=\"" << num(py(p.y))
        << "\" r=\"" << num(r) << "\" fill=\"" << (filled ? color : std::string("white"))
        << "\" stroke=\"" << color << "\" stroke-width=\"1.5\"/>\n";
  }
  void ring(double r_in, double r_out, bool in_open, bool out_open) {
    const double cx = px(0.0);
    const double cy = py(0.0);
    const auto circle = [&](double r) {
      const double rp = r * kScale;
      return "M " + num(cx + rp) + " " + num(cy) + " A " + num(rp) + " " + num(rp) + " 0 1 0 " +
             num(cx - rp) + " " + num(cy) + " A " + num(rp) + " " + num(rp) + " 0 1 0 " +
             num(cx + rp) + " " + num(cy) + " Z";
    };
    os_ << "  <path class=\"region\" d=\"" << circle(r_out) << " " << circle(r_in)
        << "\" fill=\"#9ecae1\" fill-opacity=\"0.5\" fill-rule=\"evenodd\" stroke=\"none\"/>\n";
    const auto edge = [&](double r, bool open) {
      os_ << "  <circle cx=\"" << num(cx) << "\" cy=\"" << num(cy) << "\" r=\"" << num(r * kScale)
          << "\" fill=\"none\" stroke=\"#3182bd\" stroke-width=\"1.5\""
          << (open ? " stroke-dasharray=\"6 4\"" : "") << "/>\n";
    };
    edge(r_in, in_open);
    edge(r_out, out_open);
  }
  void label(Point p, const std::string& text) {
    os_ << "  <text x=\"" << num(px(p.x) + 6.0) << "\" y=\"" << num(py(p.y) - 6.0)
        << "\" font-family=\"sans-serif\" font-size=\"14\">" << text << "</text>\n";
  }
  std::ostringstream& raw() { return os_; }

 private:
  std::ostringstream os_;
};

void draw_region(Svg& svg, const HyperSet& s) {
  if (s.is<Singleton>()) {
    svg.dot(s.as<Singleton>().p, 5.0, true, "#3182bd", "region");
  } else if (s.is<RaySegment>()) {
    const auto& v = s.as<RaySegment>();
    const Point lo = v.target * v.lo;
    const Point hi = v.target * v.hi;
    svg.line(lo, hi, "class=\"region\" stroke=\"#3182bd\" stroke-width=\"3\"");
    svg.dot(lo, 4.0, !v.lo_open, "#3182bd", "endpoint");
    svg.dot(hi, 4.0, !v.hi_open, "#3182bd", "endpoint");
  } else if (s.is<Annulus>()) {
    const auto& v = s.as<Annulus>();
    const double len = norm2(v.dir);
    svg.ring(v.lo * len, v.hi * len, v.lo_open, v.hi_open);
  }
}

}  // namespace

std::string plot_svg(const PlotRequest& req) {
  const HypergroupModel& m = req.model;
  Svg svg;
  auto& os = svg.raw();
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"800\" height=\"800\" "
        "viewBox=\"0 0 800 800\">\n"
     << "  <rect width=\"800\" height=\"800\" fill=\"white\"/>\n";
  svg.line({-kFrame, 0.0}, {kFrame, 0.0}, "stroke=\"#bbbbbb\" stroke-width=\"1\"");
  svg.line({0.0, -kFrame}, {0.0, kFrame}, "stroke=\"#bbbbbb\" stroke-width=\"1\"");

  const HyperSet region = sharp(m, req.x, req.y);
  draw_region(svg, region);

  if (req.a) {
    const WeakHVS h{m};
    const HyperSet ax = smul(h, *req.a, req.x);
    if (ax.is<RaySegment>()) {
      const auto& v = ax.as<RaySegment>();
      svg.line(v.target * v.lo, v.target * v.hi,
               "class=\"scalar\" stroke=\"#31a354\" stroke-width=\"2\" stroke-dasharray=\"4 3\"");
      svg.dot(v.target * v.hi, 3.5, !v.hi_open, "#31a354", "scalar-endpoint");
    }
  }

  svg.dot(req.x, 4.0, true, "#333333", "input");
  svg.label(req.x, "x");
  svg.dot(req.y, 4.0, true, "#333333", "input");
  svg.label(req.y, "y");

  if (m.endpoint == EndpointConvention::UpperClosed) {
    const EssentialSet es = essential_points(m, req.x, req.y);
    if (es.is_exact()) {
      for (const Point& e : es.exact()) svg.dot(e, 6.0, true, "#de2d26", "essential");
    } else {
      for (const Point& e : es.region().sample(400, 7)) svg.dot(e, 1.5, true, "#fc9272", "essential-locus");
      const std::vector<Point> marked =
          m.kind == ModelKind::Annulus ? annulus_outer_essentials(req.x, req.y)
                                       : std::vector<Point>{req.x + req.y};
      for (const Point& e : marked) svg.dot(e, 6.0, true, "#de2d26", "essential");
    }
  }
  os << "</svg>\n";
  return os.str();
}

void render_plot(const PlotRequest& req, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open plot output: " + path);
  out << plot_svg(req);
  if (!out) throw std::runtime_error("failed writing plot output: " + path);
}

}  // namespace hyper
