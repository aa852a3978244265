#include "specvar/svg.hpp"

#include <cstdio>
#include <sstream>

namespace specvar {

namespace {

constexpr double kMid = 500.0;
constexpr double kScale = 450.0;

double sx(cplx z) { return kMid + kScale * z.real(); }
double sy(cplx z) { return kMid - kScale * z.imag(); }

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  return buf;
}

void disk(std::ostringstream& os, const LocalizationDisk& d, const char* color) {
  if (d.radius == 0.0) {
    os << "<circle cx=\"" << fmt(sx(d.center)) << "\" cy=\"" << fmt(sy(d.center))
       << "\" r=\"2\" fill=\"" << color << "\"/>\n";
    return;
  }
  os << "<circle cx=\"" << fmt(sx(d.center)) << "\" cy=\"" << fmt(sy(d.center)) << "\" r=\""
     << fmt(kScale * d.radius) << "\" fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\"";
  if (d.vacuous) os << " stroke-dasharray=\"8 6\"";
  os << "/>\n";
}

}  // namespace

std::string render_svg(const LocalizationScene& scene) {
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 1000 1000\" width=\"1000\" height=\"1000\">\n";
  os << "<!-- x = 500 + 450*Re(z), y = 500 - 450*Im(z); " << scene.options.label << " -->\n";
  os << "<rect width=\"1000\" height=\"1000\" fill=\"white\"/>\n";
  os << "<circle cx=\"500\" cy=\"500\" r=\"450\" fill=\"none\" stroke=\"black\" stroke-width=\"1\"/>\n";
  os << "<line x1=\"40\" y1=\"500\" x2=\"960\" y2=\"500\" stroke=\"#bbb\" stroke-width=\"0.5\"/>\n";
  os << "<line x1=\"500\" y1=\"40\" x2=\"500\" y2=\"960\" stroke=\"#bbb\" stroke-width=\"0.5\"/>\n";
  os << "<g class=\"euclid\">\n";
  for (const auto& d : scene.euclid) disk(os, d, "blue");
  os << "</g>\n<g class=\"hyper\">\n";
  for (const auto& d : scene.hyper) disk(os, d, "red");
  os << "</g>\n<g class=\"sigma-a\" stroke=\"black\" stroke-width=\"1.5\">\n";
  for (const cplx z : scene.sigma_a) {
    const double x = sx(z);
    const double y = sy(z);
    os << "<path d=\"M" << fmt(x - 5) << ' ' << fmt(y - 5) << " L" << fmt(x + 5) << ' ' << fmt(y + 5) << " M"
       << fmt(x - 5) << ' ' << fmt(y + 5) << " L" << fmt(x + 5) << ' ' << fmt(y - 5) << "\"/>\n";
  }
  os << "</g>\n<g class=\"sigma-b\" fill=\"green\">\n";
  for (const cplx z : scene.sigma_b) {
    os << "<circle cx=\"" << fmt(sx(z)) << "\" cy=\"" << fmt(sy(z)) << "\" r=\"1.5\"/>\n";
  }
  os << "</g>\n</svg>\n";
  return os.str();
}

}  // namespace specvar
