#include "svg.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace bsp::cli {

namespace {

constexpr double kWidth = 640, kHeight = 480;
constexpr double kLeft = 70, kRight = 20, kTop = 40, kBottom = 60;

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string escape(const std::string& s) {
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

// Smallest "nice" step (1, 2 or 5 times a power of ten) giving at most 10 ticks.
std::int64_t tick_step(std::int64_t max) {
  std::int64_t p = 1;
  while (true) {
    for (std::int64_t m : {1, 2, 5})
      if (max / (m * p) <= 10) return m * p;
    p *= 10;
  }
}

std::int64_t round_up(std::int64_t v, std::int64_t step) { return (v + step - 1) / step * step; }

}  // namespace

std::string emit_scatter(const ScatterSpec& spec) {
  std::int64_t xmax = 1, ymax = 1;
  for (const auto& [x, y] : spec.points) {
    xmax = std::max(xmax, x);
    ymax = std::max(ymax, y);
  }
  for (const auto& o : spec.overlays)
    if (o.kind == Overlay::Kind::horizontal) ymax = std::max(ymax, o.value);
  if (spec.points.empty()) xmax = ymax = std::max<std::int64_t>(ymax, 10);
  const std::int64_t xstep = tick_step(xmax + 1), ystep = tick_step(ymax + 1);
  xmax = round_up(xmax + 1, xstep);
  ymax = round_up(ymax + 1, ystep);

  const double pw = kWidth - kLeft - kRight, ph = kHeight - kTop - kBottom;
  auto sx = [&](double x) { return kLeft + pw * x / static_cast<double>(xmax); };
  auto sy = [&](double y) { return kTop + ph * (1 - y / static_cast<double>(ymax)); };

  std::ostringstream o;
  o << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
    << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\"" << kHeight
    << "\" viewBox=\"0 0 " << kWidth << ' ' << kHeight << "\" font-family=\"sans-serif\" font-size=\"12\">\n"
    << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  if (!spec.title.empty())
    o << "<text x=\"" << num(kWidth / 2) << "\" y=\"24\" text-anchor=\"middle\" font-size=\"15\">"
      << escape(spec.title) << "</text>\n";

  o << "<g stroke=\"black\" stroke-width=\"1\">\n"
    << "<line x1=\"" << num(sx(0)) << "\" y1=\"" << num(sy(0)) << "\" x2=\"" << num(sx(double(xmax))) << "\" y2=\""
    << num(sy(0)) << "\"/>\n"
    << "<line x1=\"" << num(sx(0)) << "\" y1=\"" << num(sy(0)) << "\" x2=\"" << num(sx(0)) << "\" y2=\""
    << num(sy(double(ymax))) << "\"/>\n"
    << "</g>\n<g>\n";
  for (std::int64_t t = 0; t <= xmax; t += xstep) {
    const double x = sx(double(t));
    o << "<line x1=\"" << num(x) << "\" y1=\"" << num(sy(0)) << "\" x2=\"" << num(x) << "\" y2=\"" << num(sy(0) + 5)
      << "\" stroke=\"black\"/><text x=\"" << num(x) << "\" y=\"" << num(sy(0) + 18) << "\" text-anchor=\"middle\">"
      << t << "</text>\n";
  }
  for (std::int64_t t = 0; t <= ymax; t += ystep) {
    const double y = sy(double(t));
    o << "<line x1=\"" << num(sx(0) - 5) << "\" y1=\"" << num(y) << "\" x2=\"" << num(sx(0)) << "\" y2=\"" << num(y)
      << "\" stroke=\"black\"/><text x=\"" << num(sx(0) - 8) << "\" y=\"" << num(y + 4) << "\" text-anchor=\"end\">"
      << t << "</text>\n";
  }
  o << "</g>\n";
  if (!spec.x_label.empty())
    o << "<text x=\"" << num(kLeft + pw / 2) << "\" y=\"" << num(kHeight - 15) << "\" text-anchor=\"middle\">"
      << escape(spec.x_label) << "</text>\n";
  if (!spec.y_label.empty())
    o << "<text x=\"18\" y=\"" << num(kTop + ph / 2) << "\" text-anchor=\"middle\" transform=\"rotate(-90 18 "
      << num(kTop + ph / 2) << ")\">" << escape(spec.y_label) << "</text>\n";

  for (std::size_t i = 0; i < spec.overlays.size(); ++i) {
    const auto& ov = spec.overlays[i];
    const char* colors[] = {"#c0392b", "#2471a3", "#239b56"};
    const char* color = colors[i % 3];
    double lx = 0, ly = 0;
    if (ov.kind == Overlay::Kind::horizontal) {
      const double y = sy(double(ov.value));
      o << "<line x1=\"" << num(sx(0)) << "\" y1=\"" << num(y) << "\" x2=\"" << num(sx(double(xmax))) << "\" y2=\""
        << num(y) << "\" stroke=\"" << color << "\" stroke-dasharray=\"6 4\"/>\n";
      lx = sx(double(xmax)) - 4;
      ly = y - 6;
    } else {
      // x*y = c, sampled from where it enters the plot to the right edge.
      const double c = double(ov.value);
      const double x0 = std::max(c / double(ymax), 1e-9), x1 = double(xmax);
      o << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-dasharray=\"6 4\" points=\"";
      constexpr int kSamples = 200;
      for (int s = 0; s <= kSamples; ++s) {
        const double x = x0 + (x1 - x0) * s / kSamples;
        o << (s ? " " : "") << num(sx(x)) << ',' << num(sy(c / x));
      }
      o << "\"/>\n";
      lx = sx(x1) - 4;
      ly = sy(c / x1) - 6;
    }
    if (!ov.label.empty())
      o << "<text x=\"" << num(lx) << "\" y=\"" << num(ly) << "\" text-anchor=\"end\" fill=\"" << color << "\">"
        << escape(ov.label) << "</text>\n";
  }

  auto pts = spec.points;
  std::sort(pts.begin(), pts.end());
  o << "<g fill=\"black\">\n";
  for (const auto& [x, y] : pts)
    o << "<circle cx=\"" << num(sx(double(x))) << "\" cy=\"" << num(sy(double(y))) << "\" r=\"2.5\"/>\n";
  o << "</g>\n</svg>\n";
  return o.str();
}

}  // namespace bsp::cli
