#include "kakutani/svg.hpp"

#include <cmath>
#include <set>
#include <sstream>

namespace kak {

namespace {

constexpr double kWidth = 840.0;
constexpr double kMarginX = 60.0;
constexpr double kRowStep = 44.0;

double xpos(const Rational& v) { return kMarginX + v.get_d() * (kWidth - 2 * kMarginX); }

}  // namespace

std::string partitions_svg(const std::vector<PartitionLevel>& levels) {
  double height = kRowStep * (static_cast<double>(levels.size()) + 1);
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\"" << height
      << "\">\n";
  std::set<Rational> seen;
  for (std::size_t row = 0; row < levels.size(); ++row) {
    double y = kRowStep * (static_cast<double>(row) + 1);
    out << "<text x=\"8\" y=\"" << y + 4 << "\" font-size=\"13\">P" << row << "</text>\n";
    out << "<line x1=\"" << xpos(Rational(0)) << "\" y1=\"" << y << "\" x2=\"" << xpos(Rational(1))
        << "\" y2=\"" << y << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
    for (const auto& e : levels[row].entries) {
      for (const Rational& endp : {e.left, Rational(e.left + e.length)}) {
        double x = xpos(endp);
        out << "<line x1=\"" << x << "\" y1=\"" << y - 6 << "\" x2=\"" << x << "\" y2=\"" << y + 6
            << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
      }
      if (!seen.count(e.left)) {
        seen.insert(e.left);
        out << "<text x=\"" << xpos(e.left) << "\" y=\"" << y - 9
            << "\" font-size=\"10\" text-anchor=\"middle\">" << to_pq(e.left) << "</text>\n";
      }
    }
  }
  out << "</svg>\n";
  return out.str();
}

std::string discrepancy_svg(const std::vector<DiscrepancyValue>& curve) {
  double w = 640, h = 420, m = 50;
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h
      << "\">\n";
  if (!curve.empty()) {
    double xmin = 1e300, xmax = -1e300, ymin = 1e300, ymax = -1e300;
    std::vector<std::pair<double, double>> pts;
    for (const auto& d : curve) {
      double x = -std::log10(d.lambda.get_d());
      double y = std::log10(d.extreme.get_d());
      pts.emplace_back(x, y);
      xmin = std::min(xmin, x);
      xmax = std::max(xmax, x);
      ymin = std::min(ymin, y);
      ymax = std::max(ymax, y);
    }
    if (xmax == xmin) xmax = xmin + 1;
    if (ymax == ymin) ymax = ymin + 1;
    out << "<rect x=\"" << m << "\" y=\"" << m << "\" width=\"" << w - 2 * m << "\" height=\""
        << h - 2 * m << "\" fill=\"none\" stroke=\"black\"/>\n<polyline fill=\"none\" "
        << "stroke=\"black\" stroke-width=\"1.5\" points=\"";
    for (const auto& [x, y] : pts) {
      double px = m + (x - xmin) / (xmax - xmin) * (w - 2 * m);
      double py = m + (ymax - y) / (ymax - ymin) * (h - 2 * m);
      out << px << "," << py << " ";
    }
    out << "\"/>\n<text x=\"" << w / 2 << "\" y=\"" << h - 12
        << "\" font-size=\"12\" text-anchor=\"middle\">-log10(lambda)</text>\n<text x=\"14\" y=\""
        << h / 2 << "\" font-size=\"12\">log10(D)</text>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace kak
