#include "entlab/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <map>

namespace entlab::svg {

namespace {

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", x);
  return buf;
}

const std::map<std::string, std::string>& palette() {
  static const std::map<std::string, std::string> colors = {
      {"werner", "#1f77b4"}, {"pure", "#d62728"}, {"random", "#7f7f7f"}};
  return colors;
}

}  // namespace

std::string diagram_scatter(const std::vector<DiagramPoint>& points,
                            const std::string& title) {
  const double width = 560, height = 560;
  const double ml = 70, mr = 30, mt = 50, mb = 60;
  const double pw = width - ml - mr, ph = height - mt - mb;

  double max_val = 1.0;
  for (const DiagramPoint& pt : points) {
    max_val = std::max({max_val, pt.e_in, pt.e_out});
  }

  const auto sx = [&](double v) { return ml + pw * v / max_val; };
  const auto sy = [&](double v) { return mt + ph * (1.0 - v / max_val); };

  std::string out;
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(width) +
         "\" height=\"" + num(height) + "\" viewBox=\"0 0 " + num(width) + " " +
         num(height) + "\">\n";
  out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out += "<text x=\"" + num(width / 2) +
         "\" y=\"24\" text-anchor=\"middle\" font-family=\"sans-serif\" "
         "font-size=\"15\">" + title + "</text>\n";

  // axes
  out += "<path d=\"M " + num(ml) + " " + num(mt) + " L " + num(ml) + " " +
         num(mt + ph) + " L " + num(ml + pw) + " " + num(mt + ph) +
         "\" stroke=\"black\" fill=\"none\"/>\n";
  for (int i = 0; i <= 4; ++i) {
    const double v = max_val * i / 4.0;
    out += "<text x=\"" + num(sx(v)) + "\" y=\"" + num(mt + ph + 22) +
           "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
           "font-size=\"11\">" + num(v) + "</text>\n";
    out += "<text x=\"" + num(ml - 8) + "\" y=\"" + num(sy(v) + 4) +
           "\" text-anchor=\"end\" font-family=\"sans-serif\" "
           "font-size=\"11\">" + num(v) + "</text>\n";
    out += "<line x1=\"" + num(sx(v)) + "\" y1=\"" + num(mt + ph) + "\" x2=\"" +
           num(sx(v)) + "\" y2=\"" + num(mt + ph + 5) + "\" stroke=\"black\"/>\n";
    out += "<line x1=\"" + num(ml - 5) + "\" y1=\"" + num(sy(v)) + "\" x2=\"" +
           num(ml) + "\" y2=\"" + num(sy(v)) + "\" stroke=\"black\"/>\n";
  }
  out += "<text x=\"" + num(ml + pw / 2) + "\" y=\"" + num(height - 14) +
         "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
         "font-size=\"13\">E_in</text>\n";
  out += "<text x=\"18\" y=\"" + num(mt + ph / 2) +
         "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\" "
         "transform=\"rotate(-90 18 " + num(mt + ph / 2) + ")\">E_out</text>\n";

  // reference line E_out = E_in
  out += "<line x1=\"" + num(sx(0)) + "\" y1=\"" + num(sy(0)) + "\" x2=\"" +
         num(sx(max_val)) + "\" y2=\"" + num(sy(max_val)) +
         "\" stroke=\"#999999\" stroke-dasharray=\"5,4\"/>\n";

  for (const DiagramPoint& pt : points) {
    std::string color = "#2ca02c";
    const auto it = palette().find(pt.family);
    if (it != palette().end()) color = it->second;
    out += "<circle cx=\"" + num(sx(pt.e_in)) + "\" cy=\"" + num(sy(pt.e_out)) +
           "\" r=\"2.4\" fill=\"" + color + "\" fill-opacity=\"0.8\"/>\n";
  }

  // legend
  double ly = mt + 12;
  for (const auto& [family, color] : palette()) {
    bool present = false;
    for (const DiagramPoint& pt : points) {
      if (pt.family == family) {
        present = true;
        break;
      }
    }
    if (!present) continue;
    out += "<circle cx=\"" + num(ml + 14) + "\" cy=\"" + num(ly) +
           "\" r=\"4\" fill=\"" + color + "\"/>\n";
    out += "<text x=\"" + num(ml + 24) + "\" y=\"" + num(ly + 4) +
           "\" font-family=\"sans-serif\" font-size=\"12\">" + family +
           "</text>\n";
    ly += 18;
  }

  out += "</svg>\n";
  return out;
}

}  // namespace entlab::svg
