// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 slpris authors

#include "slpris/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>

#include "slpris/errors.hpp"

namespace slpris {

namespace {

std::string fmt(const char* spec, double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), spec, v);
  return buf;
}

std::string num(double v) { return fmt("%.10g", v); }
std::string num_exact(double v) { return fmt("%.17g", v); }

constexpr const char* kPalette[] = {
    "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b",
};

}  // namespace

std::string sweep_csv(const std::vector<SweepRow>& rows) {
  std::string out = "scheme,sweep_value,avg_power_dbm,trials,std_dev_db\n";
  for (const SweepRow& r : rows) {
    out += scheme_tag(r.scheme);
    out += ',';
    out += num(r.sweep_value);
    out += ',';
    out += num(r.avg_power_dbm);
    out += ',';
    out += std::to_string(r.trials);
    out += ',';
    out += num(r.std_dev_db);
    out += '\n';
  }
  return out;
}

std::string raw_csv(const std::vector<TrialRecord>& raw, std::uint64_t seed) {
  std::string out = "seed,realization,block,scheme,power_linear\n";
  for (const TrialRecord& r : raw) {
    out += std::to_string(seed);
    out += ',';
    out += std::to_string(r.realization);
    out += ',';
    out += std::to_string(r.block);
    out += ',';
    out += scheme_tag(r.scheme);
    out += ',';
    out += num_exact(r.power_linear);
    out += '\n';
  }
  return out;
}

std::string sweep_svg(const std::vector<SweepRow>& rows, const std::string& x_label) {
  constexpr int kWidth = 860, kHeight = 520;
  constexpr double kLeft = 70, kRight = 660, kTop = 30, kBottom = 470;

  // Series keyed by scheme, points ordered by first appearance.
  std::vector<SchemeId> order;
  std::map<SchemeId, std::vector<std::pair<double, double>>> series;
  double xmin = 0, xmax = 1, ymin = 0, ymax = 1;
  bool have = false;
  for (const SweepRow& r : rows) {
    if (std::isnan(r.avg_power_dbm)) continue;
    if (!series.contains(r.scheme)) order.push_back(r.scheme);
    series[r.scheme].push_back({r.sweep_value, r.avg_power_dbm});
    if (!have) {
      xmin = xmax = r.sweep_value;
      ymin = ymax = r.avg_power_dbm;
      have = true;
    } else {
      xmin = std::min(xmin, r.sweep_value);
      xmax = std::max(xmax, r.sweep_value);
      ymin = std::min(ymin, r.avg_power_dbm);
      ymax = std::max(ymax, r.avg_power_dbm);
    }
  }
  if (xmax == xmin) xmax = xmin + 1;
  if (ymax == ymin) ymax = ymin + 1;
  const double ypad = 0.05 * (ymax - ymin);
  ymin -= ypad;
  ymax += ypad;

  auto sx = [&](double x) { return kLeft + (x - xmin) / (xmax - xmin) * (kRight - kLeft); };
  auto sy = [&](double y) { return kBottom - (y - ymin) / (ymax - ymin) * (kBottom - kTop); };

  std::string svg;
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(kWidth) +
         "\" height=\"" + std::to_string(kHeight) + "\">\n";
  svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  svg += "<line x1=\"" + fmt("%.2f", kLeft) + "\" y1=\"" + fmt("%.2f", kBottom) + "\" x2=\"" +
         fmt("%.2f", kRight) + "\" y2=\"" + fmt("%.2f", kBottom) +
         "\" stroke=\"black\" stroke-width=\"1\"/>\n";
  svg += "<line x1=\"" + fmt("%.2f", kLeft) + "\" y1=\"" + fmt("%.2f", kTop) + "\" x2=\"" +
         fmt("%.2f", kLeft) + "\" y2=\"" + fmt("%.2f", kBottom) +
         "\" stroke=\"black\" stroke-width=\"1\"/>\n";

  // Axis ticks: x at each distinct sweep value, y on 5 even divisions.
  std::vector<double> xticks;
  for (const SweepRow& r : rows)
    if (std::find(xticks.begin(), xticks.end(), r.sweep_value) == xticks.end())
      xticks.push_back(r.sweep_value);
  std::sort(xticks.begin(), xticks.end());
  for (double t : xticks) {
    svg += "<line x1=\"" + fmt("%.2f", sx(t)) + "\" y1=\"" + fmt("%.2f", kBottom) + "\" x2=\"" +
           fmt("%.2f", sx(t)) + "\" y2=\"" + fmt("%.2f", kBottom + 5) + "\" stroke=\"black\"/>\n";
    svg += "<text x=\"" + fmt("%.2f", sx(t)) + "\" y=\"" + fmt("%.2f", kBottom + 20) +
           "\" font-size=\"12\" text-anchor=\"middle\">" + num(t) + "</text>\n";
  }
  for (int i = 0; i <= 5; ++i) {
    const double y = ymin + (ymax - ymin) * i / 5.0;
    svg += "<line x1=\"" + fmt("%.2f", kLeft - 5) + "\" y1=\"" + fmt("%.2f", sy(y)) + "\" x2=\"" +
           fmt("%.2f", kLeft) + "\" y2=\"" + fmt("%.2f", sy(y)) + "\" stroke=\"black\"/>\n";
    svg += "<text x=\"" + fmt("%.2f", kLeft - 10) + "\" y=\"" + fmt("%.2f", sy(y) + 4) +
           "\" font-size=\"12\" text-anchor=\"end\">" + fmt("%.1f", y) + "</text>\n";
  }
  svg += "<text x=\"" + fmt("%.2f", (kLeft + kRight) / 2) + "\" y=\"" +
         fmt("%.2f", kBottom + 40) + "\" font-size=\"14\" text-anchor=\"middle\">" + x_label +
         "</text>\n";
  svg += "<text x=\"18\" y=\"" + fmt("%.2f", (kTop + kBottom) / 2) +
         "\" font-size=\"14\" text-anchor=\"middle\" transform=\"rotate(-90 18 " +
         fmt("%.2f", (kTop + kBottom) / 2) + ")\">average transmit power (dBm)</text>\n";

  int color = 0;
  double legend_y = kTop + 10;
  for (SchemeId id : order) {
    auto pts = series[id];
    std::sort(pts.begin(), pts.end());
    std::string poly;
    for (const auto& [x, y] : pts) {
      poly += fmt("%.2f", sx(x)) + "," + fmt("%.2f", sy(y)) + " ";
    }
    const char* col = kPalette[color % 6];
    svg += "<polyline fill=\"none\" stroke=\"" + std::string(col) +
           "\" stroke-width=\"2\" points=\"" + poly + "\"/>\n";
    for (const auto& [x, y] : pts)
      svg += "<circle cx=\"" + fmt("%.2f", sx(x)) + "\" cy=\"" + fmt("%.2f", sy(y)) +
             "\" r=\"3\" fill=\"" + col + "\"/>\n";
    svg += "<line x1=\"" + fmt("%.2f", kRight + 15) + "\" y1=\"" + fmt("%.2f", legend_y) +
           "\" x2=\"" + fmt("%.2f", kRight + 45) + "\" y2=\"" + fmt("%.2f", legend_y) +
           "\" stroke=\"" + col + "\" stroke-width=\"2\"/>\n";
    svg += "<text x=\"" + fmt("%.2f", kRight + 50) + "\" y=\"" + fmt("%.2f", legend_y + 4) +
           "\" font-size=\"12\">" + scheme_tag(id) + "</text>\n";
    legend_y += 20;
    ++color;
  }
  svg += "</svg>\n";
  return svg;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open for writing: " + path);
  out << content;
  if (!out) throw IoError("write failed: " + path);
}

}  // namespace slpris
