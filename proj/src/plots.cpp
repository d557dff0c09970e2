#include "shortside/plots.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <fstream>

#include <fmt/format.h>

namespace shortside {

namespace {

constexpr double kWidth = 720.0;
constexpr double kHeight = 440.0;
constexpr double kLeft = 90.0;
constexpr double kRight = 24.0;
constexpr double kTop = 48.0;
constexpr double kBottom = 64.0;
constexpr int kTicks = 5;
constexpr std::array<const char*, 4> kColors = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd"};

struct Range {
  double lo;
  double hi;
};

Range padded(double lo, double hi) {
  if (hi > lo) return {lo, hi};
  const double pad = lo == 0.0 ? 1.0 : std::abs(lo) * 0.5;
  return {lo - pad, hi + pad};
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

std::vector<double> column(const SimulationSeries& s, double (*get)(const WeekRecord&)) {
  std::vector<double> out;
  out.reserve(s.records.size());
  for (const auto& r : s.records) out.push_back(get(r));
  return out;
}

}  // namespace

std::vector<Chart> standard_charts(const SimulationSeries& s) {
  const auto weeks = column(s, [](const WeekRecord& r) { return static_cast<double>(r.week); });
  std::vector<Chart> charts;
  charts.push_back({"graph1_capital_labor.svg",
                    "Capital and labour employed",
                    "quantity employed",
                    weeks,
                    {{"capital employed", column(s, [](const WeekRecord& r) { return r.capital_rented(); })},
                     {"labour employed", column(s, [](const WeekRecord& r) { return r.labor_expost(); })}}});
  charts.push_back({"graph2_produced_capital.svg",
                    "Produced capital",
                    "capital goods produced",
                    weeks,
                    {{"produced capital", column(s, [](const WeekRecord& r) { return r.output(Line::Capital); })}}});
  charts.push_back({"graph3_consumption.svg",
                    "Global consumption",
                    "consumer good bought",
                    weeks,
                    {{"consumption", column(s, [](const WeekRecord& r) { return r.consumption_expost(); })}}});
  charts.push_back({"graph4_real_wage.svg",
                    "Real wage",
                    "wage / consumer-good price",
                    weeks,
                    {{"p_w / p_c", column(s, [](const WeekRecord& r) { return r.real_wage_ratio; })}}});
  return charts;
}

std::string render_svg(const Chart& chart) {
  if (chart.weeks.empty()) throw EmptySeries("render_svg: chart has no points");

  const auto [wmin, wmax] = std::minmax_element(chart.weeks.begin(), chart.weeks.end());
  const Range xr = padded(*wmin, *wmax);
  double ymin = 0.0;
  double ymax = 0.0;
  for (const auto& s : chart.series) {
    for (double v : s.values) {
      ymin = std::min(ymin, v);
      ymax = std::max(ymax, v);
    }
  }
  const Range yr = padded(ymin, ymax);

  const double plot_w = kWidth - kLeft - kRight;
  const double plot_h = kHeight - kTop - kBottom;
  auto sx = [&](double x) { return kLeft + (x - xr.lo) / (xr.hi - xr.lo) * plot_w; };
  auto sy = [&](double y) { return kTop + plot_h - (y - yr.lo) / (yr.hi - yr.lo) * plot_h; };

  std::string out;
  out += fmt::format(
      "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{0}\" height=\"{1}\" viewBox=\"0 0 {0} {1}\" "
      "font-family=\"sans-serif\" font-size=\"12\">\n",
      kWidth, kHeight);
  out += fmt::format("<title>{}</title>\n", escape(chart.title));
  out += fmt::format("<rect x=\"0\" y=\"0\" width=\"{}\" height=\"{}\" fill=\"white\"/>\n", kWidth, kHeight);
  out += fmt::format("<text x=\"{:.2f}\" y=\"28\" text-anchor=\"middle\" font-size=\"16\">{}</text>\n",
                     kWidth / 2.0, escape(chart.title));

  // Axes and ticks.
  out += fmt::format("<g stroke=\"#333\" stroke-width=\"1\">\n");
  out += fmt::format("<line x1=\"{0:.2f}\" y1=\"{1:.2f}\" x2=\"{2:.2f}\" y2=\"{1:.2f}\"/>\n", kLeft,
                     kTop + plot_h, kLeft + plot_w);
  out += fmt::format("<line x1=\"{0:.2f}\" y1=\"{1:.2f}\" x2=\"{0:.2f}\" y2=\"{2:.2f}\"/>\n", kLeft, kTop,
                     kTop + plot_h);
  out += "</g>\n<g fill=\"#333\">\n";
  for (int i = 0; i <= kTicks; ++i) {
    const double t = static_cast<double>(i) / kTicks;
    const double xv = xr.lo + t * (xr.hi - xr.lo);
    const double yv = yr.lo + t * (yr.hi - yr.lo);
    out += fmt::format("<text x=\"{:.2f}\" y=\"{:.2f}\" text-anchor=\"middle\">{:.4g}</text>\n", sx(xv),
                       kTop + plot_h + 18.0, xv);
    out += fmt::format("<text x=\"{:.2f}\" y=\"{:.2f}\" text-anchor=\"end\">{:.4g}</text>\n", kLeft - 6.0,
                       sy(yv) + 4.0, yv);
  }
  out += fmt::format("<text x=\"{:.2f}\" y=\"{:.2f}\" text-anchor=\"middle\">week</text>\n",
                     kLeft + plot_w / 2.0, kHeight - 18.0);
  out += fmt::format(
      "<text x=\"18\" y=\"{0:.2f}\" text-anchor=\"middle\" transform=\"rotate(-90 18 {0:.2f})\">{1}</text>\n",
      kTop + plot_h / 2.0, escape(chart.y_label));
  out += "</g>\n";

  for (std::size_t k = 0; k < chart.series.size(); ++k) {
    const auto& s = chart.series[k];
    const char* color = kColors[k % kColors.size()];
    std::string points;
    std::string values;
    for (std::size_t i = 0; i < s.values.size() && i < chart.weeks.size(); ++i) {
      if (i > 0) {
        points += ' ';
        values += ' ';
      }
      points += fmt::format("{:.2f},{:.2f}", sx(chart.weeks[i]), sy(s.values[i]));
      values += fmt::format("{}", s.values[i]);
    }
    out += fmt::format(
        "<polyline fill=\"none\" stroke=\"{}\" stroke-width=\"1.5\" data-label=\"{}\" data-values=\"{}\" "
        "points=\"{}\"/>\n",
        color, escape(s.label), values, points);
    if (s.values.size() == 1) {
      out += fmt::format("<circle cx=\"{:.2f}\" cy=\"{:.2f}\" r=\"3\" fill=\"{}\"/>\n", sx(chart.weeks[0]),
                         sy(s.values[0]), color);
    }
    const double ly = kTop + 14.0 + 16.0 * static_cast<double>(k);
    out += fmt::format(
        "<line x1=\"{0:.2f}\" y1=\"{1:.2f}\" x2=\"{2:.2f}\" y2=\"{1:.2f}\" stroke=\"{3}\" stroke-width=\"2\"/>\n",
        kLeft + plot_w - 150.0, ly - 4.0, kLeft + plot_w - 130.0, color);
    out += fmt::format("<text x=\"{:.2f}\" y=\"{:.2f}\">{}</text>\n", kLeft + plot_w - 124.0, ly,
                       escape(s.label));
  }
  out += "</svg>\n";
  return out;
}

std::vector<std::filesystem::path> emit_plots(const SimulationSeries& series,
                                              const std::filesystem::path& out_dir) {
  if (series.records.empty()) throw EmptySeries("emit_plots: series has no weeks");
  std::filesystem::create_directories(out_dir);
  std::vector<std::filesystem::path> written;
  for (const auto& chart : standard_charts(series)) {
    const auto path = out_dir / chart.file_name;
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error(fmt::format("cannot write '{}'", path.string()));
    out << render_svg(chart);
    written.push_back(path);
  }
  return written;
}

}  // namespace shortside
