#include "shortside/export.hpp"

#include <stdexcept>

#include <fmt/format.h>
#include <json.hpp>

namespace shortside {

namespace {

struct Column {
  const char* name;
  double (*value)(const WeekRecord&);
};

// Integer-valued columns are stored as doubles here and printed without a
// fractional part by the shortest round-trip formatter.
const std::vector<Column>& columns() {
  static const std::vector<Column> table = {
      {"week", [](const WeekRecord& r) { return static_cast<double>(r.week); }},
      {"p_c", [](const WeekRecord& r) { return r.prices_before.p_c; }},
      {"p_nk", [](const WeekRecord& r) { return r.prices_before.p_nk; }},
      {"p_ok", [](const WeekRecord& r) { return r.prices_before.p_ok; }},
      {"p_w", [](const WeekRecord& r) { return r.prices_before.p_w; }},
      {"K_stock", [](const WeekRecord& r) { return r.capital_stock; }},
      {"labor_exante", [](const WeekRecord& r) { return r.labor_exante(); }},
      {"labor_expost", [](const WeekRecord& r) { return r.labor_expost(); }},
      {"capital_rented", [](const WeekRecord& r) { return r.capital_rented(); }},
      {"output_consumer", [](const WeekRecord& r) { return r.output(Line::Consumer); }},
      {"output_capital", [](const WeekRecord& r) { return r.output(Line::Capital); }},
      {"consumption_expost", [](const WeekRecord& r) { return r.consumption_expost(); }},
      {"newcap_expost", [](const WeekRecord& r) { return r.new_capital_expost(); }},
      {"real_wage_ratio", [](const WeekRecord& r) { return r.real_wage_ratio; }},
      {"rich_O_al", [](const WeekRecord& r) { return r.rich_total.supply_labor; }},
      {"rich_freetime", [](const WeekRecord& r) { return r.rich_total.free_time; }},
      {"clamp_count", [](const WeekRecord& r) { return static_cast<double>(r.diagnostics.clamp_count); }},
  };
  return table;
}

bool integral_column(std::string_view name) { return name == "week" || name == "clamp_count"; }

}  // namespace

const std::vector<std::string>& series_columns() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& c : columns()) out.emplace_back(c.name);
    return out;
  }();
  return names;
}

std::string export_series(const SimulationSeries& series, SeriesFormat format) {
  const auto& cols = columns();
  std::string out;

  if (format == SeriesFormat::Csv) {
    for (std::size_t i = 0; i < cols.size(); ++i) {
      out += cols[i].name;
      out += i + 1 < cols.size() ? ',' : '\n';
    }
    for (const auto& rec : series.records) {
      for (std::size_t i = 0; i < cols.size(); ++i) {
        const double v = cols[i].value(rec);
        if (integral_column(cols[i].name)) {
          out += fmt::format("{}", static_cast<long long>(v));
        } else {
          out += fmt::format("{}", v);
        }
        out += i + 1 < cols.size() ? ',' : '\n';
      }
    }
    return out;
  }

  for (const auto& rec : series.records) {
    nlohmann::ordered_json row;
    for (const auto& c : cols) {
      const double v = c.value(rec);
      if (integral_column(c.name)) {
        row[c.name] = static_cast<long long>(v);
      } else {
        row[c.name] = v;
      }
    }
    out += row.dump();
    out += '\n';
  }
  return out;
}

SeriesFormat parse_series_format(std::string_view name) {
  if (name == "csv") return SeriesFormat::Csv;
  if (name == "jsonl" || name == "json-lines") return SeriesFormat::JsonLines;
  throw std::invalid_argument(fmt::format("unknown series format '{}'", name));
}

std::string describe_week(const WeekRecord& r) {
  std::string out;
  auto line = [&out](std::string_view label, auto... values) {
    out += fmt::format("  {:<28}", label);
    ((out += fmt::format(" {}", values)), ...);
    out += '\n';
  };

  out += fmt::format("week {}\n", r.week);
  out += "state\n";
  line("capital_stock", r.capital_stock);
  line("prices_before (c nk ok w)", r.prices_before.p_c, r.prices_before.p_nk, r.prices_before.p_ok,
       r.prices_before.p_w);
  line("real_wage_ratio", r.real_wage_ratio);

  out += "rich (per agent)\n";
  line("demand_consumer", r.rich.demand_consumer);
  line("demand_new_capital", r.rich.demand_new_capital);
  line("free_time", r.rich.free_time);
  line("supply_labor", r.rich.supply_labor);
  line("supply_old_capital", r.rich.supply_old_capital);
  line("corner", r.rich.corner ? "yes" : "no");
  out += "poor (per agent)\n";
  line("demand_consumer", r.poor.demand_consumer);
  line("supply_labor", r.poor.supply_labor);

  for (Line l : {Line::Consumer, Line::Capital}) {
    const auto& p = r.producer(l);
    const auto idx = static_cast<std::size_t>(l);
    out += fmt::format("{} line\n", l == Line::Consumer ? "consumer" : "capital");
    line("planned (K L Y)", p.demand_capital, p.demand_labor, p.supply_output);
    line("allocated (K L)", r.inputs[idx].capital, r.inputs[idx].labor);
    line("output", r.outputs[idx]);
  }

  out += "markets (demand supply ex_post)\n";
  for (const auto& m : r.markets) {
    line(to_string(m.market_id), m.ex_ante_demand, m.ex_ante_supply, m.ex_post_quantity);
  }
  line("consumption rich / poor", r.consumption_rich, r.consumption_poor);
  line("capital_stock_next", r.capital_stock_next);
  line("prices_after (c nk ok w)", r.prices_after.p_c, r.prices_after.p_nk, r.prices_after.p_ok,
       r.prices_after.p_w);
  line("clamp_count", r.diagnostics.clamp_count);
  return out;
}

}  // namespace shortside
