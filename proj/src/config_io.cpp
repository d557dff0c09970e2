#include "shortside/config_io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>
#include <variant>

#include <fmt/format.h>

#include "text_util.hpp"

namespace shortside {

ConfigError::ConfigError(ConfigErrorKind kind, std::size_t line, const std::string& message,
                         std::vector<Violation> violations)
    : std::runtime_error(line > 0 ? fmt::format("line {}: {}", line, message) : message),
      kind_(kind),
      line_(line),
      violations_(std::move(violations)) {}

namespace {

using RealField = std::function<double&(ScenarioConfig&)>;
using IntField = std::function<std::int64_t&(ScenarioConfig&)>;

struct Field {
  std::string key;
  std::variant<RealField, IntField> access;
};

template <typename T>
RealField real(T ScenarioConfig::*group, double T::*member) {
  return [group, member](ScenarioConfig& c) -> double& { return (c.*group).*member; };
}

const std::vector<Field>& fields() {
  static const std::vector<Field> table = [] {
    using C = ScenarioConfig;
    std::vector<Field> f;
    f.push_back({"preferences.scale_C", real(&C::preferences, &Preferences::scale_C)});
    f.push_back({"preferences.alpha_one", real(&C::preferences, &Preferences::alpha_one)});
    f.push_back({"preferences.alpha_two", real(&C::preferences, &Preferences::alpha_two)});
    f.push_back({"preferences.alpha_three", real(&C::preferences, &Preferences::alpha_three)});
    for (auto [name, member] : {std::pair{"technology_consumer", &C::technology_consumer},
                                std::pair{"technology_capital", &C::technology_capital}}) {
      const std::string prefix(name);
      f.push_back({prefix + ".scale_B", real(member, &Technology::scale_B)});
      f.push_back({prefix + ".beta_one", real(member, &Technology::beta_one)});
      f.push_back({prefix + ".beta_two", real(member, &Technology::beta_two)});
    }
    f.push_back({"populations.n_rich",
                 IntField([](C& c) -> std::int64_t& { return c.populations.n_rich; })});
    f.push_back({"populations.n_poor",
                 IntField([](C& c) -> std::int64_t& { return c.populations.n_poor; })});
    f.push_back({"populations.omega", real(&C::populations, &Populations::omega)});
    f.push_back({"populations.time_endowment_T",
                 real(&C::populations, &Populations::time_endowment_T)});
    f.push_back({"varmax", RealField([](C& c) -> double& { return c.varmax; })});
    f.push_back({"horizon", IntField([](C& c) -> std::int64_t& { return c.horizon; })});
    f.push_back({"scale_cap_multiplier",
                 RealField([](C& c) -> double& { return c.scale_cap_multiplier; })});
    f.push_back({"initial.p_c", RealField([](C& c) -> double& { return c.initial_state.prices.p_c; })});
    f.push_back({"initial.p_nk", RealField([](C& c) -> double& { return c.initial_state.prices.p_nk; })});
    f.push_back({"initial.p_ok", RealField([](C& c) -> double& { return c.initial_state.prices.p_ok; })});
    f.push_back({"initial.p_w", RealField([](C& c) -> double& { return c.initial_state.prices.p_w; })});
    f.push_back({"initial.K0", RealField([](C& c) -> double& { return c.initial_state.capital_stock_K; })});
    return f;
  }();
  return table;
}

const Field* find_field(std::string_view key) {
  const auto& table = fields();
  auto it = std::find_if(table.begin(), table.end(), [&](const Field& f) { return f.key == key; });
  return it == table.end() ? nullptr : &*it;
}

template <typename T>
T parse_number(std::string_view key, std::string_view text) {
  T value{};
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc{} || ptr != end) {
    throw ConfigError(ConfigErrorKind::SyntaxError, 0,
                      fmt::format("invalid value '{}' for key '{}'", text, key));
  }
  return value;
}

}  // namespace

const std::vector<std::string>& config_keys() {
  static const std::vector<std::string> keys = [] {
    std::vector<std::string> out;
    for (const auto& f : fields()) out.push_back(f.key);
    return out;
  }();
  return keys;
}

bool is_config_key(std::string_view key) { return find_field(key) != nullptr; }

void set_config_value(ScenarioConfig& config, std::string_view key, std::string_view value) {
  const Field* field = find_field(key);
  if (field == nullptr) {
    throw ConfigError(ConfigErrorKind::UnknownKey, 0, fmt::format("unknown key '{}'", key));
  }
  std::visit(
      [&](const auto& access) {
        using A = std::decay_t<decltype(access)>;
        if constexpr (std::is_same_v<A, RealField>) {
          access(config) = parse_number<double>(key, value);
        } else {
          access(config) = parse_number<std::int64_t>(key, value);
        }
      },
      field->access);
}

std::string get_config_value(const ScenarioConfig& config, std::string_view key) {
  const Field* field = find_field(key);
  if (field == nullptr) {
    throw ConfigError(ConfigErrorKind::UnknownKey, 0, fmt::format("unknown key '{}'", key));
  }
  auto copy = config;
  return std::visit([&](const auto& access) { return fmt::format("{}", access(copy)); },
                    field->access);
}

ScenarioConfig parse_config_fields(std::string_view text) {
  ScenarioConfig config;
  std::set<std::string, std::less<>> seen;
  std::size_t line_no = 0;
  for (std::string_view line : detail::split_lines(text)) {
    ++line_no;
    line = detail::trim(detail::strip_comment(line));
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError(ConfigErrorKind::SyntaxError, line_no, "expected 'key = value'");
    }
    const auto key = detail::trim(line.substr(0, eq));
    const auto value = detail::trim(line.substr(eq + 1));
    if (key.empty() || value.empty()) {
      throw ConfigError(ConfigErrorKind::SyntaxError, line_no, "expected 'key = value'");
    }
    if (!is_config_key(key)) {
      throw ConfigError(ConfigErrorKind::UnknownKey, line_no, fmt::format("unknown key '{}'", key));
    }
    if (!seen.emplace(key).second) {
      throw ConfigError(ConfigErrorKind::SyntaxError, line_no, fmt::format("duplicate key '{}'", key));
    }
    try {
      set_config_value(config, key, value);
    } catch (const ConfigError& e) {
      throw ConfigError(e.kind(), line_no, e.what());
    }
  }
  return config;
}

ValidatedConfig parse_config(std::string_view text) {
  const ScenarioConfig config = parse_config_fields(text);
  auto result = validate_config(config);
  if (!result) {
    throw ConfigError(ConfigErrorKind::ValidationFailure, 0,
                      ValidationError(result.violations()).what(), result.violations());
  }
  return result.value();
}

std::string serialize_config(const ScenarioConfig& config) {
  std::string out;
  for (const auto& key : config_keys()) {
    out += fmt::format("{} = {}\n", key, get_config_value(config, key));
  }
  return out;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error(fmt::format("cannot open '{}'", path));
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace shortside
