#pragma once

// Flat `key = value` scenario files.
//
//   # comment
//   preferences.alpha_one = 0.3
//   populations.n_poor    = 4
//
// Keys mirror ScenarioConfig field paths (see config_keys()). Unknown keys and
// repeated keys are errors; missing keys keep the defaults of ScenarioConfig{}.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "shortside/core.hpp"

namespace shortside {

enum class ConfigErrorKind { SyntaxError, UnknownKey, ValidationFailure };

class ConfigError : public std::runtime_error {
 public:
  ConfigError(ConfigErrorKind kind, std::size_t line, const std::string& message,
              std::vector<Violation> violations = {});

  [[nodiscard]] ConfigErrorKind kind() const noexcept { return kind_; }
  /// 1-based line number, 0 when not tied to a line.
  [[nodiscard]] std::size_t line() const noexcept { return line_; }
  [[nodiscard]] const std::vector<Violation>& violations() const noexcept { return violations_; }

 private:
  ConfigErrorKind kind_;
  std::size_t line_;
  std::vector<Violation> violations_;
};

/// Every accepted key, in serialization order.
[[nodiscard]] const std::vector<std::string>& config_keys();

[[nodiscard]] bool is_config_key(std::string_view key);

/// Sets one field from its textual value. Throws ConfigError (UnknownKey or
/// SyntaxError with line 0).
void set_config_value(ScenarioConfig& config, std::string_view key, std::string_view value);

/// Textual value of one field, shortest round-trip formatting for reals.
[[nodiscard]] std::string get_config_value(const ScenarioConfig& config, std::string_view key);

/// Parses a document without validating it.
[[nodiscard]] ScenarioConfig parse_config_fields(std::string_view text);

/// Parses and validates a document; validation failures become ConfigError
/// with kind ValidationFailure carrying the full violation list.
[[nodiscard]] ValidatedConfig parse_config(std::string_view text);

/// One `key = value` line per key, in config_keys() order.
[[nodiscard]] std::string serialize_config(const ScenarioConfig& config);

[[nodiscard]] std::string read_text_file(const std::string& path);

}  // namespace shortside
