#pragma once

// Minimal diagnostic logging to stderr. Verbosity comes from SHORTSIDE_LOG:
// unset/"off"/"0" silences everything, "info"/"1" reports clamp engagements
// and run summaries, "debug"/"2" adds one line per simulated week.

#include <cstdio>
#include <string_view>

#include <fmt/format.h>

namespace shortside::detail {

enum class LogLevel { Off = 0, Info = 1, Debug = 2 };

LogLevel log_level() noexcept;

template <typename... Args>
void log(LogLevel level, fmt::format_string<Args...> format, Args&&... args) {
  if (level == LogLevel::Off || static_cast<int>(level) > static_cast<int>(log_level())) return;
  std::string line = fmt::format(format, std::forward<Args>(args)...);
  std::fprintf(stderr, "[shortside] %s\n", line.c_str());
}

}  // namespace shortside::detail
