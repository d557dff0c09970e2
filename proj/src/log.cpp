#include "log.hpp"

#include <cstdlib>
#include <string>

namespace shortside::detail {

LogLevel log_level() noexcept {
  static const LogLevel level = [] {
    const char* raw = std::getenv("SHORTSIDE_LOG");
    if (raw == nullptr) return LogLevel::Off;
    const std::string value(raw);
    if (value == "debug" || value == "2") return LogLevel::Debug;
    if (value == "info" || value == "1") return LogLevel::Info;
    return LogLevel::Off;
  }();
  return level;
}

}  // namespace shortside::detail
