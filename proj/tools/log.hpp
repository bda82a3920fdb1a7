#pragma once

#include <cstdio>
#include <cstdlib>
#include <string>

namespace liefrenet::cli {

enum class LogLevel { error = 0, warn = 1, info = 2, debug = 3 };

// Verbosity comes from LIEFRENET_LOG (error|warn|info|debug), default warn.
inline LogLevel log_level() {
  static const LogLevel level = [] {
    const char* env = std::getenv("LIEFRENET_LOG");
    if (env == nullptr) return LogLevel::warn;
    const std::string v(env);
    if (v == "error") return LogLevel::error;
    if (v == "warn") return LogLevel::warn;
    if (v == "info") return LogLevel::info;
    if (v == "debug") return LogLevel::debug;
    std::fprintf(stderr, "[warn] LIEFRENET_LOG=%s not recognized, using warn\n",
                 env);
    return LogLevel::warn;
  }();
  return level;
}

inline void log_line(LogLevel level, const char* tag, const std::string& msg) {
  if (static_cast<int>(level) <= static_cast<int>(log_level()))
    std::fprintf(stderr, "[%s] %s\n", tag, msg.c_str());
}

inline void log_error(const std::string& msg) {
  log_line(LogLevel::error, "error", msg);
}
inline void log_warn(const std::string& msg) {
  log_line(LogLevel::warn, "warn", msg);
}
inline void log_info(const std::string& msg) {
  log_line(LogLevel::info, "info", msg);
}
inline void log_debug(const std::string& msg) {
  log_line(LogLevel::debug, "debug", msg);
}

}  // namespace liefrenet::cli
