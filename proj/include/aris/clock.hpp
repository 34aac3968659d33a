#pragma once

#include <chrono>
#include <cstdio>
#include <ctime>
#include <functional>
#include <string>

namespace aris {

// Timestamp source, injectable so persisted state can be replayed
// deterministically in tests.
using NowFn = std::function<std::string()>;

inline std::string utc_now_iso() {
  auto now = std::chrono::system_clock::now();
  std::time_t t = std::chrono::system_clock::to_time_t(now);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%04d-%02d-%02dT%02d:%02d:%02dZ", tm.tm_year + 1900,
                tm.tm_mon + 1, tm.tm_mday, tm.tm_hour, tm.tm_min, tm.tm_sec);
  return buf;
}

inline NowFn system_clock_fn() {
  return [] { return utc_now_iso(); };
}

inline NowFn fixed_clock_fn(std::string stamp = "2026-01-01T00:00:00Z") {
  return [stamp = std::move(stamp)] { return stamp; };
}

}  // namespace aris
