#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "aris/fs.hpp"
#include "aris/strings.hpp"

namespace aris {

using json = nlohmann::json;

struct JsonlReadResult {
  std::vector<json> records;
  int skipped = 0;  // unparseable lines (e.g. one torn by a crash mid-append)
};

inline JsonlReadResult read_jsonl(const stdfs::path& path) {
  JsonlReadResult out;
  auto content = read_file_if(path);
  if (!content) return out;
  for (const auto& line : split_lines(*content)) {
    auto t = trim_view(line);
    if (t.empty()) continue;
    json parsed = json::parse(t, nullptr, false);
    if (parsed.is_discarded()) {
      ++out.skipped;
      continue;
    }
    out.records.push_back(std::move(parsed));
  }
  return out;
}

inline void append_jsonl(const stdfs::path& path, const json& record) {
  append_line_atomic(path, record.dump());
}

}  // namespace aris
