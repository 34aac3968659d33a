#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "aris/error.hpp"
#include "aris/fs.hpp"
#include "aris/strings.hpp"

namespace aris::config {

using json = nlohmann::json;

// Key-value config file: `[section.subsection]` headers, `key = value` lines,
// values are quoted strings, numbers, booleans, or flat string lists.
// Parsed into a nested json object keyed by section path.
inline json parse_config(std::string_view text) {
  json root = json::object();
  json* section = &root;
  int line_no = 0;
  for (const auto& raw : split_lines(text)) {
    ++line_no;
    auto line = trim_view(raw);
    if (line.empty() || line[0] == '#') continue;
    if (line.front() == '[') {
      if (line.back() != ']')
        raise(Errc::invalid_value, "config line " + std::to_string(line_no) + ": bad section");
      section = &root;
      for (const auto& part : split(line.substr(1, line.size() - 2), '.'))
        section = &(*section)[trim(part)];
      continue;
    }
    auto eq = line.find('=');
    if (eq == std::string_view::npos)
      raise(Errc::invalid_value, "config line " + std::to_string(line_no) + ": expected key = value");
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    if (value.empty())
      raise(Errc::invalid_value, "config line " + std::to_string(line_no) + ": empty value");

    if (value.front() == '"' && value.back() == '"' && value.size() >= 2) {
      (*section)[key] = value.substr(1, value.size() - 2);
    } else if (value.front() == '[') {
      if (value.back() != ']')
        raise(Errc::invalid_value, "config line " + std::to_string(line_no) + ": bad list");
      json arr = json::array();
      for (auto& item : split(value.substr(1, value.size() - 2), ',')) {
        auto t = trim(item);
        if (t.empty()) continue;
        if (t.front() == '"' && t.back() == '"' && t.size() >= 2) t = t.substr(1, t.size() - 2);
        arr.push_back(t);
      }
      (*section)[key] = arr;
    } else if (value == "true" || value == "false") {
      (*section)[key] = (value == "true");
    } else {
      json num = json::parse(value, nullptr, false);
      if (num.is_discarded() || !num.is_number())
        raise(Errc::invalid_value,
              "config line " + std::to_string(line_no) + ": unquoted value '" + value + "'");
      (*section)[key] = num;
    }
  }
  return root;
}

namespace detail {

inline void write_section(std::string& out, const std::string& path, const json& obj) {
  std::string scalars;
  for (const auto& [key, value] : obj.items()) {
    if (value.is_object()) continue;
    if (value.is_string()) scalars += key + " = \"" + value.get<std::string>() + "\"\n";
    else if (value.is_boolean()) scalars += key + std::string(" = ") + (value.get<bool>() ? "true" : "false") + "\n";
    else if (value.is_array()) {
      scalars += key + " = [";
      bool first = true;
      for (const auto& item : value) {
        if (!first) scalars += ", ";
        first = false;
        scalars += "\"" + item.get<std::string>() + "\"";
      }
      scalars += "]\n";
    } else scalars += key + " = " + value.dump() + "\n";
  }
  if (!scalars.empty()) {
    if (!path.empty()) out += "[" + path + "]\n";
    out += scalars;
    out += "\n";
  }
  for (const auto& [key, value] : obj.items())
    if (value.is_object()) write_section(out, path.empty() ? key : path + "." + key, value);
}

}  // namespace detail

inline std::string serialize_config(const json& root) {
  std::string out;
  detail::write_section(out, "", root);
  return out;
}

inline json load_config_file(const stdfs::path& path) {
  return parse_config(read_file(path));
}

inline const json* find_path(const json& root, std::initializer_list<const char*> path) {
  const json* cur = &root;
  for (const char* part : path) {
    if (!cur->is_object() || !cur->contains(part)) return nullptr;
    cur = &(*cur)[part];
  }
  return cur;
}

}  // namespace aris::config
