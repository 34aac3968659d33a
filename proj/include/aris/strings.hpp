#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace aris {

inline std::string_view trim_view(std::string_view s) {
  size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

inline std::string trim(std::string_view s) { return std::string(trim_view(s)); }

inline std::string to_lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

inline bool starts_with(std::string_view s, std::string_view prefix) {
  return s.size() >= prefix.size() && s.substr(0, prefix.size()) == prefix;
}

inline bool ends_with(std::string_view s, std::string_view suffix) {
  return s.size() >= suffix.size() && s.substr(s.size() - suffix.size()) == suffix;
}

inline std::vector<std::string> split(std::string_view s, char delim) {
  std::vector<std::string> out;
  size_t start = 0;
  for (size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == delim) {
      out.emplace_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  return out;
}

// Splits into lines; a trailing newline does not produce an empty final line.
inline std::vector<std::string> split_lines(std::string_view s) {
  std::vector<std::string> out;
  size_t start = 0;
  for (size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '\n') {
      out.emplace_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  if (start < s.size()) out.emplace_back(s.substr(start));
  return out;
}

inline std::string join(const std::vector<std::string>& parts, std::string_view sep) {
  std::string out;
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

// Decodes UTF-8 into code points; malformed bytes decode as U+FFFD so callers
// never see a decode failure.
inline std::vector<char32_t> utf8_codepoints(std::string_view s) {
  std::vector<char32_t> out;
  size_t i = 0;
  while (i < s.size()) {
    unsigned char c = static_cast<unsigned char>(s[i]);
    char32_t cp = 0xFFFD;
    size_t len = 1;
    if (c < 0x80) {
      cp = c;
    } else if ((c >> 5) == 0x6 && i + 1 < s.size()) {
      cp = static_cast<char32_t>((c & 0x1F) << 6 | (s[i + 1] & 0x3F));
      len = 2;
    } else if ((c >> 4) == 0xE && i + 2 < s.size()) {
      cp = static_cast<char32_t>((c & 0x0F) << 12 | (s[i + 1] & 0x3F) << 6 | (s[i + 2] & 0x3F));
      len = 3;
    } else if ((c >> 3) == 0x1E && i + 3 < s.size()) {
      cp = static_cast<char32_t>((c & 0x07) << 18 | (s[i + 1] & 0x3F) << 12 |
                                 (s[i + 2] & 0x3F) << 6 | (s[i + 3] & 0x3F));
      len = 4;
    }
    out.push_back(cp);
    i += len;
  }
  return out;
}

// Length in Unicode scalar values, not bytes.
inline size_t count_codepoints(std::string_view s) {
  size_t n = 0;
  for (size_t i = 0; i < s.size();) {
    unsigned char c = static_cast<unsigned char>(s[i]);
    if (c < 0x80) i += 1;
    else if ((c >> 5) == 0x6) i += 2;
    else if ((c >> 4) == 0xE) i += 3;
    else if ((c >> 3) == 0x1E) i += 4;
    else i += 1;
    ++n;
  }
  return n;
}

inline std::string slugify(std::string_view title, size_t max_len = 40) {
  std::string out;
  bool pending_dash = false;
  for (char ch : title) {
    unsigned char c = static_cast<unsigned char>(ch);
    if (std::isalnum(c)) {
      if (pending_dash && !out.empty()) out += '-';
      pending_dash = false;
      out += static_cast<char>(std::tolower(c));
    } else {
      pending_dash = true;
    }
    if (out.size() >= max_len) break;
  }
  if (out.empty()) out = "untitled";
  return out;
}

}  // namespace aris
