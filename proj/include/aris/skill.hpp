#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "aris/error.hpp"
#include "aris/fs.hpp"
#include "aris/strings.hpp"

namespace aris::skills {

// Priority tiers, highest first. A name present in several tiers resolves to
// the highest one regardless of load order.
enum class Tier { user = 0, project = 1, bundled = 2 };

inline std::string_view tier_name(Tier t) {
  switch (t) {
    case Tier::user: return "user";
    case Tier::project: return "project";
    case Tier::bundled: return "bundled";
  }
  return "?";
}

struct SkillSpec {
  std::string name;
  std::string description;
  std::vector<std::string> triggers;
  std::vector<std::string> allowed_tools;
  std::string body;  // everything after the closing fence, byte for byte
  Tier tier = Tier::bundled;
  std::string source_path;
  std::string category = "Uncategorized";
  std::map<std::string, std::string> extra;  // unrecognized scalar keys, kept
  std::string raw_frontmatter;               // inner fence lines, verbatim
};

namespace detail {

inline bool is_key_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-';
}

inline std::string strip_quotes(std::string v) {
  if (v.size() >= 2 && ((v.front() == '"' && v.back() == '"') ||
                        (v.front() == '\'' && v.back() == '\'')))
    return v.substr(1, v.size() - 2);
  return v;
}

inline std::vector<std::string> parse_inline_list(std::string_view v, const std::string& where) {
  if (v.back() != ']')
    raise(Errc::malformed_frontmatter, "unterminated list in " + where);
  std::vector<std::string> out;
  for (auto& item : split(v.substr(1, v.size() - 2), ',')) {
    auto t = trim(item);
    if (!t.empty()) out.push_back(strip_quotes(t));
  }
  return out;
}

}  // namespace detail

// The frontmatter grammar is a restricted key-value subset: scalar values and
// flat string lists only. Nested mappings are rejected.
inline SkillSpec parse_skill(std::string_view text, Tier tier, std::string path) {
  auto lines = split_lines(text);
  auto is_fence = [](std::string_view line) {
    auto t = line;
    if (!t.empty() && t.back() == '\r') t.remove_suffix(1);
    return t == "---";
  };

  if (lines.empty() || !is_fence(lines[0]))
    raise(Errc::missing_frontmatter, "no opening --- fence in " + path);

  size_t close = 0;
  for (size_t i = 1; i < lines.size(); ++i) {
    if (is_fence(lines[i])) {
      close = i;
      break;
    }
  }
  if (close == 0)
    raise(Errc::malformed_frontmatter, "frontmatter fence never closes in " + path);

  SkillSpec spec;
  spec.tier = tier;
  spec.source_path = std::move(path);

  std::map<std::string, std::string> scalars;
  std::map<std::string, std::vector<std::string>> lists;
  std::string pending_list_key;

  for (size_t i = 1; i < close; ++i) {
    std::string_view line = lines[i];
    std::string_view trimmed = trim_view(line);
    if (trimmed.empty() || trimmed[0] == '#') continue;

    bool indented = !line.empty() && (line[0] == ' ' || line[0] == '\t');

    if (trimmed.size() >= 2 && trimmed[0] == '-' &&
        std::isspace(static_cast<unsigned char>(trimmed[1]))) {
      if (pending_list_key.empty())
        raise(Errc::malformed_frontmatter,
              "list item without a key in " + spec.source_path);
      lists[pending_list_key].push_back(detail::strip_quotes(trim(trimmed.substr(1))));
      continue;
    }

    size_t colon = trimmed.find(':');
    bool looks_like_key = colon != std::string_view::npos && colon > 0;
    if (looks_like_key) {
      for (size_t k = 0; k < colon; ++k)
        if (!detail::is_key_char(trimmed[k])) looks_like_key = false;
    }
    if (!looks_like_key)
      raise(Errc::malformed_frontmatter,
            "unparseable line '" + std::string(trimmed) + "' in " + spec.source_path);
    if (indented)
      raise(Errc::malformed_frontmatter,
            "nested mapping '" + std::string(trimmed.substr(0, colon)) +
                "' is not supported in " + spec.source_path);

    std::string key(trimmed.substr(0, colon));
    std::string value = trim(trimmed.substr(colon + 1));
    if (value.empty()) {
      pending_list_key = key;
      lists[key];  // an empty block list is a valid empty list
    } else if (value.front() == '[') {
      pending_list_key.clear();
      lists[key] = detail::parse_inline_list(value, spec.source_path);
    } else {
      pending_list_key.clear();
      scalars[key] = detail::strip_quotes(value);
    }
  }

  auto take_scalar = [&](const char* key) -> std::optional<std::string> {
    auto it = scalars.find(key);
    if (it == scalars.end()) return std::nullopt;
    auto v = it->second;
    scalars.erase(it);
    return v;
  };
  auto take_list = [&](const char* key) -> std::optional<std::vector<std::string>> {
    auto it = lists.find(key);
    if (it == lists.end()) return std::nullopt;
    auto v = it->second;
    lists.erase(it);
    return v;
  };

  if (auto v = take_scalar("name")) spec.name = *v;
  if (auto v = take_scalar("description")) spec.description = *v;
  if (spec.name.empty()) raise(Errc::missing_field, "name (" + spec.source_path + ")");
  if (spec.description.empty())
    raise(Errc::missing_field, "description (" + spec.source_path + ")");

  if (auto v = take_list("triggers")) spec.triggers = *v;
  if (auto v = take_list("allowed-tools")) spec.allowed_tools = *v;
  if (auto v = take_list("allowed_tools")) spec.allowed_tools = *v;
  if (auto v = take_scalar("category")) spec.category = *v;

  // Unknown keys are preserved and ignored, not errors.
  for (auto& [k, v] : scalars) spec.extra[k] = v;
  for (auto& [k, v] : lists) spec.extra[k] = "[" + join(v, ", ") + "]";

  for (size_t i = 1; i < close; ++i) {
    spec.raw_frontmatter += lines[i];
    spec.raw_frontmatter += '\n';
  }
  size_t body_start = 0;
  for (size_t i = 0; i <= close; ++i) body_start += lines[i].size() + 1;
  spec.body = body_start < text.size() ? std::string(text.substr(body_start)) : std::string();
  return spec;
}

// Rebuilds the original file. Round-tripping a well-formed file is identity.
inline std::string serialize_skill(const SkillSpec& spec) {
  return "---\n" + spec.raw_frontmatter + "---\n" + spec.body;
}

struct SkillEntry {
  std::string name;
  std::string category;
  Tier tier;
};

class SkillRegistry {
 public:
  void add(SkillSpec spec) {
    auto& per_tier = skills_[spec.name];
    size_t idx = static_cast<size_t>(spec.tier);
    if (per_tier[idx])
      raise(Errc::duplicate_skill, spec.name + " already defined in tier " +
                                       std::string(tier_name(spec.tier)) + " (" +
                                       per_tier[idx]->source_path + ")");
    per_tier[idx] = std::move(spec);
  }

  void load_dir(const stdfs::path& root, Tier tier) {
    for (const auto& file : list_files(root, ".md"))
      add(parse_skill(read_file(file), tier, file.string()));
  }

  const SkillSpec& resolve(const std::string& name) const {
    auto it = skills_.find(name);
    if (it == skills_.end()) raise(Errc::skill_not_found, name);
    for (const auto& slot : it->second)
      if (slot) return *slot;
    raise(Errc::skill_not_found, name);
  }

  bool contains(const std::string& name) const { return skills_.count(name) > 0; }

  std::vector<SkillEntry> list(const std::optional<std::string>& category = {}) const {
    std::vector<SkillEntry> out;
    for (const auto& [name, per_tier] : skills_) {
      for (const auto& slot : per_tier) {
        if (!slot) continue;
        if (!category || slot->category == *category)
          out.push_back({name, slot->category, slot->tier});
        break;  // highest tier wins the listing too
      }
    }
    return out;  // map iteration is already name-sorted
  }

  size_t size() const { return skills_.size(); }

 private:
  // name -> one optional slot per tier, indexed by priority
  std::map<std::string, std::array<std::optional<SkillSpec>, 3>> skills_;
};

struct SharedReference {
  std::string name;
  std::string content;
};

inline constexpr std::array<std::string_view, 5> kSharedReferenceNames = {
    "reviewer-independence", "experiment-integrity", "effort-contract",
    "citation-discipline", "writing-principles"};

namespace detail {

inline const std::map<std::string, std::string>& shared_reference_texts() {
  static const std::map<std::string, std::string> texts = {
      {"reviewer-independence",
       "# Reviewer Independence\n"
       "\n"
       "Every review request hands the reviewer file paths plus a one-line\n"
       "objective. The reviewer reads the referenced artifacts itself and forms\n"
       "its own assessment.\n"
       "\n"
       "Rules every review-invoking skill must follow:\n"
       "- Never send the reviewer an executor-written summary of the artifact.\n"
       "- Never pre-sort, excerpt, or annotate the artifact for the reviewer.\n"
       "- The objective states what to judge, not what the executor believes.\n"
       "- Pair the executor and reviewer from different model families where\n"
       "  the configuration allows it.\n"},
      {"experiment-integrity",
       "# Experiment Integrity\n"
       "\n"
       "Evaluation code and result files are audited for five failure modes:\n"
       "\n"
       "1. model_derived_reference_labels: reference targets synthesized from\n"
       "   model output instead of a declared data source.\n"
       "2. self_normalized_scores: metric denominators derived from the model's\n"
       "   own predictions.\n"
       "3. phantom_results: reported numbers that match no output file.\n"
       "4. dead_code_or_unused_metric_inflation: metrics or branches that are\n"
       "   described but never executed.\n"
       "5. scope_inflation: claims that generalize past the tested datasets,\n"
       "   seeds, or settings.\n"
       "\n"
       "Audit findings are advisory. They never halt a run; they propagate into\n"
       "claim verdicts downstream.\n"},
      {"effort-contract",
       "# Effort Contract\n"
       "\n"
       "Effort presets scale breadth, depth, and iteration parameters:\n"
       "lite 0.4x, balanced 1x, max 2.5x, beast 5x (configurable up to 8x).\n"
       "Scaled values round up and never drop below 1.\n"
       "\n"
       "Invariant-tagged parameters never scale. Reviewer calls always use\n"
       "xhigh reasoning effort regardless of the active preset: effort changes\n"
       "coverage and iteration counts, not the reviewer's reasoning budget.\n"},
      {"citation-discipline",
       "# Citation Discipline\n"
       "\n"
       "Every citation is checked along three independent axes:\n"
       "- existence: the cited work resolves at its claimed identifier.\n"
       "- metadata: authors, year, venue, and title match canonical sources.\n"
       "- context: the cited work actually establishes the claim it supports.\n"
       "\n"
       "Verdicts map to KEEP, FIX, REPLACE, or REMOVE recommendations. No\n"
       "recommendation is applied without explicit human approval.\n"},
      {"writing-principles",
       "# Writing Principles\n"
       "\n"
       "Drafts go through five editing passes, in order:\n"
       "1. Clutter removal: cut filler, redundancy, and needless hedging.\n"
       "2. Active voice: prefer active constructions where natural.\n"
       "3. Sentence structure: lead with the topic; keep local coherence.\n"
       "4. Terminology consistency: a term introduced in Methods keeps that\n"
       "   exact form in every later section.\n"
       "5. Numerical consistency: every repeated number must match its source\n"
       "   table, figure, or result file.\n"},
  };
  return texts;
}

}  // namespace detail

inline SharedReference load_shared_reference(std::string_view name) {
  const auto& texts = detail::shared_reference_texts();
  auto it = texts.find(std::string(name));
  if (it == texts.end())
    raise(Errc::unknown_reference, std::string(name));
  return {it->first, it->second};
}

}  // namespace aris::skills
