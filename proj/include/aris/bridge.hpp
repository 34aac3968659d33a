#pragma once

#include <cstdlib>
#include <deque>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "aris/config.hpp"
#include "aris/jsonl.hpp"

namespace aris::bridge {

enum class Role { system, user, assistant };

inline std::string_view role_name(Role r) {
  switch (r) {
    case Role::system: return "system";
    case Role::user: return "user";
    case Role::assistant: return "assistant";
  }
  return "?";
}

struct ChatMessage {
  Role role;
  std::string content;
};

struct TokenUsage {
  long prompt_tokens = 0;
  long completion_tokens = 0;
  double cost_estimate = 0.0;
};

struct ChatExchange {
  std::vector<ChatMessage> messages;
  std::string reply;
  TokenUsage usage;
};

struct BridgeConfig {
  std::string bridge_id;
  std::string kind = "http";  // "http" or "mock"
  std::string endpoint;
  std::string model;
  std::string family;
  std::string reasoning_effort;
  std::string auth_env;
  std::string script_path;  // mock only
  double price_prompt = 0.0;
  double price_completion = 0.0;
};

// Optional leading system message, then user/assistant strictly alternating,
// ending on the user turn the model is asked to answer.
inline void validate_roles(const std::vector<ChatMessage>& messages) {
  size_t i = 0;
  if (i < messages.size() && messages[i].role == Role::system) ++i;
  Role expected = Role::user;
  for (; i < messages.size(); ++i) {
    if (messages[i].role != expected)
      raise(Errc::invalid_value, "message roles do not alternate");
    expected = expected == Role::user ? Role::assistant : Role::user;
  }
  if (messages.empty() || messages.back().role != Role::user)
    raise(Errc::invalid_value, "conversation must end with a user message");
}

class ChatBridge {
 public:
  explicit ChatBridge(BridgeConfig config) : config_(std::move(config)) {}
  virtual ~ChatBridge() = default;

  const BridgeConfig& config() const { return config_; }
  const std::string& id() const { return config_.bridge_id; }
  const std::string& family() const { return config_.family; }

  ChatExchange send(const std::vector<ChatMessage>& messages) {
    validate_roles(messages);
    ChatExchange ex = send_impl(messages);
    ex.messages = messages;
    ex.usage.cost_estimate = config_.price_prompt * static_cast<double>(ex.usage.prompt_tokens) +
                             config_.price_completion * static_cast<double>(ex.usage.completion_tokens);
    return ex;
  }

 protected:
  virtual ChatExchange send_impl(const std::vector<ChatMessage>& messages) = 0;
  BridgeConfig config_;
};

// Deterministic scripted bridge. Replies are consumed in order; a script
// entry may be a bare string or {"reply": ..., "prompt_tokens": ...,
// "completion_tokens": ..., "repeat": bool}. A repeat entry answers every
// call from then on. Usage defaults to ceil(chars/4), which is stable for a
// fixed transcript.
class MockBridge : public ChatBridge {
 public:
  MockBridge(BridgeConfig config, std::vector<json> script)
      : ChatBridge(std::move(config)), script_(std::move(script)) {}

  static std::unique_ptr<MockBridge> from_config(BridgeConfig config,
                                                 const stdfs::path& base_dir) {
    if (config.script_path.empty())
      raise(Errc::invalid_value, "mock bridge " + config.bridge_id + " needs a script path");
    stdfs::path p = config.script_path;
    if (p.is_relative()) p = base_dir / p;
    json doc = json::parse(read_file(p), nullptr, false);
    if (doc.is_discarded() || !doc.is_array())
      raise(Errc::invalid_value, "mock script must be a JSON array: " + p.string());
    return std::make_unique<MockBridge>(std::move(config),
                                        std::vector<json>(doc.begin(), doc.end()));
  }

  const std::vector<ChatExchange>& transcript() const { return transcript_; }
  size_t calls() const { return transcript_.size(); }

  // Replays already-consumed calls after a checkpoint resume.
  void fast_forward(size_t calls) { cursor_ = std::min(calls, script_.size()); }
  size_t cursor() const { return cursor_; }

 protected:
  ChatExchange send_impl(const std::vector<ChatMessage>& messages) override {
    const json* entry = nullptr;
    if (cursor_ < script_.size()) {
      entry = &script_[cursor_];
      bool repeat = entry->is_object() && entry->value("repeat", false);
      if (!repeat) ++cursor_;
    } else if (!script_.empty() && script_.back().is_object() &&
               script_.back().value("repeat", false)) {
      entry = &script_.back();
    } else {
      raise(Errc::script_exhausted,
            id() + " script exhausted after " + std::to_string(script_.size()) + " replies");
    }

    ChatExchange ex;
    ex.reply = entry->is_string() ? entry->get<std::string>() : entry->value("reply", "");
    size_t prompt_chars = 0;
    for (const auto& m : messages) prompt_chars += m.content.size();
    ex.usage.prompt_tokens = static_cast<long>((prompt_chars + 3) / 4);
    ex.usage.completion_tokens = static_cast<long>((ex.reply.size() + 3) / 4);
    if (entry->is_object()) {
      ex.usage.prompt_tokens = entry->value("prompt_tokens", ex.usage.prompt_tokens);
      ex.usage.completion_tokens = entry->value("completion_tokens", ex.usage.completion_tokens);
    }
    ChatExchange copy = ex;
    copy.messages = messages;
    transcript_.push_back(std::move(copy));
    return ex;
  }

 private:
  std::vector<json> script_;
  size_t cursor_ = 0;
  std::vector<ChatExchange> transcript_;
};

// Chat-completions wire over HTTPS. Declared here; defined in bridge_http.hpp
// so tests that never touch the network do not pull in the HTTP stack.
class HttpBridge : public ChatBridge {
 public:
  explicit HttpBridge(BridgeConfig config) : ChatBridge(std::move(config)) {
    if (!config_.auth_env.empty() && std::getenv(config_.auth_env.c_str()) == nullptr)
      raise(Errc::auth_missing,
            config_.bridge_id + " requires environment variable " + config_.auth_env);
  }

 protected:
  ChatExchange send_impl(const std::vector<ChatMessage>& messages) override;
};

inline const std::vector<std::string>& default_bridge_ids() {
  static const std::vector<std::string> ids = {"codex",   "oracle",   "claude", "gemini",
                                               "minimax", "llm-chat", "mock"};
  return ids;
}

inline BridgeConfig bridge_config_from_json(const std::string& id, const json& section,
                                            const json& pricing) {
  BridgeConfig cfg;
  cfg.bridge_id = id;
  cfg.kind = section.value("kind", "http");
  cfg.endpoint = section.value("endpoint", "");
  cfg.model = section.value("model", "");
  cfg.family = section.value("family", "");
  cfg.reasoning_effort = section.value("reasoning_effort", "");
  cfg.auth_env = section.value("auth_env", "");
  cfg.script_path = section.value("script", "");
  if (pricing.is_object() && pricing.contains(id)) {
    cfg.price_prompt = pricing[id].value("prompt", 0.0);
    cfg.price_completion = pricing[id].value("completion", 0.0);
  }
  return cfg;
}

// All configured bridges. In test mode, constructing a network bridge is an
// error rather than a latent network dependency.
class BridgeSet {
 public:
  BridgeSet() = default;

  static BridgeSet from_config(const json& cfg, const stdfs::path& base_dir, bool test_mode) {
    BridgeSet set;
    set.test_mode_ = test_mode;
    const json* bridges = config::find_path(cfg, {"bridge"});
    if (!bridges) return set;
    json pricing = json::object();
    if (const json* p = config::find_path(cfg, {"pricing"})) pricing = *p;
    for (const auto& [id, section] : bridges->items()) {
      BridgeConfig bc = bridge_config_from_json(id, section, pricing);
      if (bc.kind == "mock") {
        set.add(MockBridge::from_config(std::move(bc), base_dir));
      } else {
        if (test_mode)
          raise(Errc::invalid_value,
                "network bridge '" + id + "' cannot be constructed in test mode");
        set.add(std::make_unique<HttpBridge>(std::move(bc)));
      }
    }
    return set;
  }

  void add(std::unique_ptr<ChatBridge> bridge) {
    const std::string id = bridge->id();
    if (bridges_.count(id)) raise(Errc::duplicate_id, "bridge " + id);
    bridges_[id] = std::move(bridge);
  }

  bool contains(const std::string& id) const { return bridges_.count(id) > 0; }

  ChatBridge& at(const std::string& id) const {
    auto it = bridges_.find(id);
    if (it == bridges_.end()) raise(Errc::unknown_route, "bridge " + id + " not configured");
    return *it->second;
  }

  MockBridge* as_mock(const std::string& id) const {
    return dynamic_cast<MockBridge*>(&at(id));
  }

  std::vector<std::string> ids() const {
    std::vector<std::string> out;
    for (const auto& [id, _] : bridges_) out.push_back(id);
    return out;
  }

  bool test_mode() const { return test_mode_; }

 private:
  std::map<std::string, std::unique_ptr<ChatBridge>> bridges_;
  bool test_mode_ = false;
};

// Review-route resolution: no directive routes to the configured default,
// "oracle-pro" names the oracle bridge, a configured bridge id names itself,
// and anything else falls through to llm-chat only when explicitly allowed.
inline std::string resolve_route(const std::string& directive_value, const json& cfg,
                                 const BridgeSet& bridges) {
  std::string default_route = "codex";
  bool allow_fallback = false;
  if (const json* p = config::find_path(cfg, {"project", "default_review_route"}))
    default_route = p->get<std::string>();
  if (const json* p = config::find_path(cfg, {"project", "allow_route_fallback"}))
    allow_fallback = p->get<bool>();

  if (directive_value.empty()) return default_route;
  if (directive_value == "oracle-pro") return "oracle";
  if (bridges.contains(directive_value)) return directive_value;
  if (allow_fallback && bridges.contains("llm-chat")) return "llm-chat";
  raise(Errc::unknown_route, directive_value);
}

// ---- cost accounting -----------------------------------------------------

struct CostRow {
  long prompt_tokens = 0;
  long completion_tokens = 0;
  double cost = 0.0;
};

struct CostReport {
  std::map<std::string, CostRow> per_bridge;
  CostRow total;
};

class CostLedger {
 public:
  explicit CostLedger(stdfs::path ledger_path) : path_(std::move(ledger_path)) {}

  void record(const std::string& bridge_id, const TokenUsage& usage) {
    append_jsonl(path_, json{{"bridge", bridge_id},
                             {"prompt_tokens", usage.prompt_tokens},
                             {"completion_tokens", usage.completion_tokens},
                             {"cost", usage.cost_estimate}});
  }

  const stdfs::path& path() const { return path_; }

 private:
  stdfs::path path_;
};

inline CostReport cost_report(const stdfs::path& ledger_path) {
  CostReport report;
  for (const auto& rec : read_jsonl(ledger_path).records) {
    if (!rec.contains("bridge")) continue;
    CostRow& row = report.per_bridge[rec["bridge"].get<std::string>()];
    row.prompt_tokens += rec.value("prompt_tokens", 0L);
    row.completion_tokens += rec.value("completion_tokens", 0L);
    row.cost += rec.value("cost", 0.0);
    report.total.prompt_tokens += rec.value("prompt_tokens", 0L);
    report.total.completion_tokens += rec.value("completion_tokens", 0L);
    report.total.cost += rec.value("cost", 0.0);
  }
  return report;
}

}  // namespace aris::bridge
