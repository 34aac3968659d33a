#pragma once

// HttpBridge::send_impl lives apart from bridge.hpp so that offline builds
// (tests, mock-only configs) never compile the HTTP client.

#include <chrono>
#include <random>

#include <httplib.h>

#include "aris/bridge.hpp"

namespace aris::bridge {

inline ChatExchange HttpBridge::send_impl(const std::vector<ChatMessage>& messages) {
  const char* key = std::getenv(config_.auth_env.c_str());
  if (key == nullptr) raise(Errc::auth_missing, config_.bridge_id + ": " + config_.auth_env);

  json body{{"model", config_.model}, {"messages", json::array()}};
  for (const auto& m : messages)
    body["messages"].push_back({{"role", role_name(m.role)}, {"content", m.content}});
  if (!config_.reasoning_effort.empty()) body["reasoning_effort"] = config_.reasoning_effort;

  auto split_at = config_.endpoint.find('/', config_.endpoint.find("//") + 2);
  std::string host = config_.endpoint.substr(0, split_at);
  std::string path = split_at == std::string::npos ? "/" : config_.endpoint.substr(split_at);

  httplib::Client client(host);
  client.set_connection_timeout(30);
  client.set_read_timeout(120);
  httplib::Headers headers{{"Authorization", std::string("Bearer ") + key}};

  httplib::Result res;
  for (int attempt = 0; attempt < 2; ++attempt) {
    res = client.Post(path, headers, body.dump(), "application/json");
    if (res) break;
    if (attempt == 0) {
      // one retry on transport failure, jittered
      static thread_local std::mt19937 rng{std::random_device{}()};
      std::uniform_int_distribution<int> jitter(100, 600);
      std::this_thread::sleep_for(std::chrono::milliseconds(jitter(rng)));
    }
  }
  if (!res) raise(Errc::timeout, config_.bridge_id + ": transport failure");
  if (res->status >= 400)
    raise(Errc::provider_error, config_.bridge_id + ": HTTP " + std::to_string(res->status));

  json reply = json::parse(res->body, nullptr, false);
  if (reply.is_discarded())
    raise(Errc::provider_error, config_.bridge_id + ": unparseable response body");

  ChatExchange ex;
  if (reply.contains("choices") && !reply["choices"].empty())
    ex.reply = reply["choices"][0]["message"].value("content", "");
  if (reply.contains("usage")) {
    ex.usage.prompt_tokens = reply["usage"].value("prompt_tokens", 0L);
    ex.usage.completion_tokens = reply["usage"].value("completion_tokens", 0L);
  }
  return ex;
}

}  // namespace aris::bridge
