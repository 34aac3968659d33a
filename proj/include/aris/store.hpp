#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "aris/clock.hpp"
#include "aris/hash.hpp"
#include "aris/jsonl.hpp"

namespace aris::store {

struct ArtifactRecord {
  std::string logical_name;
  std::string path;
  std::string content_hash;
  int version = 0;
  std::string producer;
  std::string created_at;
  bool no_op = false;  // identical bytes as the previous version
};

struct RunState {
  std::string run_id;
  std::string workflow;
  int step_index = 0;
  std::map<std::string, int> artifact_versions;
  json round_state = json::object();  // loop history, preset, directives
};

struct Checkpoint {
  std::string run_id;
  std::string path;
};

struct ContractViolation {
  std::string step;
  std::string artifact;
  std::string reason;
};

// Minimal view of a workflow the store needs for contract validation. The
// orchestrator's WorkflowDef converts to this.
struct ContractView {
  struct Step {
    std::string name;
    std::vector<std::string> consumes;
    std::vector<std::string> produces;
  };
  std::vector<std::string> inputs;  // artifacts the caller must supply
  std::vector<Step> steps;
};

inline std::vector<ContractViolation> validate_contracts(const ContractView& def) {
  std::vector<ContractViolation> violations;
  std::set<std::string> available(def.inputs.begin(), def.inputs.end());
  for (const auto& step : def.steps) {
    for (const auto& consumed : step.consumes) {
      if (!available.count(consumed))
        violations.push_back({step.name, consumed, "consumed with no upstream producer"});
    }
    for (const auto& produced : step.produces) available.insert(produced);
  }
  return violations;
}

enum class Mode { read_only, read_write };

// File-system-as-state artifact persistence. Layout under <root>/.aris/:
//   artifacts/<logical_name>/<version>.md
//   state/manifest.jsonl        header line, then one record per write
//   state/checkpoints/<run_id>.json
//
// Write discipline: the artifact file lands (write-then-rename) before its
// manifest line is appended, so a crash between the two leaves an unindexed
// file, never an indexed record with a bad digest.
class ArtifactStore {
 public:
  ArtifactStore(stdfs::path project_root, Mode mode, NowFn now = system_clock_fn())
      : root_(std::move(project_root)), mode_(mode), now_(std::move(now)) {
    if (mode_ == Mode::read_write) lock_.acquire(state_dir() / "lock");
    load_manifest();
  }

  const stdfs::path& root() const { return root_; }
  stdfs::path aris_dir() const { return root_ / ".aris"; }
  stdfs::path state_dir() const { return aris_dir() / "state"; }
  stdfs::path artifacts_dir() const { return aris_dir() / "artifacts"; }
  stdfs::path manifest_path() const { return state_dir() / "manifest.jsonl"; }
  stdfs::path checkpoints_dir() const { return state_dir() / "checkpoints"; }

  ArtifactRecord put_artifact(const std::string& logical_name, std::string_view content,
                              const std::string& producer) {
    require_writable();
    if (logical_name.empty()) raise(Errc::invalid_value, "logical_name is empty");
    for (char c : logical_name)
      if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_' && c != '-' && c != '.')
        raise(Errc::invalid_value, "logical_name not path-safe: " + logical_name);

    ArtifactRecord rec;
    rec.logical_name = logical_name;
    rec.content_hash = sha256_hex(content);
    rec.producer = producer;
    rec.created_at = now_();

    auto& versions = index_[logical_name];
    rec.version = versions.empty() ? 1 : versions.rbegin()->first + 1;
    rec.no_op = !versions.empty() && versions.rbegin()->second.content_hash == rec.content_hash;

    stdfs::path file = artifacts_dir() / logical_name / (std::to_string(rec.version) + ".md");
    rec.path = file.string();
    write_file_atomic(file, content);

    ensure_manifest_header();
    append_jsonl(manifest_path(), json{{"name", rec.logical_name},
                                       {"version", rec.version},
                                       {"hash", rec.content_hash},
                                       {"producer", rec.producer},
                                       {"ts", rec.created_at},
                                       {"no_op", rec.no_op}});
    versions[rec.version] = rec;
    return rec;
  }

  std::pair<std::string, ArtifactRecord> get_artifact(const std::string& logical_name,
                                                      std::optional<int> version = {}) const {
    auto it = index_.find(logical_name);
    if (it == index_.end() || it->second.empty())
      raise(Errc::not_found, logical_name);
    const ArtifactRecord* rec = nullptr;
    if (version) {
      auto vit = it->second.find(*version);
      if (vit == it->second.end())
        raise(Errc::version_not_found,
              logical_name + " v" + std::to_string(*version));
      rec = &vit->second;
    } else {
      rec = &it->second.rbegin()->second;
    }
    std::string bytes = read_file(rec->path);
    if (sha256_hex(bytes) != rec->content_hash)
      raise(Errc::io_failure, "digest mismatch reading " + rec->path);
    return {std::move(bytes), *rec};
  }

  bool has_artifact(const std::string& logical_name) const {
    auto it = index_.find(logical_name);
    return it != index_.end() && !it->second.empty();
  }

  int latest_version(const std::string& logical_name) const {
    auto it = index_.find(logical_name);
    if (it == index_.end() || it->second.empty()) return 0;
    return it->second.rbegin()->first;
  }

  std::vector<std::string> artifact_names() const {
    std::vector<std::string> out;
    for (const auto& [name, versions] : index_)
      if (!versions.empty()) out.push_back(name);
    return out;
  }

  // ---- checkpoints ------------------------------------------------------

  Checkpoint save_checkpoint(const RunState& state) {
    require_writable();
    if (state.run_id.empty()) raise(Errc::invalid_value, "run_id is empty");
    for (const auto& [name, version] : state.artifact_versions) {
      auto it = index_.find(name);
      if (it == index_.end() || !it->second.count(version))
        raise(Errc::invalid_value, "checkpoint pins missing artifact " + name + " v" +
                                       std::to_string(version));
    }
    json doc{{"run_id", state.run_id},
             {"workflow", state.workflow},
             {"step_index", state.step_index},
             {"artifact_versions", state.artifact_versions},
             {"round_state", state.round_state},
             {"saved_at", now_()}};
    stdfs::path file = checkpoints_dir() / (state.run_id + ".json");
    write_file_atomic(file, doc.dump(2));
    return {state.run_id, file.string()};
  }

  // Reconstructs the saved state under a forked run id; the source checkpoint
  // is never modified.
  RunState resume(const std::string& run_id) const {
    stdfs::path file = checkpoints_dir() / (run_id + ".json");
    auto content = read_file_if(file);
    if (!content) raise(Errc::unknown_run, run_id);
    json doc = json::parse(*content, nullptr, false);
    if (doc.is_discarded() || !doc.contains("run_id") || !doc.contains("step_index") ||
        !doc.contains("artifact_versions"))
      raise(Errc::corrupt_checkpoint, run_id);

    RunState state;
    state.workflow = doc.value("workflow", "");
    state.step_index = doc["step_index"].get<int>();
    state.round_state = doc.value("round_state", json::object());
    for (auto& [name, v] : doc["artifact_versions"].items()) {
      int version = v.get<int>();
      auto it = index_.find(name);
      if (it == index_.end() || !it->second.count(version))
        raise(Errc::corrupt_checkpoint,
              run_id + " pins missing artifact " + name + " v" + std::to_string(version));
      state.artifact_versions[name] = version;
    }
    state.run_id = fork_run_id(run_id);
    return state;
  }

  bool has_checkpoint(const std::string& run_id) const {
    return stdfs::exists(checkpoints_dir() / (run_id + ".json"));
  }

  stdfs::path runs_dir() const { return aris_dir() / "runs"; }
  stdfs::path run_dir(const std::string& run_id) const { return runs_dir() / run_id; }

 private:
  void require_writable() const {
    if (mode_ != Mode::read_write)
      raise(Errc::io_failure, "store opened read-only");
  }

  void ensure_manifest_header() {
    if (stdfs::exists(manifest_path())) return;
    append_jsonl(manifest_path(),
                 json{{"type", "aris-manifest"}, {"format", 1}, {"hash_algo", kHashAlgorithm}});
  }

  void load_manifest() {
    auto read = read_jsonl(manifest_path());
    for (const auto& line : read.records) {
      if (line.value("type", "") == "aris-manifest") continue;
      if (!line.contains("name") || !line.contains("version")) continue;
      ArtifactRecord rec;
      rec.logical_name = line["name"].get<std::string>();
      rec.version = line["version"].get<int>();
      rec.content_hash = line.value("hash", "");
      rec.producer = line.value("producer", "");
      rec.created_at = line.value("ts", "");
      rec.no_op = line.value("no_op", false);
      rec.path =
          (artifacts_dir() / rec.logical_name / (std::to_string(rec.version) + ".md")).string();
      index_[rec.logical_name][rec.version] = rec;
    }
  }

  std::string fork_run_id(const std::string& base) const {
    int attempt = 1;
    while (stdfs::exists(checkpoints_dir() / (base + "-r" + std::to_string(attempt) + ".json")))
      ++attempt;
    return base + "-r" + std::to_string(attempt);
  }

  stdfs::path root_;
  Mode mode_;
  NowFn now_;
  ProjectLock lock_;
  std::map<std::string, std::map<int, ArtifactRecord>> index_;
};

}  // namespace aris::store
