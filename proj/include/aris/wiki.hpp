#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "aris/hash.hpp"
#include "aris/jsonl.hpp"
#include "aris/strings.hpp"

namespace aris::wiki {

constexpr size_t kQueryPackCharCap = 8000;

enum class EntityType { paper, idea, experiment, claim };

inline std::string_view entity_name(EntityType t) {
  switch (t) {
    case EntityType::paper: return "paper";
    case EntityType::idea: return "idea";
    case EntityType::experiment: return "experiment";
    case EntityType::claim: return "claim";
  }
  return "?";
}

inline std::optional<EntityType> parse_entity(std::string_view s) {
  if (s == "paper") return EntityType::paper;
  if (s == "idea") return EntityType::idea;
  if (s == "experiment") return EntityType::experiment;
  if (s == "claim") return EntityType::claim;
  return std::nullopt;
}

inline const std::vector<std::string>& statuses_for(EntityType t) {
  static const std::vector<std::string> paper = {"ingested"};
  static const std::vector<std::string> idea = {"proposed", "active", "rejected"};
  static const std::vector<std::string> experiment = {"planned", "running", "done", "failed"};
  static const std::vector<std::string> claim = {"untested", "supported", "partially_supported",
                                                 "invalidated"};
  switch (t) {
    case EntityType::paper: return paper;
    case EntityType::idea: return idea;
    case EntityType::experiment: return experiment;
    case EntityType::claim: return claim;
  }
  return paper;
}

inline std::string default_status(EntityType t) {
  switch (t) {
    case EntityType::paper: return "ingested";
    case EntityType::idea: return "proposed";
    case EntityType::experiment: return "planned";
    case EntityType::claim: return "untested";
  }
  return "";
}

// Exactly eight relations; anything else is rejected at the boundary.
inline const std::vector<std::string>& canonical_relations() {
  static const std::vector<std::string> r = {"extends",   "contradicts", "addresses_gap",
                                             "inspired_by", "tested_by", "supports",
                                             "invalidates", "supersedes"};
  return r;
}

struct WikiNode {
  std::string node_id;  // "<entity_type>/<slug>-<6 hex>"; generated when empty
  EntityType entity_type = EntityType::idea;
  std::string title;
  std::string body;
  std::string status;  // defaulted per entity type when empty
  long seq = 0;        // monotone update counter; drives recency ordering
};

struct WikiEdge {
  std::string src;
  std::string dst;
  std::string relation;
};

struct QueryPack {
  std::string text;
  size_t char_count = 0;
  std::vector<std::string> gaps;
  std::vector<std::string> rejected_ideas;
  std::vector<std::string> validated_claims;
  std::vector<std::string> recent_experiments;
};

// Typed knowledge graph persisted as Markdown pages plus an edge list.
// In-memory when constructed without a root; write-through otherwise.
class Wiki {
 public:
  Wiki() = default;
  explicit Wiki(stdfs::path project_root) : root_(std::move(project_root)) { load(); }

  std::string add_node(WikiNode node) {
    if (node.status.empty()) node.status = default_status(node.entity_type);
    validate_status(node.entity_type, node.status);
    if (node.node_id.empty()) node.node_id = generate_id(node.entity_type, node.title);
    if (nodes_.count(node.node_id)) raise(Errc::duplicate_id, node.node_id);
    node.seq = ++seq_;
    const std::string id = node.node_id;
    nodes_[id] = std::move(node);
    persist_node(nodes_[id]);
    return id;
  }

  void add_edge(const WikiEdge& edge) {
    const auto& rels = canonical_relations();
    if (std::find(rels.begin(), rels.end(), edge.relation) == rels.end())
      raise(Errc::unknown_relation, edge.relation);
    if (!nodes_.count(edge.src)) raise(Errc::unknown_endpoint, edge.src);
    if (!nodes_.count(edge.dst)) raise(Errc::unknown_endpoint, edge.dst);
    for (const auto& e : edges_)
      if (e.src == edge.src && e.dst == edge.dst && e.relation == edge.relation)
        raise(Errc::duplicate_edge, edge.src + " -" + edge.relation + "-> " + edge.dst);
    edges_.push_back(edge);
    if (!root_.empty())
      append_jsonl(edges_path(),
                   json{{"src", edge.src}, {"dst", edge.dst}, {"relation", edge.relation}});
  }

  const WikiNode& node(const std::string& id) const {
    auto it = nodes_.find(id);
    if (it == nodes_.end()) raise(Errc::unknown_node, id);
    return it->second;
  }

  bool has_node(const std::string& id) const { return nodes_.count(id) > 0; }
  const std::vector<WikiEdge>& edges() const { return edges_; }
  size_t node_count() const { return nodes_.size(); }

  std::vector<const WikiNode*> nodes_of(EntityType t) const {
    std::vector<const WikiNode*> out;
    for (const auto& [id, n] : nodes_)
      if (n.entity_type == t) out.push_back(&n);
    return out;
  }

  // Replaces a claim's status, keeping the full history in the page body.
  const WikiNode& update_claim_status(const std::string& claim_id, const std::string& verdict) {
    auto it = nodes_.find(claim_id);
    if (it == nodes_.end()) raise(Errc::unknown_node, claim_id);
    WikiNode& n = it->second;
    if (n.entity_type != EntityType::claim) raise(Errc::not_a_claim, claim_id);
    if (verdict != "supported" && verdict != "partially_supported" && verdict != "invalidated")
      raise(Errc::invalid_value, "claim verdict " + verdict);
    n.seq = ++seq_;
    if (n.body.find("## Status History") == std::string::npos) {
      if (!n.body.empty() && n.body.back() != '\n') n.body += '\n';
      n.body += "\n## Status History\n";
    }
    n.body += "- update " + std::to_string(n.seq) + ": " + n.status + " -> " + verdict + "\n";
    n.status = verdict;
    persist_node(n);
    return n;
  }

  // Ideas never worth revisiting: rejected ones, plus any idea a claim
  // explicitly invalidates.
  std::set<std::string> banlist() const {
    std::set<std::string> out;
    for (const auto& [id, n] : nodes_)
      if (n.entity_type == EntityType::idea && n.status == "rejected") out.insert(id);
    for (const auto& e : edges_) {
      if (e.relation != "invalidates") continue;
      auto src = nodes_.find(e.src);
      auto dst = nodes_.find(e.dst);
      if (src == nodes_.end() || dst == nodes_.end()) continue;
      if (src->second.entity_type == EntityType::claim &&
          dst->second.entity_type == EntityType::idea)
        out.insert(e.dst);
    }
    return out;
  }

  // Compressed summary for ideation. Fixed section order; entries are added
  // in priority order and the render is cut at the longest whole-entry prefix
  // that stays under the character cap.
  QueryPack build_query_pack() const {
    struct Entry {
      int section;
      std::string text;
    };
    std::vector<Entry> entries;

    std::vector<const WikiEdge*> gap_edges;
    for (const auto& e : edges_)
      if (e.relation == "addresses_gap") gap_edges.push_back(&e);
    // latest recorded gaps first
    for (auto it = gap_edges.rbegin(); it != gap_edges.rend(); ++it)
      entries.push_back(
          {0, "- " + title_of((*it)->src) + " addresses a gap in " + title_of((*it)->dst)});

    auto by_recency = [this](std::vector<const WikiNode*> ns) {
      std::sort(ns.begin(), ns.end(), [](const WikiNode* a, const WikiNode* b) {
        if (a->seq != b->seq) return a->seq > b->seq;
        return a->node_id < b->node_id;
      });
      return ns;
    };

    std::set<std::string> banned = banlist();
    std::vector<const WikiNode*> rejected;
    for (const auto& id : banned) rejected.push_back(&nodes_.at(id));
    std::sort(rejected.begin(), rejected.end(), [](const WikiNode* a, const WikiNode* b) {
      if (a->seq != b->seq) return a->seq > b->seq;
      return a->node_id < b->node_id;
    });
    for (const auto* n : rejected)
      entries.push_back({1, "- " + n->node_id + ": " + n->title});

    for (const auto* n : by_recency(nodes_of(EntityType::claim)))
      if (n->status == "supported")
        entries.push_back({2, "- " + n->node_id + ": " + n->title});

    for (const auto* n : by_recency(nodes_of(EntityType::experiment)))
      entries.push_back({3, "- " + n->node_id + ": " + n->title + " [" + n->status + "]"});

    static const char* headers[4] = {"## Gaps", "## Rejected Ideas", "## Validated Claims",
                                     "## Recent Experiments"};
    auto render = [&](size_t upto) {
      std::string text = "# Query Pack\n";
      for (int s = 0; s < 4; ++s) {
        text += "\n";
        text += headers[s];
        text += "\n";
        for (size_t i = 0; i < upto; ++i)
          if (entries[i].section == s) {
            text += entries[i].text;
            text += '\n';
          }
      }
      return text;
    };

    // longest whole-entry prefix that fits; render length is monotone in the
    // prefix, so binary search
    size_t lo = 0, hi = entries.size();
    while (lo < hi) {
      size_t mid = (lo + hi + 1) / 2;
      if (count_codepoints(render(mid)) <= kQueryPackCharCap) lo = mid;
      else hi = mid - 1;
    }
    size_t keep = lo;
    std::string text = render(keep);

    QueryPack pack;
    pack.text = text;
    pack.char_count = count_codepoints(text);
    for (size_t i = 0; i < keep; ++i) {
      switch (entries[i].section) {
        case 0: pack.gaps.push_back(entries[i].text); break;
        case 1: pack.rejected_ideas.push_back(entries[i].text); break;
        case 2: pack.validated_claims.push_back(entries[i].text); break;
        case 3: pack.recent_experiments.push_back(entries[i].text); break;
      }
    }
    if (!root_.empty()) write_file_atomic(wiki_dir() / "query_pack.md", pack.text);
    return pack;
  }

  // ---- persistence ------------------------------------------------------

  stdfs::path wiki_dir() const { return root_ / ".aris" / "wiki"; }
  stdfs::path edges_path() const { return wiki_dir() / "edges.jsonl"; }

  void load() {
    if (root_.empty()) return;
    for (EntityType t :
         {EntityType::paper, EntityType::idea, EntityType::experiment, EntityType::claim}) {
      for (const auto& file : list_files(wiki_dir() / std::string(entity_name(t)), ".md")) {
        WikiNode n = parse_page(read_file(file), t, file.string());
        seq_ = std::max(seq_, n.seq);
        nodes_[n.node_id] = std::move(n);
      }
    }
    for (const auto& rec : read_jsonl(edges_path()).records)
      edges_.push_back({rec.value("src", ""), rec.value("dst", ""), rec.value("relation", "")});
  }

 private:
  void validate_status(EntityType t, const std::string& status) const {
    const auto& allowed = statuses_for(t);
    if (std::find(allowed.begin(), allowed.end(), status) == allowed.end())
      raise(Errc::invalid_value,
            "status '" + status + "' not valid for " + std::string(entity_name(t)));
  }

  std::string title_of(const std::string& id) const {
    auto it = nodes_.find(id);
    return it == nodes_.end() ? id : it->second.title;
  }

  std::string generate_id(EntityType t, const std::string& title) const {
    std::string base = std::string(entity_name(t)) + "/" + slugify(title);
    for (int salt = 0;; ++salt) {
      std::string input = std::string(entity_name(t)) + "\n" + title;
      if (salt) input += "#" + std::to_string(salt);
      std::string id = base + "-" + sha256_hex(input).substr(0, 6);
      if (!nodes_.count(id)) return id;
    }
  }

  void persist_node(const WikiNode& n) {
    if (root_.empty()) return;
    std::string page = "---\n";
    page += "node_id: " + n.node_id + "\n";
    page += "entity_type: " + std::string(entity_name(n.entity_type)) + "\n";
    page += "status: " + n.status + "\n";
    page += "title: " + n.title + "\n";
    page += "seq: " + std::to_string(n.seq) + "\n";
    page += "---\n";
    page += n.body;
    // node ids embed the entity type, so the id maps straight onto the path
    write_file_atomic(wiki_dir() / (n.node_id + ".md"), page);
  }

  static WikiNode parse_page(const std::string& text, EntityType expected,
                             const std::string& path) {
    WikiNode n;
    n.entity_type = expected;
    auto lines = split_lines(text);
    if (lines.empty() || trim(lines[0]) != "---")
      raise(Errc::io_failure, "bad wiki page " + path);
    size_t i = 1;
    for (; i < lines.size() && trim(lines[i]) != "---"; ++i) {
      auto colon = lines[i].find(':');
      if (colon == std::string::npos) continue;
      std::string key = trim(lines[i].substr(0, colon));
      std::string value = trim(lines[i].substr(colon + 1));
      if (key == "node_id") n.node_id = value;
      else if (key == "status") n.status = value;
      else if (key == "title") n.title = value;
      else if (key == "seq") n.seq = std::strtol(value.c_str(), nullptr, 10);
      else if (key == "entity_type") {
        auto t = parse_entity(value);
        if (t) n.entity_type = *t;
      }
    }
    size_t body_start = 0;
    for (size_t k = 0; k <= i && k < lines.size(); ++k) body_start += lines[k].size() + 1;
    n.body = body_start < text.size() ? text.substr(body_start) : std::string();
    return n;
  }

  stdfs::path root_;
  std::map<std::string, WikiNode> nodes_;
  std::vector<WikiEdge> edges_;
  long seq_ = 0;
};

}  // namespace aris::wiki
