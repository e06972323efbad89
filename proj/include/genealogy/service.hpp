#pragma once

// HTTP query API over an immutable snapshot.
//
//   GET  /authors?name=<q>[&limit=<n>]  search by name substring
//   GET  /authors/{id}                  profile
//   GET  /authors/{id}/network          local network as NODES/EDGES
//   GET  /authors/{id}/community        community report + threshold
//   POST /admin/reload                  reload the configured snapshot file
//   GET  /health
//
// Routing is a pure function of (request, loaded corpus) so it can be tested
// without sockets; install_routes() binds it to cpp-httplib.

#include <charconv>
#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <httplib.h>
#include <json.hpp>

#include "genealogy/ingest.hpp"
#include "genealogy/metrics.hpp"
#include "genealogy/report_io.hpp"
#include "genealogy/snapshot.hpp"
#include "genealogy/snapshot_io.hpp"

namespace genealogy {

struct NetworkNode {
  AuthorId id;
  std::string label;
  int level = 0;
};

struct NetworkEdge {
  AuthorId from;
  AuthorId to;
};

/// Graph payload for the explorer: the owner first, then the nodes one level
/// away (advisees, then advisors), then two levels away. Edges are the
/// PARENT_OF pairs inside the node set, advisor -> advisee.
struct NetworkPayload {
  std::vector<NetworkNode> nodes;
  std::vector<NetworkEdge> edges;
};

inline NetworkPayload network_payload(const Snapshot& s, AuthorId owner) {
  const auto& idx = s.index();
  NetworkPayload p;
  std::map<AuthorId, std::size_t> position;
  auto add = [&](AuthorId id, int level) {
    if (position.emplace(id, p.nodes.size()).second) {
      p.nodes.push_back({id, s.author(id).name, level});
    }
  };
  add(owner, 0);
  for (AuthorId c : idx.members(owner, Relation::children)) add(c, 1);
  for (AuthorId a : idx.members(owner, Relation::parents)) add(a, -1);
  for (AuthorId c : idx.members(owner, Relation::grandchildren)) add(c, 2);
  for (AuthorId a : idx.members(owner, Relation::grandparents)) add(a, -2);

  for (const auto& node : p.nodes) {
    for (const auto& [advisee, _] : s.author(node.id).advisees) {
      if (position.contains(advisee)) p.edges.push_back({node.id, advisee});
    }
  }
  return p;
}

inline nlohmann::json to_json(const NetworkPayload& p) {
  nlohmann::json nodes = nlohmann::json::array();
  for (const auto& n : p.nodes) {
    nodes.push_back({{"id", std::to_string(n.id.value)}, {"label", n.label}, {"level", n.level}});
  }
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& e : p.edges) {
    edges.push_back({{"from", std::to_string(e.from.value)}, {"to", std::to_string(e.to.value)}});
  }
  return {{"nodes", std::move(nodes)}, {"edges", std::move(edges)}};
}

inline nlohmann::json profile_json(const AuthorRecord& a) {
  return {
      {"id", a.id.value},
      {"name", a.name},
      {"thesis", a.thesis},
      {"institute", a.institute},
      {"country", a.country},
      {"domain", a.domain},
      {"total_citations", a.total_citations},
      {"year", a.year ? nlohmann::json(*a.year) : nlohmann::json(nullptr)},
      {"case_tag", std::string(to_string(a.resolution))},
  };
}

struct ServiceConfig {
  std::optional<Threshold> threshold_override;
  CommunityOptions options;
  std::vector<std::string> cors_allowlist;
  std::optional<std::filesystem::path> snapshot_path;
  std::size_t default_search_limit = 50;
  std::size_t max_search_limit = 1000;
};

/// A snapshot with its threshold and precomputed reports.
struct LoadedCorpus {
  std::shared_ptr<const Snapshot> snapshot;
  Threshold threshold;
  std::vector<CommunityReport> reports;

  static std::shared_ptr<const LoadedCorpus> make(std::shared_ptr<const Snapshot> s,
                                                  const ServiceConfig& cfg) {
    auto c = std::make_shared<LoadedCorpus>();
    c->threshold = cfg.threshold_override
                       ? *cfg.threshold_override
                       : compute_threshold(std::span<const std::optional<double>>(
                             corpus_ratios(*s, cfg.options)));
    c->reports = detect_communities(*s, s->matrix(), c->threshold, cfg.options);
    c->snapshot = std::move(s);
    return c;
  }
};

struct ApiRequest {
  std::string method = "GET";
  std::string path;
  std::map<std::string, std::string> query;
};

struct ApiResponse {
  int status = 200;
  nlohmann::json body;

  /// Canonical compact serialisation (keys sorted).
  std::string text() const { return body.dump(); }
};

class ApiService {
 public:
  explicit ApiService(ServiceConfig cfg = {}) : cfg_(std::move(cfg)) {}

  const ServiceConfig& config() const noexcept { return cfg_; }

  /// Atomically replaces the served corpus. In-flight requests keep the
  /// corpus they started with.
  void load(std::shared_ptr<const Snapshot> s) {
    auto next = LoadedCorpus::make(std::move(s), cfg_);
    std::lock_guard lock(mu_);
    current_ = std::move(next);
  }

  void reload_from_disk() {
    if (!cfg_.snapshot_path) throw IoError("no snapshot path configured");
    load(snapshot_load(*cfg_.snapshot_path));
  }

  std::shared_ptr<const LoadedCorpus> current() const {
    std::lock_guard lock(mu_);
    return current_;
  }

  /// Thread-safe; concurrent calls only share the mutex-guarded corpus slot.
  ApiResponse handle(const ApiRequest& req) {
    const auto segs = split_path(req.path);
    if (segs.size() == 1 && segs[0] == "health") {
      if (req.method != "GET") return error(405, "method not allowed");
      return {200, {{"status", "ok"}, {"loaded", current() != nullptr}}};
    }
    if (segs.size() == 2 && segs[0] == "admin" && segs[1] == "reload") {
      if (req.method != "POST") return error(405, "method not allowed");
      return reload();
    }
    if (segs.empty() || segs[0] != "authors" || segs.size() > 3) return error(404, "not found");
    if (req.method != "GET") return error(405, "method not allowed");

    const auto corpus = current();
    if (!corpus) return error(503, "no corpus loaded");
    const Snapshot& snap = *corpus->snapshot;

    if (segs.size() == 1) return search(snap, req);

    const auto id = parse_id(segs[1]);
    if (!id) return error(400, "author id must be a non-negative integer");
    if (id->index() >= snap.author_count()) return error(404, "unknown author " + segs[1]);

    if (segs.size() == 2) return {200, profile_json(snap.author(*id))};
    if (segs[2] == "network") return {200, to_json(network_payload(snap, *id))};
    if (segs[2] == "community") {
      auto body = to_json(corpus->reports[id->index()], snap);
      body["threshold"] = to_json(corpus->threshold);
      return {200, std::move(body)};
    }
    return error(404, "not found");
  }

 private:
  static ApiResponse error(int status, std::string message) {
    return {status, {{"error", std::move(message)}}};
  }

  static std::vector<std::string> split_path(std::string_view path) {
    std::vector<std::string> segs;
    std::size_t start = 0;
    while (start < path.size()) {
      auto end = path.find('/', start);
      if (end == std::string_view::npos) end = path.size();
      if (end > start) segs.emplace_back(path.substr(start, end - start));
      start = end + 1;
    }
    return segs;
  }

  static std::optional<AuthorId> parse_id(std::string_view s) {
    std::uint32_t v = 0;
    const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || p != s.data() + s.size()) return std::nullopt;
    return AuthorId(v);
  }

  ApiResponse search(const Snapshot& snap, const ApiRequest& req) const {
    auto it = req.query.find("name");
    const std::string q = it == req.query.end() ? std::string() : normalize_name(it->second);
    if (q.empty()) return error(400, "query parameter 'name' must be non-empty");
    std::size_t limit = cfg_.default_search_limit;
    if (auto l = req.query.find("limit"); l != req.query.end()) {
      std::size_t v = 0;
      const auto& s = l->second;
      const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
      if (ec != std::errc() || p != s.data() + s.size() || v == 0) {
        return error(400, "limit must be a positive integer");
      }
      limit = std::min(v, cfg_.max_search_limit);
    }
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& a : snap.graph().authors()) {
      if (rows.size() >= limit) break;
      if (normalize_name(a.name).find(q) == std::string::npos) continue;
      rows.push_back({{"id", a.id.value},
                      {"name", a.name},
                      {"institute", a.institute},
                      {"case_tag", std::string(to_string(a.resolution))}});
    }
    return {200, std::move(rows)};
  }

  ApiResponse reload() {
    if (!cfg_.snapshot_path) return error(404, "no snapshot path configured");
    try {
      reload_from_disk();
    } catch (const Error& e) {
      return error(500, std::string("reload failed: ") + e.what());
    }
    return {200, {{"status", "reloaded"}, {"authors", current()->snapshot->author_count()}}};
  }

  ServiceConfig cfg_;
  mutable std::mutex mu_;
  std::shared_ptr<const LoadedCorpus> current_;
};

/// Routes every GET/POST on `svr` through `api`, adding CORS headers for
/// allow-listed origins.
inline void install_routes(httplib::Server& svr, ApiService& api) {
  auto handler = [&api](const httplib::Request& req, httplib::Response& res) {
    ApiRequest r;
    r.method = req.method;
    r.path = req.path;
    for (const auto& [k, v] : req.params) r.query.emplace(k, v);
    const auto out = api.handle(r);
    res.status = out.status;
    res.set_content(out.text(), "application/json");
    const auto origin = req.get_header_value("Origin");
    const auto& allow = api.config().cors_allowlist;
    if (!origin.empty() &&
        (std::find(allow.begin(), allow.end(), origin) != allow.end() ||
         std::find(allow.begin(), allow.end(), "*") != allow.end())) {
      res.set_header("Access-Control-Allow-Origin", origin);
      res.set_header("Vary", "Origin");
    }
  };
  svr.Get(".*", handler);
  svr.Post(".*", handler);
}

}  // namespace genealogy
