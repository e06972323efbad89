#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "genealogy/errors.hpp"
#include "genealogy/matrix.hpp"
#include "genealogy/types.hpp"

namespace genealogy {

struct StoreConfig {
  /// Upper bound on PARENT_OF in-edges per author.
  std::uint32_t max_advisors = 2;

  friend bool operator==(const StoreConfig&, const StoreConfig&) = default;
};

/// Embedded property-graph store: author and article nodes joined by
/// PARENT_OF, CITED_BY and AUTHORED_BY relations.
///
/// AUTHORED_BY is held on each ArticleRecord (`author_ids`). PARENT_OF is
/// mirrored in every author's `advisors`/`advisees` maps and kept coherent
/// by every mutation. Mutations are all-or-nothing: a throwing call leaves
/// the store untouched.
class GenealogyGraph {
 public:
  GenealogyGraph() = default;
  explicit GenealogyGraph(StoreConfig config) : config_(config) {
    if (config_.max_advisors == 0) throw ValidationError("max_advisors must be >= 1");
  }

  const StoreConfig& config() const noexcept { return config_; }
  std::size_t author_count() const noexcept { return authors_.size(); }
  std::size_t article_count() const noexcept { return articles_.size(); }

  const std::vector<AuthorRecord>& authors() const noexcept { return authors_; }
  const std::vector<ArticleRecord>& articles() const noexcept { return articles_; }
  const std::vector<CitedBy>& cited_by() const noexcept { return cited_by_; }
  const std::vector<AuthorCitation>& author_citations() const noexcept {
    return author_citations_;
  }

  const AuthorRecord& author(AuthorId id) const {
    if (id.index() >= authors_.size()) {
      throw UnknownAuthorError("unknown author id " + std::to_string(id.value));
    }
    return authors_[id.index()];
  }

  std::optional<AuthorId> find_by_key(const std::string& key) const {
    const auto it = external_keys_.find(key);
    if (it == external_keys_.end()) return std::nullopt;
    return it->second;
  }

  const ArticleRecord& article(ArticleId id) const {
    if (id.index() >= articles_.size()) {
      throw DanglingReferenceError("unknown article id " + std::to_string(id.value));
    }
    return articles_[id.index()];
  }

  /// PARENT_OF edges, sorted by (advisor, advisee).
  std::vector<ParentOf> parent_of() const {
    std::vector<ParentOf> edges;
    for (const auto& a : authors_) {
      for (const auto& [child, _] : a.advisees) edges.push_back({a.id, child});
    }
    return edges;
  }

  std::size_t parent_of_count() const noexcept {
    std::size_t n = 0;
    for (const auto& a : authors_) n += a.advisees.size();
    return n;
  }

  AuthorId add_author(AuthorRecord record) {
    std::vector<AuthorRecord> batch;
    batch.push_back(std::move(record));
    return add_authors(std::move(batch)).front();
  }

  /// Inserts a batch of authors. Ids are assigned densely in batch order
  /// (`author_count()` onward) and the `id` field of each record is ignored;
  /// advisor/advisee keys may name existing authors or any member of the
  /// batch by its future id.
  std::vector<AuthorId> add_authors(std::vector<AuthorRecord> batch) {
    const std::size_t base = authors_.size();
    const std::size_t limit = base + batch.size();
    std::unordered_map<std::string, AuthorId> keys = external_keys_;

    std::vector<AuthorId> ids;
    ids.reserve(batch.size());
    for (std::size_t k = 0; k < batch.size(); ++k) {
      auto& rec = batch[k];
      rec.id = AuthorId(static_cast<std::uint32_t>(base + k));
      if (rec.name.empty()) throw ValidationError("author name must be non-empty");
      if (!rec.external_key.empty() && !keys.emplace(rec.external_key, rec.id).second) {
        throw DuplicateIdError("external key '" + rec.external_key + "' already in use");
      }
      for (const auto* side : {&rec.advisors, &rec.advisees}) {
        for (const auto& [other, _] : *side) {
          if (other == rec.id) {
            throw CycleError("author '" + rec.name + "' cannot be their own advisor");
          }
          if (other.index() >= limit) {
            throw UnknownAuthorError("author '" + rec.name + "' references unknown id " +
                                     std::to_string(other.value));
          }
        }
      }
      ids.push_back(rec.id);
    }

    // Appended in place; on failure the batch and every link it added to
    // pre-existing authors are rolled back.
    std::vector<ParentOf> touched;
    try {
      std::vector<std::pair<std::map<AuthorId, CitationCount>,
                            std::map<AuthorId, CitationCount>>> declared;
      declared.reserve(batch.size());
      authors_.reserve(limit);
      for (auto& rec : batch) {
        declared.emplace_back(std::move(rec.advisors), std::move(rec.advisees));
        rec.advisors.clear();
        rec.advisees.clear();
        authors_.push_back(std::move(rec));
      }
      std::vector<AuthorId> check_limit(ids);
      for (std::size_t k = 0; k < declared.size(); ++k) {
        const AuthorId self = ids[k];
        for (const auto& [adv, count] : declared[k].first) {
          if (adv.index() < base) touched.push_back({adv, self});
          link(adv, self, count, true);
        }
        for (const auto& [stu, count] : declared[k].second) {
          if (stu.index() < base) {
            touched.push_back({self, stu});
            check_limit.push_back(stu);
          }
          link(self, stu, count, false);
        }
      }
      for (AuthorId id : check_limit) {
        const auto& rec = authors_[id.index()];
        if (rec.advisors.size() > config_.max_advisors) {
          throw ValidationError("author '" + rec.name + "' has " +
                                std::to_string(rec.advisors.size()) +
                                " advisors; maximum is " +
                                std::to_string(config_.max_advisors));
        }
      }
      check_acyclic(base);
    } catch (...) {
      for (const auto& e : touched) {
        if (e.advisor.index() < base) authors_[e.advisor.index()].advisees.erase(e.advisee);
        if (e.advisee.index() < base) authors_[e.advisee.index()].advisors.erase(e.advisor);
      }
      authors_.resize(base);
      throw;
    }
    external_keys_ = std::move(keys);
    return ids;
  }

  ArticleId add_article(std::string key, std::string title, std::vector<AuthorId> author_ids) {
    if (author_ids.empty()) throw ValidationError("article '" + key + "' has no authors");
    for (std::size_t i = 0; i < author_ids.size(); ++i) {
      author(author_ids[i]);
      for (std::size_t j = 0; j < i; ++j) {
        if (author_ids[i] == author_ids[j]) {
          throw ValidationError("article '" + key + "' lists an author twice");
        }
      }
    }
    if (!key.empty() && article_keys_.contains(key)) {
      throw DuplicateIdError("article key '" + key + "' already in use");
    }
    const ArticleId id(static_cast<std::uint32_t>(articles_.size()));
    if (!key.empty()) article_keys_.emplace(key, id);
    articles_.push_back(ArticleRecord{id, std::move(key), std::move(title), std::move(author_ids)});
    return id;
  }

  /// Records that `citing` cites `cited`. Repeats accumulate.
  void add_citation(ArticleId citing, ArticleId cited) {
    article(citing);
    article(cited);
    if (citing == cited) throw ValidationError("an article cannot cite itself");
    cited_by_.push_back({cited, citing});
  }

  void add_author_citation(AuthorId cited, AuthorId citing, CitationCount count) {
    author(cited);
    author(citing);
    if (count == 0) return;
    author_citations_.push_back({cited, citing, count});
  }

  /// Rewrites `total_citations` and the per-neighbour counts from `m`.
  void refresh_citation_counts(const AllAuthorMatrix& m) {
    if (m.size() != authors_.size()) {
      throw DimensionMismatchError("matrix size " + std::to_string(m.size()) +
                                   " != author count " + std::to_string(authors_.size()));
    }
    for (auto& a : authors_) {
      a.total_citations = m.row_sum(a.id);
      for (auto& [adv, count] : a.advisors) count = m.at(a.id, adv);
      for (auto& [stu, count] : a.advisees) count = m.at(a.id, stu);
    }
  }

 private:
  void link(AuthorId advisor, AuthorId advisee, CitationCount count,
            bool count_belongs_to_advisee) {
    auto& adv_rec = authors_[advisor.index()];
    auto& stu_rec = authors_[advisee.index()];
    // Each side stores citations *to itself* from the other.
    auto& on_stu = stu_rec.advisors[advisor];
    auto& on_adv = adv_rec.advisees[advisee];
    if (count_belongs_to_advisee) {
      on_stu = std::max(on_stu, count);
    } else {
      on_adv = std::max(on_adv, count);
    }
  }

  /// Any new cycle must pass through a node added in this batch, so a
  /// three-colour DFS from the new nodes is enough.
  void check_acyclic(std::size_t first_new) const {
    const auto& rs = authors_;
    enum : std::uint8_t { white, grey, black };
    std::vector<std::uint8_t> colour(rs.size(), white);
    struct Frame {
      std::size_t node;
      std::map<AuthorId, CitationCount>::const_iterator next;
    };
    std::vector<Frame> stack;
    for (std::size_t start = first_new; start < rs.size(); ++start) {
      if (colour[start] != white) continue;
      colour[start] = grey;
      stack.push_back({start, rs[start].advisees.begin()});
      while (!stack.empty()) {
        auto& top = stack.back();
        if (top.next == rs[top.node].advisees.end()) {
          colour[top.node] = black;
          stack.pop_back();
          continue;
        }
        const std::size_t child = (top.next++)->first.index();
        if (colour[child] == grey) {
          throw CycleError("PARENT_OF cycle through author '" + rs[child].name + "'");
        }
        if (colour[child] == white) {
          colour[child] = grey;
          stack.push_back({child, rs[child].advisees.begin()});
        }
      }
    }
  }

  StoreConfig config_;
  std::vector<AuthorRecord> authors_;
  std::vector<ArticleRecord> articles_;
  std::vector<CitedBy> cited_by_;
  std::vector<AuthorCitation> author_citations_;
  std::unordered_map<std::string, AuthorId> external_keys_;
  std::unordered_map<std::string, ArticleId> article_keys_;
};

/// Builds the all-author matrix: every CITED_BY edge p -> q adds one to
/// [i][j] for each author i of p and author j of q; direct author citations
/// are added on top.
inline AllAuthorMatrix derive_matrix(const GenealogyGraph& g) {
  std::vector<AllAuthorMatrix::Triplet> t;
  for (const auto& e : g.cited_by()) {
    const auto& cited = g.article(e.cited).author_ids;
    const auto& citing = g.article(e.citing).author_ids;
    for (AuthorId i : cited) {
      for (AuthorId j : citing) t.push_back({i, j, 1});
    }
  }
  for (const auto& c : g.author_citations()) t.push_back({c.cited, c.citing, c.count});
  return AllAuthorMatrix::from_triplets(g.author_count(), std::move(t));
}

}  // namespace genealogy
