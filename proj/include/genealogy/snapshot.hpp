#pragma once

#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "genealogy/block_matrix.hpp"
#include "genealogy/matrix.hpp"
#include "genealogy/store.hpp"

namespace genealogy {

/// Immutable corpus view: the store plus its derived all-author matrix and
/// prebuilt block index. Share it as `std::shared_ptr<const Snapshot>`; any
/// number of threads may read it.
class Snapshot {
 public:
  /// Finalises a store: derives the matrix, refreshes the per-author
  /// citation counts from it and builds the block index.
  static std::shared_ptr<const Snapshot> build(GenealogyGraph graph) {
    auto matrix = derive_matrix(graph);
    graph.refresh_citation_counts(matrix);
    return std::shared_ptr<const Snapshot>(new Snapshot(std::move(graph), std::move(matrix)));
  }

  const GenealogyGraph& graph() const noexcept { return graph_; }
  const AllAuthorMatrix& matrix() const noexcept { return matrix_; }
  const BlockIndex& index() const noexcept { return index_; }
  std::size_t author_count() const noexcept { return graph_.author_count(); }

  const AuthorRecord& author(AuthorId id) const { return graph_.author(id); }

 private:
  Snapshot(GenealogyGraph g, AllAuthorMatrix m)
      : graph_(std::move(g)), matrix_(std::move(m)), index_(graph_) {}

  GenealogyGraph graph_;
  AllAuthorMatrix matrix_;
  BlockIndex index_;
};

inline BlockMatrix build_block_matrix(const Snapshot& s, AuthorId owner,
                                      std::optional<std::vector<AuthorId>> columns = {}) {
  return build_block_matrix(s.index(), owner, std::move(columns));
}

inline LocalNetwork local_network(const Snapshot& s, AuthorId owner) {
  return s.index().local_network(owner);
}

}  // namespace genealogy
