#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "genealogy/errors.hpp"
#include "genealogy/store.hpp"
#include "genealogy/types.hpp"

namespace genealogy {

/// Rows of an author's block matrix, in order.
enum class Relation : std::uint8_t {
  children = 0,
  grandchildren = 1,
  parents = 2,
  grandparents = 3,
};

inline constexpr std::size_t kBlockRows = 4;

/// Per-author local network: two generations each way plus siblings.
/// Every set is sorted ascending and excludes the owner.
struct LocalNetwork {
  AuthorId owner;
  std::vector<AuthorId> children;
  std::vector<AuthorId> grandchildren;
  std::vector<AuthorId> parents;
  std::vector<AuthorId> grandparents;
  std::vector<AuthorId> siblings;

  friend bool operator==(const LocalNetwork&, const LocalNetwork&) = default;
};

/// Dense 4 x |columns| binary view of one author's local network.
struct BlockMatrix {
  AuthorId owner;
  std::vector<AuthorId> columns;
  std::array<std::vector<std::uint8_t>, kBlockRows> rows;

  const std::vector<std::uint8_t>& row(Relation r) const {
    return rows[static_cast<std::size_t>(r)];
  }
};

/// The block rows of every author, prebuilt once per snapshot.
///
/// Each block row is kept in sparse form (sorted member list) so a lookup is
/// a slice into a flat buffer: no graph traversal at query time, and memory
/// linear in the number of local-network memberships rather than 4*N*N.
class BlockIndex {
 public:
  BlockIndex() = default;

  explicit BlockIndex(const GenealogyGraph& g) : n_(g.author_count()) {
    const auto& authors = g.authors();
    std::array<Csr, kBlockRows> rows;
    auto& children = rows[0];
    auto& parents = rows[2];
    children = build([&](std::size_t i, auto&& out) {
      for (const auto& [c, _] : authors[i].advisees) out(c);
    });
    parents = build([&](std::size_t i, auto&& out) {
      for (const auto& [p, _] : authors[i].advisors) out(p);
    });
    rows[1] = build([&](std::size_t i, auto&& out) {
      for (AuthorId c : children.row(i)) {
        for (AuthorId gc : children.row(c.index())) out(gc);
      }
    });
    rows[3] = build([&](std::size_t i, auto&& out) {
      for (AuthorId p : parents.row(i)) {
        for (AuthorId gp : parents.row(p.index())) out(gp);
      }
    });
    siblings_ = build([&](std::size_t i, auto&& out) {
      for (AuthorId p : parents.row(i)) {
        for (AuthorId s : children.row(p.index())) {
          if (s.index() != i) out(s);
        }
      }
    });
    rows_ = std::move(rows);
  }

  std::size_t size() const noexcept { return n_; }

  /// Members of one block row; sorted, duplicate-free.
  std::span<const AuthorId> members(AuthorId owner, Relation r) const {
    check(owner);
    return rows_[static_cast<std::size_t>(r)].row(owner.index());
  }

  std::span<const AuthorId> siblings(AuthorId owner) const {
    check(owner);
    return siblings_.row(owner.index());
  }

  LocalNetwork local_network(AuthorId owner) const {
    auto copy = [](std::span<const AuthorId> s) {
      return std::vector<AuthorId>(s.begin(), s.end());
    };
    return LocalNetwork{owner,
                        copy(members(owner, Relation::children)),
                        copy(members(owner, Relation::grandchildren)),
                        copy(members(owner, Relation::parents)),
                        copy(members(owner, Relation::grandparents)),
                        copy(siblings(owner))};
  }

  /// Entries visited when reading all block rows of `owner`.
  std::size_t touched(AuthorId owner) const {
    std::size_t n = siblings(owner).size();
    for (std::size_t r = 0; r < kBlockRows; ++r) n += rows_[r].row(owner.index()).size();
    return n;
  }

 private:
  struct Csr {
    std::vector<std::size_t> ptr{0};
    std::vector<AuthorId> ids;

    std::span<const AuthorId> row(std::size_t i) const {
      return {ids.data() + ptr[i], ids.data() + ptr[i + 1]};
    }
  };

  template <class Emit>
  Csr build(Emit&& emit) const {
    Csr csr;
    csr.ptr.reserve(n_ + 1);
    for (std::size_t i = 0; i < n_; ++i) {
      const std::size_t start = csr.ids.size();
      emit(i, [&](AuthorId id) { csr.ids.push_back(id); });
      auto first = csr.ids.begin() + static_cast<std::ptrdiff_t>(start);
      std::sort(first, csr.ids.end());
      csr.ids.erase(std::unique(first, csr.ids.end()), csr.ids.end());
      csr.ptr.push_back(csr.ids.size());
    }
    return csr;
  }

  void check(AuthorId id) const {
    if (id.index() >= n_) {
      throw UnknownAuthorError("unknown author id " + std::to_string(id.value));
    }
  }

  std::size_t n_ = 0;
  std::array<Csr, kBlockRows> rows_;
  Csr siblings_;
};

/// Projects the owner's block rows onto `columns` (all authors when empty).
inline BlockMatrix build_block_matrix(const BlockIndex& index, AuthorId owner,
                                      std::optional<std::vector<AuthorId>> columns = {}) {
  BlockMatrix bm;
  bm.owner = owner;
  index.members(owner, Relation::children);  // validates owner
  if (columns) {
    for (AuthorId c : *columns) {
      if (c.index() >= index.size()) {
        throw UnknownAuthorError("unknown column author id " + std::to_string(c.value));
      }
    }
    bm.columns = std::move(*columns);
  } else {
    bm.columns.reserve(index.size());
    for (std::size_t i = 0; i < index.size(); ++i) {
      bm.columns.emplace_back(static_cast<std::uint32_t>(i));
    }
  }
  for (std::size_t r = 0; r < kBlockRows; ++r) {
    const auto members = index.members(owner, static_cast<Relation>(r));
    auto& row = bm.rows[r];
    row.assign(bm.columns.size(), 0);
    for (std::size_t c = 0; c < bm.columns.size(); ++c) {
      row[c] = std::binary_search(members.begin(), members.end(), bm.columns[c]) ? 1 : 0;
    }
  }
  return bm;
}

}  // namespace genealogy
