#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "genealogy/errors.hpp"
#include "genealogy/types.hpp"

namespace genealogy {

/// Which index of a matrix entry names the cited author.
///
/// `cited_row`: entry [i][j] is the number of times author j cited author i.
/// This is the canonical in-memory layout. `citing_row` is the transpose and
/// only matters when reading external data written in that orientation.
enum class MatrixConvention : std::uint8_t { cited_row = 0, citing_row = 1 };

/// Square author-by-author citation count matrix.
///
/// Stored sparsely (CSR by row plus a CSR copy of the transpose) since real
/// corpora touch a vanishing fraction of the N*N pairs. Entry (i, j) counts
/// how often author j cited author i; the diagonal holds self-citations.
class AllAuthorMatrix {
 public:
  struct Entry {
    AuthorId col;
    CitationCount count;
    friend bool operator==(const Entry&, const Entry&) = default;
  };

  struct Triplet {
    AuthorId row;
    AuthorId col;
    CitationCount count;
  };

  AllAuthorMatrix() = default;
  explicit AllAuthorMatrix(std::size_t n) : n_(n), row_ptr_(n + 1, 0), col_ptr_(n + 1, 0) {}

  /// Builds from (row, col, count) triplets; duplicates accumulate and zero
  /// counts are dropped.
  static AllAuthorMatrix from_triplets(std::size_t n, std::vector<Triplet> triplets) {
    for (const auto& t : triplets) {
      if (t.row.index() >= n || t.col.index() >= n) {
        throw IndexError("matrix triplet outside " + std::to_string(n) + "x" +
                         std::to_string(n));
      }
    }
    AllAuthorMatrix m(n);
    m.fill(triplets, m.row_ptr_, m.entries_, false);
    m.fill(triplets, m.col_ptr_, m.transposed_, true);
    return m;
  }

  static AllAuthorMatrix from_dense(const std::vector<std::vector<CitationCount>>& dense) {
    std::vector<Triplet> t;
    for (std::size_t i = 0; i < dense.size(); ++i) {
      if (dense[i].size() != dense.size()) {
        throw DimensionMismatchError("dense matrix is not square");
      }
      for (std::size_t j = 0; j < dense[i].size(); ++j) {
        if (dense[i][j] != 0) {
          t.push_back({AuthorId(static_cast<std::uint32_t>(i)),
                       AuthorId(static_cast<std::uint32_t>(j)), dense[i][j]});
        }
      }
    }
    return from_triplets(dense.size(), std::move(t));
  }

  std::size_t size() const noexcept { return n_; }
  std::size_t nonzeros() const noexcept { return entries_.size(); }

  CitationCount at(AuthorId row, AuthorId col) const {
    check(row);
    check(col);
    return lookup(row_entries(row), col);
  }

  /// Nonzero entries of one row (citations received by `row`), sorted by column.
  std::span<const Entry> row_entries(AuthorId row) const {
    check(row);
    return {entries_.data() + row_ptr_[row.index()],
            entries_.data() + row_ptr_[row.index() + 1]};
  }

  /// Nonzero entries of one column (citations given by `col`); Entry::col holds the row.
  std::span<const Entry> col_entries(AuthorId col) const {
    check(col);
    return {transposed_.data() + col_ptr_[col.index()],
            transposed_.data() + col_ptr_[col.index() + 1]};
  }

  CitationCount row_sum(AuthorId row) const {
    CitationCount s = 0;
    for (const auto& e : row_entries(row)) s += e.count;
    return s;
  }

  CitationCount total() const noexcept {
    CitationCount s = 0;
    for (const auto& e : entries_) s += e.count;
    return s;
  }

  AllAuthorMatrix transposed() const {
    AllAuthorMatrix t(n_);
    t.row_ptr_ = col_ptr_;
    t.entries_ = transposed_;
    t.col_ptr_ = row_ptr_;
    t.transposed_ = entries_;
    return t;
  }

  std::vector<std::vector<CitationCount>> dense() const {
    std::vector<std::vector<CitationCount>> d(n_, std::vector<CitationCount>(n_, 0));
    for (std::size_t i = 0; i < n_; ++i) {
      for (const auto& e : row_entries(AuthorId(static_cast<std::uint32_t>(i)))) {
        d[i][e.col.index()] = e.count;
      }
    }
    return d;
  }

  friend bool operator==(const AllAuthorMatrix& a, const AllAuthorMatrix& b) {
    return a.n_ == b.n_ && a.row_ptr_ == b.row_ptr_ && a.entries_ == b.entries_;
  }

 private:
  void check(AuthorId id) const {
    if (id.index() >= n_) {
      throw IndexError("author index " + std::to_string(id.value) +
                       " outside matrix of size " + std::to_string(n_));
    }
  }

  static CitationCount lookup(std::span<const Entry> row, AuthorId col) {
    auto it = std::lower_bound(row.begin(), row.end(), col,
                               [](const Entry& e, AuthorId c) { return e.col < c; });
    return (it != row.end() && it->col == col) ? it->count : 0;
  }

  void fill(const std::vector<Triplet>& triplets, std::vector<std::size_t>& ptr,
            std::vector<Entry>& out, bool transpose) const {
    std::vector<std::size_t> counts(n_ + 1, 0);
    for (const auto& t : triplets) {
      if (t.count == 0) continue;
      ++counts[(transpose ? t.col : t.row).index() + 1];
    }
    for (std::size_t i = 0; i < n_; ++i) counts[i + 1] += counts[i];
    std::vector<Entry> raw(counts[n_]);
    std::vector<std::size_t> cursor(counts.begin(), counts.end() - 1);
    for (const auto& t : triplets) {
      if (t.count == 0) continue;
      const auto r = (transpose ? t.col : t.row).index();
      raw[cursor[r]++] = Entry{transpose ? t.row : t.col, t.count};
    }
    // Sort each row by column and merge duplicate coordinates.
    ptr.assign(n_ + 1, 0);
    out.clear();
    out.reserve(raw.size());
    for (std::size_t r = 0; r < n_; ++r) {
      auto first = raw.begin() + static_cast<std::ptrdiff_t>(counts[r]);
      auto last = raw.begin() + static_cast<std::ptrdiff_t>(counts[r + 1]);
      std::sort(first, last, [](const Entry& a, const Entry& b) { return a.col < b.col; });
      for (auto it = first; it != last; ++it) {
        if (out.size() > ptr[r] && out.back().col == it->col) {
          out.back().count += it->count;
        } else {
          out.push_back(*it);
        }
      }
      ptr[r + 1] = out.size();
    }
  }

  std::size_t n_ = 0;
  std::vector<std::size_t> row_ptr_{0};
  std::vector<Entry> entries_;
  std::vector<std::size_t> col_ptr_{0};
  std::vector<Entry> transposed_;
};

}  // namespace genealogy
