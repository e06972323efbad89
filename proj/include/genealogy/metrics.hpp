#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "genealogy/block_matrix.hpp"
#include "genealogy/errors.hpp"
#include "genealogy/matrix.hpp"
#include "genealogy/snapshot.hpp"
#include "genealogy/types.hpp"

namespace genealogy {

/// Which local-network sets count as the author's genealogy.
struct MemberSet {
  bool children = true;
  bool grandchildren = true;
  bool parents = true;
  bool grandparents = true;
  bool siblings = true;

  static constexpr MemberSet all() { return {}; }
  static constexpr MemberSet block_rows_only() { return {true, true, true, true, false}; }
  static constexpr MemberSet none() { return {false, false, false, false, false}; }

  friend bool operator==(const MemberSet&, const MemberSet&) = default;
};

/// Union of the selected sets of `net`, sorted and duplicate-free.
inline std::vector<AuthorId> select_members(const LocalNetwork& net, MemberSet members) {
  std::vector<AuthorId> out;
  auto take = [&](bool on, const std::vector<AuthorId>& set) {
    if (on) out.insert(out.end(), set.begin(), set.end());
  };
  take(members.children, net.children);
  take(members.grandchildren, net.grandchildren);
  take(members.parents, net.parents);
  take(members.grandparents, net.grandparents);
  take(members.siblings, net.siblings);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  std::erase(out, net.owner);
  return out;
}

/// Y: citations received by `author`. The diagonal (self-citations) is
/// counted only when `include_self` is set.
inline CitationCount total_citations(const AllAuthorMatrix& m, AuthorId author,
                                     bool include_self = false) {
  CitationCount y = 0;
  for (const auto& e : m.row_entries(author)) {
    if (e.col != author || include_self) y += e.count;
  }
  return y;
}

/// X: citations the owner received from members of the selected sets. A
/// member appearing in more than one set contributes once.
inline CitationCount genealogical_citations(const AllAuthorMatrix& m, const LocalNetwork& net,
                                            MemberSet members = MemberSet::all()) {
  if (net.owner.index() >= m.size()) {
    throw IndexError("network owner " + std::to_string(net.owner.value) +
                     " outside matrix of size " + std::to_string(m.size()));
  }
  CitationCount x = 0;
  for (AuthorId member : select_members(net, members)) x += m.at(net.owner, member);
  return x;
}

/// NGC = Y - X.
inline CitationCount ngc(CitationCount total, CitationCount genealogical) {
  if (genealogical > total) {
    throw InvariantError("genealogical citations " + std::to_string(genealogical) +
                         " exceed total " + std::to_string(total));
  }
  return total - genealogical;
}

/// X / Y, or nullopt when Y = 0.
inline std::optional<double> community_ratio(CitationCount total, CitationCount genealogical) {
  if (genealogical > total) {
    throw InvariantError("genealogical citations exceed total");
  }
  if (total == 0) return std::nullopt;
  return static_cast<double>(genealogical) / static_cast<double>(total);
}

struct Threshold {
  double lower = 0.5;
  double upper = 0.8;

  static Threshold make(double lower, double upper) {
    if (!(0.0 <= lower && lower <= upper && upper <= 1.0)) {
      throw ValidationError("threshold must satisfy 0 <= lower <= upper <= 1");
    }
    return {lower, upper};
  }

  friend bool operator==(const Threshold&, const Threshold&) = default;
};

inline constexpr Threshold kDefaultThreshold{0.5, 0.8};

/// Linear-interpolation quantile of sorted data (h = (n-1)p).
inline double quantile_sorted(std::span<const double> sorted, double p) {
  if (sorted.empty()) throw InvariantError("quantile of empty sample");
  const double h = (static_cast<double>(sorted.size()) - 1.0) * p;
  const auto lo = static_cast<std::size_t>(std::floor(h));
  const std::size_t hi = std::min(lo + 1, sorted.size() - 1);
  return sorted[lo] + (h - static_cast<double>(lo)) * (sorted[hi] - sorted[lo]);
}

/// Derives the lower/upper band from a corpus ratio distribution.
///
/// lower = Q3 of the defined ratios and upper = min(1, Q3 + 1.5 * IQR), with
/// quartiles by linear interpolation. Undefined ratios are skipped; if none
/// remain, `fallback` is returned.
inline Threshold compute_threshold(std::span<const std::optional<double>> ratios,
                                   Threshold fallback = kDefaultThreshold) {
  std::vector<double> defined;
  defined.reserve(ratios.size());
  for (const auto& r : ratios) {
    if (r && std::isfinite(*r)) defined.push_back(std::clamp(*r, 0.0, 1.0));
  }
  if (defined.empty()) return fallback;
  std::sort(defined.begin(), defined.end());
  const double q1 = quantile_sorted(defined, 0.25);
  const double q3 = quantile_sorted(defined, 0.75);
  return Threshold{q3, std::min(1.0, q3 + 1.5 * (q3 - q1))};
}

inline Threshold compute_threshold(std::span<const double> ratios,
                                   Threshold fallback = kDefaultThreshold) {
  std::vector<std::optional<double>> wrapped(ratios.begin(), ratios.end());
  return compute_threshold(std::span<const std::optional<double>>(wrapped), fallback);
}

enum class Verdict : std::uint8_t { Independent = 0, Watchlist = 1, LineageDependent = 2 };

inline constexpr std::string_view to_string(Verdict v) noexcept {
  switch (v) {
    case Verdict::Independent: return "Independent";
    case Verdict::Watchlist: return "Watchlist";
    case Verdict::LineageDependent: return "LineageDependent";
  }
  return "Independent";
}

inline constexpr Verdict classify(std::optional<double> ratio, Threshold t) noexcept {
  if (!ratio) return Verdict::Independent;
  if (*ratio > t.upper) return Verdict::LineageDependent;
  if (*ratio > t.lower) return Verdict::Watchlist;
  return Verdict::Independent;
}

/// Unordered pairs {i, j}, i < j, that cite each other at least
/// `min_each_direction` times in both directions. Sorted by (i, j).
inline std::vector<std::pair<AuthorId, AuthorId>> copious_pairs(
    const AllAuthorMatrix& m, CitationCount min_each_direction = 1) {
  if (min_each_direction == 0) throw ValidationError("min_each_direction must be >= 1");
  std::vector<std::pair<AuthorId, AuthorId>> out;
  for (std::size_t r = 0; r < m.size(); ++r) {
    const AuthorId i(static_cast<std::uint32_t>(r));
    for (const auto& e : m.row_entries(i)) {
      if (e.col <= i || e.count < min_each_direction) continue;
      if (m.at(e.col, i) >= min_each_direction) out.emplace_back(i, e.col);
    }
  }
  return out;
}

/// Copious partners of one author, sorted.
inline std::vector<AuthorId> copious_partners(const AllAuthorMatrix& m, AuthorId author,
                                              CitationCount min_each_direction = 1) {
  if (min_each_direction == 0) throw ValidationError("min_each_direction must be >= 1");
  std::vector<AuthorId> out;
  for (const auto& e : m.row_entries(author)) {
    if (e.col != author && e.count >= min_each_direction &&
        m.at(e.col, author) >= min_each_direction) {
      out.push_back(e.col);
    }
  }
  return out;
}

struct SiblingCitation {
  AuthorId sibling;
  CitationCount count;
  friend bool operator==(const SiblingCitation&, const SiblingCitation&) = default;
};

struct CommunityReport {
  AuthorId author;
  CitationCount total = 0;         // Y
  CitationCount genealogical = 0;  // X
  CitationCount ngc = 0;
  std::optional<double> ratio;
  Verdict verdict = Verdict::Independent;
  std::vector<AuthorId> copious_partners;
  std::vector<SiblingCitation> sibling_citers;

  friend bool operator==(const CommunityReport&, const CommunityReport&) = default;
};

struct CommunityOptions {
  MemberSet members = MemberSet::all();
  bool include_self_in_total = false;
  CitationCount copious_min = 1;
};

/// Report for one author over a prebuilt block index and matrix.
inline CommunityReport community_report(const BlockIndex& index, const AllAuthorMatrix& m,
                                        AuthorId author, Threshold t,
                                        const CommunityOptions& opt = {}) {
  const LocalNetwork net = index.local_network(author);
  CommunityReport r;
  r.author = author;
  r.total = total_citations(m, author, opt.include_self_in_total);
  r.genealogical = genealogical_citations(m, net, opt.members);
  r.ngc = ngc(r.total, r.genealogical);
  r.ratio = community_ratio(r.total, r.genealogical);
  r.verdict = classify(r.ratio, t);

  const auto community = select_members(net, MemberSet::all());
  for (AuthorId p : copious_partners(m, author, opt.copious_min)) {
    if (std::binary_search(community.begin(), community.end(), p)) {
      r.copious_partners.push_back(p);
    }
  }
  for (AuthorId s : net.siblings) {
    r.sibling_citers.push_back({s, m.at(author, s)});
  }
  return r;
}

/// One report per author, ordered by id.
inline std::vector<CommunityReport> detect_communities(const Snapshot& s,
                                                       const AllAuthorMatrix& m, Threshold t,
                                                       const CommunityOptions& opt = {}) {
  if (m.size() != s.author_count()) {
    throw DimensionMismatchError("matrix size " + std::to_string(m.size()) +
                                 " != author count " + std::to_string(s.author_count()));
  }
  std::vector<CommunityReport> out;
  out.reserve(s.author_count());
  for (std::size_t i = 0; i < s.author_count(); ++i) {
    out.push_back(
        community_report(s.index(), m, AuthorId(static_cast<std::uint32_t>(i)), t, opt));
  }
  return out;
}

/// Corpus ratio distribution feeding compute_threshold.
inline std::vector<std::optional<double>> corpus_ratios(const Snapshot& s,
                                                        const CommunityOptions& opt = {}) {
  std::vector<std::optional<double>> out;
  out.reserve(s.author_count());
  for (std::size_t i = 0; i < s.author_count(); ++i) {
    const AuthorId a(static_cast<std::uint32_t>(i));
    const auto y = total_citations(s.matrix(), a, opt.include_self_in_total);
    const auto x = genealogical_citations(s.matrix(), s.index().local_network(a), opt.members);
    out.push_back(community_ratio(y, x));
  }
  return out;
}

/// Author Lineage Score: NGC / Y, the share of citations that come from
/// outside the author's lineage (1 = fully independent). 1 when Y = 0.
///
/// This formula is this library's own choice; no published parameterisation
/// exists.
inline double lineage_score(const CommunityReport& r) {
  if (r.total == 0) return 1.0;
  return static_cast<double>(r.ngc) / static_cast<double>(r.total);
}

}  // namespace genealogy
