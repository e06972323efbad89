#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace genealogy {

/// Dense index of an author within one corpus snapshot (0..N-1).
struct AuthorId {
  std::uint32_t value = 0;

  constexpr AuthorId() = default;
  constexpr explicit AuthorId(std::uint32_t v) : value(v) {}

  constexpr std::size_t index() const noexcept { return value; }
  friend constexpr auto operator<=>(AuthorId, AuthorId) = default;
};

struct ArticleId {
  std::uint32_t value = 0;

  constexpr ArticleId() = default;
  constexpr explicit ArticleId(std::uint32_t v) : value(v) {}

  constexpr std::size_t index() const noexcept { return value; }
  friend constexpr auto operator<=>(ArticleId, ArticleId) = default;
};

using CitationCount = std::uint64_t;

/// How an author entity was told apart from others during ingestion.
enum class ResolutionCase : std::uint8_t {
  UniqueName = 0,
  MultipleName = 1,
  TwoAdvisor = 2,
  MultipleNameTwoAdvisor = 3,
};

inline constexpr std::string_view to_string(ResolutionCase c) noexcept {
  switch (c) {
    case ResolutionCase::UniqueName: return "UniqueName";
    case ResolutionCase::MultipleName: return "MultipleName";
    case ResolutionCase::TwoAdvisor: return "TwoAdvisor";
    case ResolutionCase::MultipleNameTwoAdvisor: return "MultipleNameTwoAdvisor";
  }
  return "UniqueName";
}

inline constexpr ResolutionCase resolution_case(bool multiple_name,
                                                bool two_advisor) noexcept {
  if (multiple_name && two_advisor) return ResolutionCase::MultipleNameTwoAdvisor;
  if (multiple_name) return ResolutionCase::MultipleName;
  if (two_advisor) return ResolutionCase::TwoAdvisor;
  return ResolutionCase::UniqueName;
}

/// One scholar node. `advisors` is the Level 1 key-value set, `advisees` the
/// Level 2 set; each value is the number of citations that neighbour gave
/// this author.
struct AuthorRecord {
  AuthorId id;
  std::string name;
  std::map<AuthorId, CitationCount> advisors;
  std::map<AuthorId, CitationCount> advisees;
  std::string thesis;
  std::string institute;
  std::string country;
  std::string domain;
  CitationCount total_citations = 0;
  std::optional<std::int32_t> year;
  std::string external_key;
  ResolutionCase resolution = ResolutionCase::UniqueName;

  friend bool operator==(const AuthorRecord&, const AuthorRecord&) = default;
};

struct ArticleRecord {
  ArticleId id;
  std::string key;
  std::string title;
  std::vector<AuthorId> author_ids;

  friend bool operator==(const ArticleRecord&, const ArticleRecord&) = default;
};

/// PARENT_OF: advisor -> advisee.
struct ParentOf {
  AuthorId advisor;
  AuthorId advisee;
  friend auto operator<=>(const ParentOf&, const ParentOf&) = default;
};

/// CITED_BY: cited article -> citing article. Repeated edges accumulate.
struct CitedBy {
  ArticleId cited;
  ArticleId citing;
  friend auto operator<=>(const CitedBy&, const CitedBy&) = default;
};

/// Direct author-level citation count, bypassing article nodes.
struct AuthorCitation {
  AuthorId cited;
  AuthorId citing;
  CitationCount count = 0;
  friend auto operator<=>(const AuthorCitation&, const AuthorCitation&) = default;
};

}  // namespace genealogy

template <>
struct std::hash<genealogy::AuthorId> {
  std::size_t operator()(genealogy::AuthorId id) const noexcept {
    return std::hash<std::uint32_t>{}(id.value);
  }
};
