#pragma once

// Synthetic corpus generator with planted citation cartels.
//
// Genealogy: authors are created in order; each non-root author picks an
// advisor uniformly among earlier authors (and, with a small probability, a
// second one), so PARENT_OF is acyclic by construction.
//
// Citations: every article cites `background_citations` uniformly random
// articles. A cartel is an advisor together with their advisees; each
// article by a cartel member additionally cites `cartel_citations` random
// articles written by other members of the same cartel.
//
// Output is a pure function of the parameters (including the seed).

#include <algorithm>
#include <array>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <random>
#include <string>
#include <vector>

#include "genealogy/errors.hpp"
#include "genealogy/ingest.hpp"

namespace genealogy {

struct SyntheticParams {
  std::size_t authors = 1000;
  std::size_t cartels = 0;
  std::uint64_t seed = 1;
  double root_fraction = 0.05;
  double second_advisor_prob = 0.05;
  std::size_t articles_per_author = 3;
  std::size_t background_citations = 4;
  std::size_t cartel_citations = 6;
  double coauthor_prob = 0.1;
};

struct SyntheticCorpus {
  RawCorpus corpus;
  /// Members of each planted cartel, as external keys (advisor first).
  std::vector<std::vector<std::string>> cartels;
};

namespace detail {

/// Portable bounded draw; std::uniform_int_distribution differs between
/// standard libraries, which would break cross-platform reproducibility.
inline std::uint64_t draw_below(std::mt19937_64& rng, std::uint64_t n) {
  const auto x = static_cast<unsigned __int128>(rng()) * n;
  return static_cast<std::uint64_t>(x >> 64);
}

inline double draw_unit(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline constexpr std::array<const char*, 16> kGiven = {
    "Ada", "Alan", "Barbara", "Claude", "Donald", "Edsger", "Frances", "Grace",
    "John", "Joseph", "Leslie", "Margaret", "Niklaus", "Radia", "Shafi", "Tony"};
inline constexpr std::array<const char*, 16> kFamily = {
    "Cook", "Smith", "Hopper", "Knuth", "Lamport", "Liskov", "Milner", "Perlman",
    "Rabin", "Ritchie", "Scott", "Tarjan", "Turing", "Wirth", "Yao", "Zhang"};
inline constexpr std::array<const char*, 6> kInstitutes = {
    "TU Delft", "MIT", "ETH Zurich", "IISc", "Stanford", "Oxford"};
inline constexpr std::array<const char*, 5> kCountries = {"India", "USA", "Switzerland",
                                                          "UK", "Germany"};
inline constexpr std::array<const char*, 4> kDomains = {"Algorithms", "Systems",
                                                        "Machine Learning", "Theory"};

inline std::string author_key(std::size_t i) {
  std::string k = std::to_string(i);
  return "a" + std::string(k.size() < 6 ? 6 - k.size() : 0, '0') + k;
}

}  // namespace detail

inline SyntheticCorpus generate_synthetic(const SyntheticParams& p) {
  if (p.authors == 0) throw ValidationError("synthetic corpus needs at least one author");
  std::mt19937_64 rng(p.seed);
  SyntheticCorpus out;
  auto& c = out.corpus;
  c.authors_file = "authors.txt";
  c.articles_file = "articles.txt";
  c.citations_file = "citations.txt";

  std::vector<std::vector<std::size_t>> advisees(p.authors);
  for (std::size_t i = 0; i < p.authors; ++i) {
    RawAuthorEntry e;
    e.line = i + 1;
    e.name = std::string(detail::kGiven[detail::draw_below(rng, detail::kGiven.size())]) + " " +
             detail::kFamily[detail::draw_below(rng, detail::kFamily.size())];
    e.external_key = detail::author_key(i);
    e.institute = detail::kInstitutes[detail::draw_below(rng, detail::kInstitutes.size())];
    e.country = detail::kCountries[detail::draw_below(rng, detail::kCountries.size())];
    e.domain = detail::kDomains[detail::draw_below(rng, detail::kDomains.size())];
    e.thesis = "Thesis " + std::to_string(i);
    e.year = static_cast<std::int32_t>(1950 + (70 * i) / p.authors);
    if (i > 0 && detail::draw_unit(rng) >= p.root_fraction) {
      const auto first = detail::draw_below(rng, i);
      e.advisor_names.push_back("@" + detail::author_key(first));
      advisees[first].push_back(i);
      if (i > 1 && detail::draw_unit(rng) < p.second_advisor_prob) {
        auto second = detail::draw_below(rng, i - 1);
        if (second >= first) ++second;
        e.advisor_names.push_back("@" + detail::author_key(second));
        advisees[second].push_back(i);
      }
    }
    c.authors.push_back(std::move(e));
  }

  // Articles, indexed by author.
  std::vector<std::vector<std::size_t>> written(p.authors);
  for (std::size_t i = 0; i < p.authors; ++i) {
    for (std::size_t k = 0; k < p.articles_per_author; ++k) {
      RawArticle a;
      a.line = c.articles.size() + 1;
      a.key = "p" + std::to_string(c.articles.size());
      a.title = "Article " + std::to_string(k) + " by " + detail::author_key(i);
      a.author_refs.push_back("@" + detail::author_key(i));
      if (p.authors > 1 && detail::draw_unit(rng) < p.coauthor_prob) {
        auto co = detail::draw_below(rng, p.authors - 1);
        if (co >= i) ++co;
        a.author_refs.push_back("@" + detail::author_key(co));
      }
      written[i].push_back(c.articles.size());
      c.articles.push_back(std::move(a));
    }
  }
  const std::size_t n_articles = c.articles.size();
  auto cite = [&](std::size_t citing, std::size_t cited) {
    if (citing == cited) return;
    c.citations.push_back({c.articles[citing].key, c.articles[cited].key, c.citations.size() + 1});
  };

  if (n_articles > 1) {
    for (std::size_t a = 0; a < n_articles; ++a) {
      for (std::size_t k = 0; k < p.background_citations; ++k) {
        cite(a, detail::draw_below(rng, n_articles));
      }
    }
  }

  // Cartels: advisors with at least two advisees, chosen without replacement.
  std::vector<std::size_t> candidates;
  for (std::size_t i = 0; i < p.authors; ++i) {
    if (advisees[i].size() >= 2) candidates.push_back(i);
  }
  std::vector<bool> taken(p.authors, false);
  while (out.cartels.size() < p.cartels && !candidates.empty()) {
    const auto pick = detail::draw_below(rng, candidates.size());
    const std::size_t head = candidates[pick];
    candidates.erase(candidates.begin() + static_cast<std::ptrdiff_t>(pick));
    std::vector<std::size_t> members{head};
    for (std::size_t s : advisees[head]) {
      if (!taken[s]) members.push_back(s);
    }
    if (taken[head] || members.size() < 2) continue;
    for (std::size_t m : members) taken[m] = true;
    for (std::size_t pos = 0; pos < members.size(); ++pos) {
      for (std::size_t art : written[members[pos]]) {
        for (std::size_t j = 0; j < p.cartel_citations; ++j) {
          auto other = detail::draw_below(rng, members.size() - 1);
          if (other >= pos) ++other;
          const auto& pool = written[members[other]];
          if (!pool.empty()) cite(art, pool[detail::draw_below(rng, pool.size())]);
        }
      }
    }
    std::vector<std::string> keys;
    for (std::size_t m : members) keys.push_back(detail::author_key(m));
    out.cartels.push_back(std::move(keys));
  }
  return out;
}

/// Writes authors.txt, articles.txt, citations.txt and cartels.txt.
inline void write_synthetic(const SyntheticCorpus& s, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  auto open = [&](const char* name) {
    std::ofstream out(dir / name, std::ios::trunc);
    if (!out) throw IoError("cannot write '" + (dir / name).string() + "'");
    return out;
  };
  auto authors = open("authors.txt");
  for (const auto& e : s.corpus.authors) {
    authors << "name=" << detail::escape(e.name);
    if (!e.advisor_names.empty()) {
      authors << "\tadvisors=";
      for (std::size_t i = 0; i < e.advisor_names.size(); ++i) {
        authors << (i ? "|" : "") << detail::escape(e.advisor_names[i]);
      }
    }
    authors << "\tthesis=" << detail::escape(e.thesis) << "\tinstitute="
            << detail::escape(e.institute) << "\tcountry=" << detail::escape(e.country)
            << "\tdomain=" << detail::escape(e.domain);
    if (e.year) authors << "\tyear=" << *e.year;
    authors << "\tkey=" << detail::escape(e.external_key) << '\n';
  }
  auto articles = open("articles.txt");
  for (const auto& a : s.corpus.articles) {
    articles << "key=" << detail::escape(a.key) << "\ttitle=" << detail::escape(a.title)
             << "\tauthors=";
    for (std::size_t i = 0; i < a.author_refs.size(); ++i) {
      articles << (i ? "|" : "") << detail::escape(a.author_refs[i]);
    }
    articles << '\n';
  }
  auto citations = open("citations.txt");
  for (const auto& cit : s.corpus.citations) citations << cit.citing << '\t' << cit.cited << '\n';
  auto cartels = open("cartels.txt");
  cartels << "# cartel\tmember_key\n";
  for (std::size_t k = 0; k < s.cartels.size(); ++k) {
    for (const auto& key : s.cartels[k]) cartels << k << '\t' << key << '\n';
  }
}

}  // namespace genealogy
