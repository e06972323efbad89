#pragma once

// Fixtures, random generators and independent oracles shared by the suites.
// Oracles here work from raw edge lists and dense matrices only; they never
// call BlockIndex or the metric functions they are used to check.

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "genealogy/genealogy.hpp"

namespace genealogy::testing {

inline std::filesystem::path data_dir() { return GENEALOGY_TEST_DATA; }

inline std::shared_ptr<const Snapshot> load_fixture(const std::string& name,
                                                    bool with_pairs = false) {
  CorpusPaths paths;
  paths.authors = data_dir() / name / "authors.txt";
  if (with_pairs) paths.author_pairs = data_dir() / name / "author_pairs.txt";
  return ingest(parse_corpus(paths));
}

inline std::shared_ptr<const Snapshot> chain() { return load_fixture("chain"); }
inline std::shared_ptr<const Snapshot> quartet() { return load_fixture("quartet", true); }

/// Id of the unique author with display name `name`.
inline AuthorId by_name(const Snapshot& s, const std::string& name) {
  for (const auto& a : s.graph().authors()) {
    if (a.name == name) return a.id;
  }
  throw UnknownAuthorError("fixture has no author named " + name);
}

inline const std::vector<std::vector<CitationCount>> kQuartetMatrix = {
    {10, 7, 0, 15},
    {21, 19, 0, 1},
    {15, 0, 3, 12},
    {0, 17, 0, 1},
};

// ---------------------------------------------------------------------------
// Random corpora

struct RandomGenealogy {
  std::size_t n = 0;
  std::vector<ParentOf> edges;  // advisor -> advisee, advisor id < advisee id
};

/// Random forest with occasional second advisors. Acyclic because every
/// edge points from a lower id to a higher id.
inline RandomGenealogy random_genealogy(std::mt19937_64& rng, std::size_t n,
                                        double root_prob = 0.2, double second_prob = 0.15) {
  RandomGenealogy g;
  g.n = n;
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (std::size_t v = 1; v < n; ++v) {
    if (unit(rng) < root_prob) continue;
    std::uniform_int_distribution<std::size_t> pick(0, v - 1);
    const auto p = pick(rng);
    g.edges.push_back({AuthorId(static_cast<std::uint32_t>(p)),
                       AuthorId(static_cast<std::uint32_t>(v))});
    if (v > 1 && unit(rng) < second_prob) {
      auto q = pick(rng);
      if (q != p) {
        g.edges.push_back({AuthorId(static_cast<std::uint32_t>(q)),
                           AuthorId(static_cast<std::uint32_t>(v))});
      }
    }
  }
  return g;
}

inline GenealogyGraph to_graph(const RandomGenealogy& rg) {
  GenealogyGraph g;
  std::vector<AuthorRecord> recs(rg.n);
  for (std::size_t i = 0; i < rg.n; ++i) recs[i].name = "author" + std::to_string(i);
  for (const auto& e : rg.edges) recs[e.advisee.index()].advisors[e.advisor] = 0;
  g.add_authors(std::move(recs));
  return g;
}

/// Random all-author matrix over `n` authors, dense form.
inline std::vector<std::vector<CitationCount>> random_dense(std::mt19937_64& rng, std::size_t n,
                                                            double density = 0.3,
                                                            CitationCount max_count = 5) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_int_distribution<CitationCount> count(1, max_count);
  std::vector<std::vector<CitationCount>> d(n, std::vector<CitationCount>(n, 0));
  for (auto& row : d) {
    for (auto& x : row) {
      if (unit(rng) < density) x = count(rng);
    }
  }
  return d;
}

inline GenealogyGraph with_dense_citations(GenealogyGraph g,
                                           const std::vector<std::vector<CitationCount>>& d) {
  for (std::size_t i = 0; i < d.size(); ++i) {
    for (std::size_t j = 0; j < d.size(); ++j) {
      if (d[i][j]) {
        g.add_author_citation(AuthorId(static_cast<std::uint32_t>(i)),
                              AuthorId(static_cast<std::uint32_t>(j)), d[i][j]);
      }
    }
  }
  return g;
}

// ---------------------------------------------------------------------------
// Traversal oracle

struct OracleNetwork {
  std::set<std::uint32_t> children, grandchildren, parents, grandparents, siblings;
};

/// Depth-limited walk over an explicit PARENT_OF edge list.
inline OracleNetwork traverse(const std::vector<ParentOf>& edges, std::uint32_t owner) {
  auto down = [&](const std::set<std::uint32_t>& from) {
    std::set<std::uint32_t> out;
    for (const auto& e : edges) {
      if (from.count(e.advisor.value)) out.insert(e.advisee.value);
    }
    return out;
  };
  auto up = [&](const std::set<std::uint32_t>& from) {
    std::set<std::uint32_t> out;
    for (const auto& e : edges) {
      if (from.count(e.advisee.value)) out.insert(e.advisor.value);
    }
    return out;
  };
  OracleNetwork n;
  n.children = down({owner});
  n.grandchildren = down(n.children);
  n.parents = up({owner});
  n.grandparents = up(n.parents);
  n.siblings = down(n.parents);
  n.siblings.erase(owner);
  return n;
}

inline std::set<std::uint32_t> as_set(const std::vector<AuthorId>& v) {
  std::set<std::uint32_t> s;
  for (auto id : v) s.insert(id.value);
  return s;
}

// ---------------------------------------------------------------------------
// Reference report, first principles

struct NaiveReport {
  CitationCount total = 0;
  CitationCount genealogical = 0;
  CitationCount ngc = 0;
  std::optional<double> ratio;
  std::string verdict;
  std::set<std::uint32_t> copious;
  std::map<std::uint32_t, CitationCount> sibling_citers;
};

inline NaiveReport naive_report(const std::vector<ParentOf>& edges,
                                const std::vector<std::vector<CitationCount>>& d,
                                std::uint32_t owner, double lower, double upper,
                                bool siblings = true, bool include_self = false) {
  NaiveReport r;
  const auto net = traverse(edges, owner);
  for (std::size_t j = 0; j < d.size(); ++j) {
    if (j != owner || include_self) r.total += d[owner][j];
  }
  std::set<std::uint32_t> members;
  for (const auto* s : {&net.children, &net.grandchildren, &net.parents, &net.grandparents}) {
    members.insert(s->begin(), s->end());
  }
  std::set<std::uint32_t> community = members;
  community.insert(net.siblings.begin(), net.siblings.end());
  if (siblings) members = community;
  members.erase(owner);
  for (auto m : members) r.genealogical += d[owner][m];
  r.ngc = r.total - r.genealogical;
  if (r.total) r.ratio = static_cast<double>(r.genealogical) / static_cast<double>(r.total);
  if (!r.ratio || *r.ratio <= lower) {
    r.verdict = "Independent";
  } else if (*r.ratio <= upper) {
    r.verdict = "Watchlist";
  } else {
    r.verdict = "LineageDependent";
  }
  for (auto m : community) {
    if (m != owner && d[owner][m] >= 1 && d[m][owner] >= 1) r.copious.insert(m);
  }
  for (auto s : net.siblings) r.sibling_citers[s] = d[owner][s];
  return r;
}

/// All unordered pairs meeting the mutual minimum, by exhaustive scan.
inline std::set<std::pair<std::uint32_t, std::uint32_t>> brute_copious(
    const std::vector<std::vector<CitationCount>>& d, CitationCount min) {
  std::set<std::pair<std::uint32_t, std::uint32_t>> out;
  for (std::uint32_t i = 0; i < d.size(); ++i) {
    for (std::uint32_t j = i + 1; j < d.size(); ++j) {
      if (d[i][j] >= min && d[j][i] >= min) out.insert({i, j});
    }
  }
  return out;
}

inline std::set<std::pair<std::uint32_t, std::uint32_t>> as_pair_set(
    const std::vector<std::pair<AuthorId, AuthorId>>& v) {
  std::set<std::pair<std::uint32_t, std::uint32_t>> s;
  for (const auto& [a, b] : v) s.insert({a.value, b.value});
  return s;
}

/// Quartile by sort-and-interpolate, written independently of the library.
inline double oracle_quantile(std::vector<double> xs, double p) {
  std::sort(xs.begin(), xs.end());
  const double pos = p * static_cast<double>(xs.size() - 1);
  const auto below = static_cast<std::size_t>(pos);
  if (below + 1 >= xs.size()) return xs.back();
  const double frac = pos - static_cast<double>(below);
  return xs[below] * (1.0 - frac) + xs[below + 1] * frac;
}

inline std::vector<double> read_ratios(const std::string& name) {
  std::ifstream in(data_dir() / "ratios" / (name + ".txt"));
  std::vector<double> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    out.push_back(std::stod(line));
  }
  return out;
}

}  // namespace genealogy::testing
