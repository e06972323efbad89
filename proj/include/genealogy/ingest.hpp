#pragma once

// Corpus ingestion. File grammars are documented in docs/input-formats.md.
//
// Every corpus file is UTF-8 text, one record per line. Blank lines and
// lines whose first non-blank character is '#' are ignored. An author
// reference is either a display name (matched after normalisation) or
// '@' followed by an external key.

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <istream>
#include <map>
#include <memory>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <tuple>
#include <unordered_map>
#include <utility>
#include <vector>

#include "genealogy/errors.hpp"
#include "genealogy/matrix.hpp"
#include "genealogy/snapshot.hpp"
#include "genealogy/store.hpp"
#include "genealogy/types.hpp"

namespace genealogy {

struct RawAuthorEntry {
  std::string name;
  std::vector<std::string> advisor_names;
  std::string thesis;
  std::string institute;
  std::string country;
  std::string domain;
  std::optional<std::int32_t> year;
  std::string external_key;
  std::size_t line = 0;

  friend bool operator==(const RawAuthorEntry&, const RawAuthorEntry&) = default;
};

struct RawArticle {
  std::string key;
  std::string title;
  std::vector<std::string> author_refs;
  std::size_t line = 0;
};

struct RawCitation {
  std::string citing;
  std::string cited;
  std::size_t line = 0;
};

/// One matrix entry given directly: (row author, column author, count).
struct RawAuthorPair {
  std::string row;
  std::string col;
  CitationCount count = 0;
  std::size_t line = 0;
};

struct RawCorpus {
  std::string authors_file = "authors";
  std::string articles_file = "articles";
  std::string citations_file = "citations";
  std::string pairs_file = "author_pairs";
  std::vector<RawAuthorEntry> authors;
  std::vector<RawArticle> articles;
  std::vector<RawCitation> citations;
  std::vector<RawAuthorPair> pairs;
};

// ---------------------------------------------------------------------------
// Text helpers

/// Trim, collapse internal whitespace runs to one space, ASCII case-fold.
inline std::string normalize_name(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  bool pending_space = false;
  for (char ch : s) {
    const auto c = static_cast<unsigned char>(ch);
    if (std::isspace(c)) {
      pending_space = !out.empty();
      continue;
    }
    if (pending_space) out.push_back(' ');
    pending_space = false;
    out.push_back(static_cast<char>(std::tolower(c)));
  }
  return out;
}

/// Trim and collapse whitespace, keeping case (display form).
inline std::string clean_display(std::string_view s) {
  std::string out;
  bool pending_space = false;
  for (char ch : s) {
    if (std::isspace(static_cast<unsigned char>(ch))) {
      pending_space = !out.empty();
      continue;
    }
    if (pending_space) out.push_back(' ');
    pending_space = false;
    out.push_back(ch);
  }
  return out;
}

namespace detail {

inline bool is_comment_or_blank(std::string_view line) {
  const auto p = line.find_first_not_of(" \t\r");
  return p == std::string_view::npos || line[p] == '#';
}

/// Splits on an unescaped separator, then unescapes each piece.
inline std::vector<std::string> split_escaped(std::string_view s, char sep, bool& ok) {
  std::vector<std::string> out(1);
  ok = true;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const char c = s[i];
    if (c == '\\') {
      if (i + 1 >= s.size()) {
        ok = false;
        return out;
      }
      const char n = s[++i];
      switch (n) {
        case 't': out.back().push_back('\t'); break;
        case 'n': out.back().push_back('\n'); break;
        case '\\': out.back().push_back('\\'); break;
        case '|': out.back().push_back('|'); break;
        case '=': out.back().push_back('='); break;
        default: ok = false; return out;
      }
    } else if (c == sep) {
      out.emplace_back();
    } else {
      out.back().push_back(c);
    }
  }
  return out;
}

inline std::string escape(std::string_view s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '\t': out += "\\t"; break;
      case '\n': out += "\\n"; break;
      case '\\': out += "\\\\"; break;
      case '|': out += "\\|"; break;
      case '=': out += "\\="; break;
      default: out.push_back(c);
    }
  }
  return out;
}

inline std::string_view strip_cr(std::string_view line) {
  if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
  return line;
}

/// Splits a keyed line `k=v<TAB>k=v...` into raw (still escaped) values.
inline std::map<std::string, std::string> keyed_fields(std::string_view line,
                                                       const std::string& file, std::size_t n,
                                                       std::initializer_list<std::string_view> allowed) {
  std::map<std::string, std::string> fields;
  std::size_t start = 0;
  while (start <= line.size()) {
    std::size_t end = line.find('\t', start);
    if (end == std::string_view::npos) end = line.size();
    const auto field = line.substr(start, end - start);
    start = end + 1;
    if (field.find_first_not_of(' ') == std::string_view::npos) continue;
    // '=' inside a key is not allowed, so the first unescaped '=' splits.
    std::size_t eq = std::string_view::npos;
    for (std::size_t i = 0; i < field.size(); ++i) {
      if (field[i] == '\\') {
        ++i;
      } else if (field[i] == '=') {
        eq = i;
        break;
      }
    }
    if (eq == std::string_view::npos) {
      throw ParseError(file, n, "field '" + std::string(field) + "' is not key=value");
    }
    std::string key = clean_display(field.substr(0, eq));
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
      throw ParseError(file, n, "unknown field '" + key + "'");
    }
    if (!fields.emplace(key, std::string(field.substr(eq + 1))).second) {
      throw ParseError(file, n, "duplicate field '" + key + "'");
    }
  }
  return fields;
}

inline std::string scalar(const std::map<std::string, std::string>& f, const std::string& key,
                          const std::string& file, std::size_t n) {
  auto it = f.find(key);
  if (it == f.end()) return {};
  bool ok = true;
  auto parts = split_escaped(it->second, '\0', ok);
  if (!ok) throw ParseError(file, n, "bad escape in field '" + key + "'");
  return clean_display(parts.front());
}

inline std::vector<std::string> list(const std::map<std::string, std::string>& f,
                                     const std::string& key, const std::string& file,
                                     std::size_t n) {
  auto it = f.find(key);
  if (it == f.end()) return {};
  bool ok = true;
  auto parts = split_escaped(it->second, '|', ok);
  if (!ok) throw ParseError(file, n, "bad escape in field '" + key + "'");
  std::vector<std::string> out;
  for (auto& p : parts) {
    auto v = clean_display(p);
    if (!v.empty()) out.push_back(std::move(v));
  }
  return out;
}

/// Column split for the tabular files: tabs if present, else whitespace runs.
inline std::vector<std::string> columns(std::string_view line) {
  std::vector<std::string> out;
  if (line.find('\t') != std::string_view::npos) {
    std::size_t start = 0;
    while (true) {
      const auto end = line.find('\t', start);
      out.push_back(clean_display(line.substr(start, end - start)));
      if (end == std::string_view::npos) break;
      start = end + 1;
    }
  } else {
    std::istringstream ss{std::string(line)};
    std::string tok;
    while (ss >> tok) out.push_back(tok);
  }
  return out;
}

template <class Fn>
void for_each_record(std::istream& in, Fn&& fn) {
  std::string line;
  std::size_t n = 0;
  while (std::getline(in, line)) {
    ++n;
    const auto view = strip_cr(line);
    if (is_comment_or_blank(view)) continue;
    fn(view, n);
  }
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Parsing

inline std::vector<RawAuthorEntry> parse_authors(std::istream& in,
                                                 const std::string& file = "authors") {
  std::vector<RawAuthorEntry> out;
  detail::for_each_record(in, [&](std::string_view line, std::size_t n) {
    const auto f = detail::keyed_fields(
        line, file, n,
        {"name", "advisors", "thesis", "institute", "country", "domain", "year", "key"});
    RawAuthorEntry e;
    e.line = n;
    e.name = detail::scalar(f, "name", file, n);
    if (e.name.empty()) throw MissingFieldError(file, n, "missing required field 'name'");
    e.advisor_names = detail::list(f, "advisors", file, n);
    e.thesis = detail::scalar(f, "thesis", file, n);
    e.institute = detail::scalar(f, "institute", file, n);
    e.country = detail::scalar(f, "country", file, n);
    e.domain = detail::scalar(f, "domain", file, n);
    e.external_key = detail::scalar(f, "key", file, n);
    const auto year = detail::scalar(f, "year", file, n);
    if (!year.empty()) {
      std::int32_t y = 0;
      const auto [p, ec] = std::from_chars(year.data(), year.data() + year.size(), y);
      if (ec != std::errc() || p != year.data() + year.size()) {
        throw ParseError(file, n, "year '" + year + "' is not an integer");
      }
      e.year = y;
    }
    out.push_back(std::move(e));
  });
  return out;
}

inline std::vector<RawArticle> parse_articles(std::istream& in,
                                              const std::string& file = "articles") {
  std::vector<RawArticle> out;
  detail::for_each_record(in, [&](std::string_view line, std::size_t n) {
    const auto f = detail::keyed_fields(line, file, n, {"key", "title", "authors"});
    RawArticle a;
    a.line = n;
    a.key = detail::scalar(f, "key", file, n);
    if (a.key.empty()) throw MissingFieldError(file, n, "missing required field 'key'");
    a.title = detail::scalar(f, "title", file, n);
    a.author_refs = detail::list(f, "authors", file, n);
    if (a.author_refs.empty()) {
      throw MissingFieldError(file, n, "missing required field 'authors'");
    }
    out.push_back(std::move(a));
  });
  return out;
}

inline std::vector<RawCitation> parse_citations(std::istream& in,
                                                const std::string& file = "citations") {
  std::vector<RawCitation> out;
  detail::for_each_record(in, [&](std::string_view line, std::size_t n) {
    auto cols = detail::columns(line);
    if (cols.size() != 2 || cols[0].empty() || cols[1].empty()) {
      throw ParseError(file, n, "expected 2 columns: citing_article cited_article");
    }
    out.push_back({std::move(cols[0]), std::move(cols[1]), n});
  });
  return out;
}

inline std::vector<RawAuthorPair> parse_author_pairs(std::istream& in,
                                                     const std::string& file = "author_pairs") {
  std::vector<RawAuthorPair> out;
  detail::for_each_record(in, [&](std::string_view line, std::size_t n) {
    auto cols = detail::columns(line);
    if (cols.size() != 3 || cols[0].empty() || cols[1].empty()) {
      throw ParseError(file, n, "expected 3 columns: cited_author citing_author count");
    }
    CitationCount c = 0;
    const auto& s = cols[2];
    const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), c);
    if (ec != std::errc() || p != s.data() + s.size()) {
      throw ParseError(file, n, "count '" + s + "' is not a non-negative integer");
    }
    out.push_back({std::move(cols[0]), std::move(cols[1]), c, n});
  });
  return out;
}

struct CorpusPaths {
  std::filesystem::path authors;
  std::optional<std::filesystem::path> articles;
  std::optional<std::filesystem::path> citations;
  std::optional<std::filesystem::path> author_pairs;
};

/// Parses every file named in `paths`. Missing files raise IoError naming
/// the path.
inline RawCorpus parse_corpus(const CorpusPaths& paths) {
  auto open = [](const std::filesystem::path& p) {
    std::ifstream in(p);
    if (!in) throw IoError("cannot open '" + p.string() + "'");
    return in;
  };
  RawCorpus c;
  {
    auto in = open(paths.authors);
    c.authors_file = paths.authors.string();
    c.authors = parse_authors(in, c.authors_file);
  }
  if (paths.articles) {
    auto in = open(*paths.articles);
    c.articles_file = paths.articles->string();
    c.articles = parse_articles(in, c.articles_file);
  }
  if (paths.citations) {
    auto in = open(*paths.citations);
    c.citations_file = paths.citations->string();
    c.citations = parse_citations(in, c.citations_file);
  }
  if (paths.author_pairs) {
    auto in = open(*paths.author_pairs);
    c.pairs_file = paths.author_pairs->string();
    c.pairs = parse_author_pairs(in, c.pairs_file);
  }
  return c;
}

// ---------------------------------------------------------------------------
// Resolution

struct ResolveOptions {
  std::uint32_t max_advisors = 2;
};

/// One disambiguated author entity, merged from one or more raw entries.
struct ResolvedAuthor {
  AuthorId id;
  std::string name;
  std::string normalized_name;
  std::vector<std::size_t> entries;  // indices into the raw entry list
  std::vector<AuthorId> advisors;    // sorted, distinct
  ResolutionCase resolution = ResolutionCase::UniqueName;
  std::string thesis, institute, country, domain, external_key;
  std::optional<std::int32_t> year;
};

struct Resolution {
  std::vector<ResolvedAuthor> authors;
  /// entry index -> (entity id, case); parallel to the raw entry list.
  std::vector<std::pair<AuthorId, ResolutionCase>> by_entry;
  std::unordered_map<std::string, std::vector<AuthorId>> by_name;
  std::unordered_map<std::string, AuthorId> by_key;

  /// Resolves `@key` or a display name. `where` prefixes error messages.
  AuthorId lookup(std::string_view ref, const std::string& where) const {
    if (!ref.empty() && ref.front() == '@') {
      auto it = by_key.find(std::string(ref.substr(1)));
      if (it == by_key.end()) {
        throw DanglingReferenceError(where + ": unknown author key '" + std::string(ref) + "'");
      }
      return it->second;
    }
    auto it = by_name.find(normalize_name(ref));
    if (it == by_name.end()) {
      throw DanglingReferenceError(where + ": unknown author '" + std::string(ref) + "'");
    }
    if (it->second.size() > 1) {
      throw AmbiguousAuthorError(where + ": author name '" + std::string(ref) + "' matches " +
                                 std::to_string(it->second.size()) +
                                 " authors; reference by @key instead");
    }
    return it->second.front();
  }
};

namespace detail {

/// Entity key within a name group: external key, else (institute, year),
/// else the advisor reference set.
inline std::string disambiguator(const RawAuthorEntry& e) {
  if (!e.external_key.empty()) return "k\x1f" + e.external_key;
  if (!e.institute.empty() || e.year) {
    return "i\x1f" + normalize_name(e.institute) + "\x1f" +
           (e.year ? std::to_string(*e.year) : std::string("-"));
  }
  std::set<std::string> adv;
  for (const auto& a : e.advisor_names) adv.insert(a.front() == '@' ? a : normalize_name(a));
  std::string k = "a";
  for (const auto& a : adv) k += "\x1f" + a;
  return k;
}

inline void merge_field(std::string& into, const std::string& from) {
  if (into.empty()) into = from;
}

}  // namespace detail

/// Groups raw entries into author entities and tags each with its case.
///
/// Entries with the same normalised name are split when their
/// disambiguators differ and merged when they match exactly. Precedence of
/// disambiguators: external key, then (institute, year), then advisor set.
inline Resolution resolve_authors(const std::vector<RawAuthorEntry>& entries,
                                  const ResolveOptions& opt = {},
                                  const std::string& file = "authors") {
  Resolution res;
  res.by_entry.resize(entries.size());
  std::map<std::pair<std::string, std::string>, AuthorId> entity_of;

  for (std::size_t i = 0; i < entries.size(); ++i) {
    const auto& e = entries[i];
    auto norm = normalize_name(e.name);
    if (norm.empty()) throw MissingFieldError(file, e.line, "author name is blank");
    auto key = std::make_pair(norm, detail::disambiguator(e));
    auto [it, fresh] =
        entity_of.emplace(key, AuthorId(static_cast<std::uint32_t>(res.authors.size())));
    if (fresh) {
      ResolvedAuthor a;
      a.id = it->second;
      a.name = clean_display(e.name);
      a.normalized_name = norm;
      res.by_name[norm].push_back(a.id);
      res.authors.push_back(std::move(a));
    }
    auto& a = res.authors[it->second.index()];
    a.entries.push_back(i);
    detail::merge_field(a.thesis, e.thesis);
    detail::merge_field(a.institute, e.institute);
    detail::merge_field(a.country, e.country);
    detail::merge_field(a.domain, e.domain);
    if (!a.year) a.year = e.year;
    if (!e.external_key.empty()) {
      if (a.external_key.empty()) {
        a.external_key = e.external_key;
        if (!res.by_key.emplace(e.external_key, a.id).second) {
          throw AmbiguousAuthorError(file + ":" + std::to_string(e.line) + ": external key '" +
                                     e.external_key + "' used by two different authors");
        }
      }
    }
  }

  for (auto& a : res.authors) {
    std::set<AuthorId> advisors;
    for (std::size_t idx : a.entries) {
      const auto& e = entries[idx];
      const auto where = file + ":" + std::to_string(e.line);
      for (const auto& ref : e.advisor_names) advisors.insert(res.lookup(ref, where));
    }
    if (advisors.size() > opt.max_advisors) {
      const auto where = file + ":" + std::to_string(entries[a.entries.back()].line);
      if (a.entries.size() > 1) {
        throw AmbiguousAuthorError(where + ": entries for '" + a.name +
                                   "' share every disambiguator but together name " +
                                   std::to_string(advisors.size()) + " advisors (maximum " +
                                   std::to_string(opt.max_advisors) + ")");
      }
      throw ValidationError(where + ": '" + a.name + "' names " +
                            std::to_string(advisors.size()) + " advisors (maximum " +
                            std::to_string(opt.max_advisors) + ")");
    }
    a.advisors.assign(advisors.begin(), advisors.end());
    const bool multiple = res.by_name.at(a.normalized_name).size() >= 2;
    a.resolution = resolution_case(multiple, a.advisors.size() >= 2);
    for (std::size_t idx : a.entries) res.by_entry[idx] = {a.id, a.resolution};
  }
  return res;
}

// ---------------------------------------------------------------------------
// Snapshot construction

struct BuildOptions {
  std::uint32_t max_advisors = 2;
  /// Orientation of rows in the author_pairs file.
  MatrixConvention pair_convention = MatrixConvention::cited_row;
};

struct IngestSummary {
  std::size_t authors = 0;
  std::size_t articles = 0;
  std::size_t parent_of = 0;
  std::size_t cited_by = 0;
  std::size_t authored_by = 0;
  std::size_t author_pairs = 0;
  std::map<ResolutionCase, std::size_t> cases;
};

/// Turns a resolved corpus into a store. All-or-nothing.
inline GenealogyGraph build_graph(const Resolution& res, const RawCorpus& corpus,
                                  const BuildOptions& opt = {}) {
  GenealogyGraph g(StoreConfig{opt.max_advisors});
  std::vector<AuthorRecord> records;
  records.reserve(res.authors.size());
  for (const auto& a : res.authors) {
    AuthorRecord r;
    r.name = a.name;
    for (AuthorId adv : a.advisors) r.advisors[adv] = 0;
    r.thesis = a.thesis;
    r.institute = a.institute;
    r.country = a.country;
    r.domain = a.domain;
    r.year = a.year;
    r.external_key = a.external_key;
    r.resolution = a.resolution;
    records.push_back(std::move(r));
  }
  g.add_authors(std::move(records));

  std::unordered_map<std::string, ArticleId> articles;
  for (const auto& a : corpus.articles) {
    const auto where = corpus.articles_file + ":" + std::to_string(a.line);
    std::vector<AuthorId> ids;
    for (const auto& ref : a.author_refs) {
      const AuthorId id = res.lookup(ref, where);
      if (std::find(ids.begin(), ids.end(), id) != ids.end()) {
        throw ValidationError(where + ": author '" + ref + "' listed twice");
      }
      ids.push_back(id);
    }
    if (articles.contains(a.key)) {
      throw DuplicateIdError(where + ": duplicate article key '" + a.key + "'");
    }
    articles.emplace(a.key, g.add_article(a.key, a.title, std::move(ids)));
  }

  for (const auto& c : corpus.citations) {
    const auto where = corpus.citations_file + ":" + std::to_string(c.line);
    auto find = [&](const std::string& key) {
      auto it = articles.find(key);
      if (it == articles.end()) {
        throw DanglingReferenceError(where + ": unknown article '" + key + "'");
      }
      return it->second;
    };
    const ArticleId citing = find(c.citing);
    const ArticleId cited = find(c.cited);
    if (citing == cited) throw ValidationError(where + ": article cites itself");
    g.add_citation(citing, cited);
  }

  for (const auto& p : corpus.pairs) {
    const auto where = corpus.pairs_file + ":" + std::to_string(p.line);
    AuthorId row = res.lookup(p.row, where);
    AuthorId col = res.lookup(p.col, where);
    if (opt.pair_convention == MatrixConvention::citing_row) std::swap(row, col);
    g.add_author_citation(row, col, p.count);
  }
  return g;
}

inline std::shared_ptr<const Snapshot> build_snapshot(const Resolution& res,
                                                      const RawCorpus& corpus,
                                                      const BuildOptions& opt = {}) {
  return Snapshot::build(build_graph(res, corpus, opt));
}

/// Parse, resolve and build in one step.
inline std::shared_ptr<const Snapshot> ingest(const RawCorpus& corpus,
                                              const BuildOptions& opt = {}) {
  const auto res =
      resolve_authors(corpus.authors, ResolveOptions{opt.max_advisors}, corpus.authors_file);
  return build_snapshot(res, corpus, opt);
}

inline IngestSummary summarize(const GenealogyGraph& g) {
  IngestSummary s;
  s.authors = g.author_count();
  s.articles = g.article_count();
  s.parent_of = g.parent_of_count();
  s.cited_by = g.cited_by().size();
  for (const auto& a : g.articles()) s.authored_by += a.author_ids.size();
  s.author_pairs = g.author_citations().size();
  for (const auto& a : g.authors()) ++s.cases[a.resolution];
  return s;
}

// ---------------------------------------------------------------------------
// Export back to the input formats

/// Writes authors.txt, articles.txt, citations.txt and author_pairs.txt
/// under `dir`. Authors without an external key get a generated one so
/// that every reference in the output is unambiguous.
inline void export_corpus(const GenealogyGraph& g, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  std::set<std::string> used;
  for (const auto& a : g.authors()) {
    if (!a.external_key.empty()) used.insert(a.external_key);
  }
  std::vector<std::string> keys(g.author_count());
  for (const auto& a : g.authors()) {
    auto& k = keys[a.id.index()];
    k = a.external_key;
    if (k.empty()) {
      k = "id" + std::to_string(a.id.value);
      while (used.contains(k)) k += "_";
      used.insert(k);
    }
  }
  auto ref = [&](AuthorId id) { return "@" + detail::escape(keys[id.index()]); };
  auto open = [&](const char* name) {
    std::ofstream out(dir / name, std::ios::trunc);
    if (!out) throw IoError("cannot write '" + (dir / name).string() + "'");
    return out;
  };

  auto authors = open("authors.txt");
  for (const auto& a : g.authors()) {
    authors << "name=" << detail::escape(a.name);
    if (!a.advisors.empty()) {
      authors << "\tadvisors=";
      bool first = true;
      for (const auto& [adv, _] : a.advisors) {
        authors << (first ? "" : "|") << ref(adv);
        first = false;
      }
    }
    authors << "\tthesis=" << detail::escape(a.thesis)
            << "\tinstitute=" << detail::escape(a.institute)
            << "\tcountry=" << detail::escape(a.country)
            << "\tdomain=" << detail::escape(a.domain);
    if (a.year) authors << "\tyear=" << *a.year;
    authors << "\tkey=" << detail::escape(keys[a.id.index()]) << '\n';
  }

  auto articles = open("articles.txt");
  for (const auto& a : g.articles()) {
    articles << "key=" << detail::escape(a.key.empty() ? "art" + std::to_string(a.id.value) : a.key)
             << "\ttitle=" << detail::escape(a.title) << "\tauthors=";
    for (std::size_t i = 0; i < a.author_ids.size(); ++i) {
      articles << (i ? "|" : "") << ref(a.author_ids[i]);
    }
    articles << '\n';
  }

  auto article_key = [&](ArticleId id) {
    const auto& a = g.article(id);
    return a.key.empty() ? "art" + std::to_string(a.id.value) : a.key;
  };
  auto citations = open("citations.txt");
  for (const auto& e : g.cited_by()) {
    citations << article_key(e.citing) << '\t' << article_key(e.cited) << '\n';
  }

  auto pairs = open("author_pairs.txt");
  for (const auto& c : g.author_citations()) {
    pairs << "@" << keys[c.cited.index()] << "\t@" << keys[c.citing.index()] << '\t' << c.count
          << '\n';
  }
}

}  // namespace genealogy
