#pragma once

// Snapshot file layout (all integers little-endian):
//
//   magic      8 bytes  "GENEALOG"
//   version    u32      kSnapshotVersion
//   sections   u32      section count
//   section*   { tag u32, length u64, payload[length] }
//   checksum   u64      FNV-1a 64 of every preceding byte
//
// Sections, in this order: CONF, AUTH, ARTC, CITE, ACIT. See
// docs/snapshot-format.md for the payload of each.

#include <array>
#include <cstdint>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "genealogy/errors.hpp"
#include "genealogy/snapshot.hpp"
#include "genealogy/store.hpp"

namespace genealogy {

inline constexpr std::uint32_t kSnapshotVersion = 1;
inline constexpr std::string_view kSnapshotMagic = "GENEALOG";

namespace detail {

constexpr std::uint32_t fourcc(const char (&s)[5]) {
  return static_cast<std::uint32_t>(static_cast<unsigned char>(s[0])) |
         static_cast<std::uint32_t>(static_cast<unsigned char>(s[1])) << 8 |
         static_cast<std::uint32_t>(static_cast<unsigned char>(s[2])) << 16 |
         static_cast<std::uint32_t>(static_cast<unsigned char>(s[3])) << 24;
}

inline constexpr std::uint32_t kConf = fourcc("CONF");
inline constexpr std::uint32_t kAuth = fourcc("AUTH");
inline constexpr std::uint32_t kArtc = fourcc("ARTC");
inline constexpr std::uint32_t kCite = fourcc("CITE");
inline constexpr std::uint32_t kAcit = fourcc("ACIT");

inline std::uint64_t fnv1a(const std::vector<std::uint8_t>& bytes, std::size_t n) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (std::size_t i = 0; i < n; ++i) {
    h ^= bytes[i];
    h *= 0x100000001b3ULL;
  }
  return h;
}

class Writer {
 public:
  void u8(std::uint8_t v) { buf_.push_back(v); }
  void u32(std::uint32_t v) {
    for (int i = 0; i < 4; ++i) buf_.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
  }
  void u64(std::uint64_t v) {
    for (int i = 0; i < 8; ++i) buf_.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
  }
  void i32(std::int32_t v) { u32(static_cast<std::uint32_t>(v)); }
  void str(std::string_view s) {
    u32(static_cast<std::uint32_t>(s.size()));
    buf_.insert(buf_.end(), s.begin(), s.end());
  }
  void raw(std::string_view s) { buf_.insert(buf_.end(), s.begin(), s.end()); }
  void append(const Writer& w) { buf_.insert(buf_.end(), w.buf_.begin(), w.buf_.end()); }

  std::size_t size() const noexcept { return buf_.size(); }
  std::vector<std::uint8_t>& bytes() noexcept { return buf_; }

 private:
  std::vector<std::uint8_t> buf_;
};

class Reader {
 public:
  Reader(const std::uint8_t* data, std::size_t size) : p_(data), end_(data + size) {}

  std::uint8_t u8() { need(1); return *p_++; }
  std::uint32_t u32() {
    need(4);
    std::uint32_t v = 0;
    for (int i = 0; i < 4; ++i) v |= static_cast<std::uint32_t>(*p_++) << (8 * i);
    return v;
  }
  std::uint64_t u64() {
    need(8);
    std::uint64_t v = 0;
    for (int i = 0; i < 8; ++i) v |= static_cast<std::uint64_t>(*p_++) << (8 * i);
    return v;
  }
  std::int32_t i32() { return static_cast<std::int32_t>(u32()); }
  std::string str() {
    const auto n = u32();
    need(n);
    std::string s(reinterpret_cast<const char*>(p_), n);
    p_ += n;
    return s;
  }
  Reader sub(std::uint64_t n) {
    need(n);
    Reader r(p_, static_cast<std::size_t>(n));
    p_ += n;
    return r;
  }
  bool done() const noexcept { return p_ == end_; }
  std::size_t remaining() const noexcept { return static_cast<std::size_t>(end_ - p_); }

 private:
  void need(std::uint64_t n) const {
    if (n > static_cast<std::uint64_t>(end_ - p_)) throw FormatError("snapshot truncated");
  }
  const std::uint8_t* p_;
  const std::uint8_t* end_;
};

inline void write_neighbours(Writer& w, const std::map<AuthorId, CitationCount>& m) {
  w.u32(static_cast<std::uint32_t>(m.size()));
  for (const auto& [id, count] : m) {
    w.u32(id.value);
    w.u64(count);
  }
}

inline std::map<AuthorId, CitationCount> read_neighbours(Reader& r) {
  std::map<AuthorId, CitationCount> m;
  const auto n = r.u32();
  for (std::uint32_t i = 0; i < n; ++i) {
    const AuthorId id(r.u32());
    m[id] = r.u64();
  }
  return m;
}

}  // namespace detail

/// Serialises a store to the snapshot byte layout. Output depends only on
/// the store contents.
inline std::vector<std::uint8_t> encode_snapshot(const GenealogyGraph& g) {
  using detail::Writer;
  std::vector<std::pair<std::uint32_t, Writer>> sections;

  Writer conf;
  conf.u32(g.config().max_advisors);
  sections.emplace_back(detail::kConf, std::move(conf));

  Writer auth;
  auth.u32(static_cast<std::uint32_t>(g.author_count()));
  for (const auto& a : g.authors()) {
    auth.str(a.name);
    auth.str(a.external_key);
    auth.str(a.thesis);
    auth.str(a.institute);
    auth.str(a.country);
    auth.str(a.domain);
    auth.u8(a.year ? 1 : 0);
    auth.i32(a.year.value_or(0));
    auth.u64(a.total_citations);
    auth.u8(static_cast<std::uint8_t>(a.resolution));
    detail::write_neighbours(auth, a.advisors);
    detail::write_neighbours(auth, a.advisees);
  }
  sections.emplace_back(detail::kAuth, std::move(auth));

  Writer artc;
  artc.u32(static_cast<std::uint32_t>(g.article_count()));
  for (const auto& a : g.articles()) {
    artc.str(a.key);
    artc.str(a.title);
    artc.u32(static_cast<std::uint32_t>(a.author_ids.size()));
    for (AuthorId id : a.author_ids) artc.u32(id.value);
  }
  sections.emplace_back(detail::kArtc, std::move(artc));

  Writer cite;
  cite.u64(g.cited_by().size());
  for (const auto& e : g.cited_by()) {
    cite.u32(e.cited.value);
    cite.u32(e.citing.value);
  }
  sections.emplace_back(detail::kCite, std::move(cite));

  Writer acit;
  acit.u64(g.author_citations().size());
  for (const auto& c : g.author_citations()) {
    acit.u32(c.cited.value);
    acit.u32(c.citing.value);
    acit.u64(c.count);
  }
  sections.emplace_back(detail::kAcit, std::move(acit));

  Writer out;
  out.raw(kSnapshotMagic);
  out.u32(kSnapshotVersion);
  out.u32(static_cast<std::uint32_t>(sections.size()));
  for (auto& [tag, body] : sections) {
    out.u32(tag);
    out.u64(body.size());
    out.append(body);
  }
  out.u64(detail::fnv1a(out.bytes(), out.size()));
  return std::move(out.bytes());
}

/// Rebuilds a store from snapshot bytes. Throws FormatError on a bad magic,
/// unknown version, checksum mismatch or inconsistent contents.
inline GenealogyGraph decode_snapshot(const std::vector<std::uint8_t>& bytes) {
  constexpr std::size_t header = 8 + 4 + 4;
  if (bytes.size() < header + 8) throw FormatError("snapshot too short");
  if (std::memcmp(bytes.data(), kSnapshotMagic.data(), kSnapshotMagic.size()) != 0) {
    throw FormatError("not a snapshot file (bad magic)");
  }
  detail::Reader top(bytes.data(), bytes.size());
  top.sub(kSnapshotMagic.size());
  const auto version = top.u32();
  if (version != kSnapshotVersion) {
    throw FormatError("unsupported snapshot version " + std::to_string(version) +
                      " (expected " + std::to_string(kSnapshotVersion) + ")");
  }
  {
    detail::Reader tail(bytes.data() + bytes.size() - 8, 8);
    if (tail.u64() != detail::fnv1a(bytes, bytes.size() - 8)) {
      throw FormatError("snapshot checksum mismatch");
    }
  }
  const auto count = top.u32();
  std::map<std::uint32_t, detail::Reader> sections;
  for (std::uint32_t i = 0; i < count; ++i) {
    const auto tag = top.u32();
    const auto len = top.u64();
    if (!sections.emplace(tag, top.sub(len)).second) {
      throw FormatError("duplicate snapshot section");
    }
  }
  if (top.remaining() != 8) throw FormatError("trailing bytes in snapshot");
  auto section = [&](std::uint32_t tag) -> detail::Reader& {
    auto it = sections.find(tag);
    if (it == sections.end()) throw FormatError("missing snapshot section");
    return it->second;
  };

  try {
    auto& conf = section(detail::kConf);
    GenealogyGraph g(StoreConfig{conf.u32()});

    auto& auth = section(detail::kAuth);
    const auto n_authors = auth.u32();
    std::vector<AuthorRecord> records(n_authors);
    std::vector<CitationCount> totals(n_authors);
    for (auto& a : records) {
      a.name = auth.str();
      a.external_key = auth.str();
      a.thesis = auth.str();
      a.institute = auth.str();
      a.country = auth.str();
      a.domain = auth.str();
      const bool has_year = auth.u8() != 0;
      const auto year = auth.i32();
      if (has_year) a.year = year;
      a.total_citations = auth.u64();
      const auto rc = auth.u8();
      if (rc > 3) throw FormatError("bad resolution case");
      a.resolution = static_cast<ResolutionCase>(rc);
      a.advisors = detail::read_neighbours(auth);
      a.advisees = detail::read_neighbours(auth);
    }
    const std::vector<AuthorRecord> expected = records;
    g.add_authors(records);
    for (std::size_t i = 0; i < n_authors; ++i) {
      auto rec = expected[i];
      rec.id = AuthorId(static_cast<std::uint32_t>(i));
      if (!(g.authors()[i] == rec)) {
        throw FormatError("PARENT_OF index incoherent for author " + std::to_string(i));
      }
    }

    auto& artc = section(detail::kArtc);
    const auto n_articles = artc.u32();
    for (std::uint32_t i = 0; i < n_articles; ++i) {
      auto key = artc.str();
      auto title = artc.str();
      std::vector<AuthorId> ids(artc.u32());
      for (auto& id : ids) id = AuthorId(artc.u32());
      g.add_article(std::move(key), std::move(title), std::move(ids));
    }

    auto& cite = section(detail::kCite);
    const auto n_cite = cite.u64();
    for (std::uint64_t i = 0; i < n_cite; ++i) {
      const ArticleId cited(cite.u32());
      const ArticleId citing(cite.u32());
      g.add_citation(citing, cited);
    }

    auto& acit = section(detail::kAcit);
    const auto n_acit = acit.u64();
    for (std::uint64_t i = 0; i < n_acit; ++i) {
      const AuthorId cited(acit.u32());
      const AuthorId citing(acit.u32());
      g.add_author_citation(cited, citing, acit.u64());
    }
    for (auto* s : {&conf, &auth, &artc, &cite, &acit}) {
      if (!s->done()) throw FormatError("snapshot section has trailing bytes");
    }
    return g;
  } catch (const FormatError&) {
    throw;
  } catch (const Error& e) {
    throw FormatError(std::string("inconsistent snapshot: ") + e.what());
  }
}

inline void snapshot_save(const GenealogyGraph& g, const std::filesystem::path& path) {
  const auto bytes = encode_snapshot(g);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
  if (!out) throw IoError("write to '" + path.string() + "' failed");
}

inline void snapshot_save(const Snapshot& s, const std::filesystem::path& path) {
  snapshot_save(s.graph(), path);
}

inline GenealogyGraph snapshot_load_graph(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path.string() + "' for reading");
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                  std::istreambuf_iterator<char>());
  if (in.bad()) throw IoError("read from '" + path.string() + "' failed");
  return decode_snapshot(bytes);
}

inline std::shared_ptr<const Snapshot> snapshot_load(const std::filesystem::path& path) {
  return Snapshot::build(snapshot_load_graph(path));
}

}  // namespace genealogy
