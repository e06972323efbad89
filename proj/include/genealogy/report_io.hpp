#pragma once

// Per-author report export.
//
// TSV layout (one header line, then one line per author ordered by id):
//
//   id  name  total  genealogical  ngc  ratio  verdict  lineage_score  copious_partners
//
// `ratio` is "NA" when the author has no citations. Floating-point fields
// use the shortest decimal form that round-trips to the same double.
// `name` has tabs and newlines replaced by spaces.

#include <array>
#include <charconv>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "genealogy/metrics.hpp"
#include "genealogy/snapshot.hpp"

namespace genealogy {

inline std::string format_double(double v) {
  std::array<char, 32> buf{};
  const auto [p, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), p);
}

inline constexpr std::string_view kReportHeader =
    "id\tname\ttotal\tgenealogical\tngc\tratio\tverdict\tlineage_score\tcopious_partners";

inline void write_report_tsv(std::ostream& out, const Snapshot& s,
                             const std::vector<CommunityReport>& reports) {
  out << kReportHeader << '\n';
  for (const auto& r : reports) {
    std::string name = s.author(r.author).name;
    for (char& c : name) {
      if (c == '\t' || c == '\n' || c == '\r') c = ' ';
    }
    out << r.author.value << '\t' << name << '\t' << r.total << '\t' << r.genealogical << '\t'
        << r.ngc << '\t' << (r.ratio ? format_double(*r.ratio) : "NA") << '\t'
        << to_string(r.verdict) << '\t' << format_double(lineage_score(r)) << '\t'
        << r.copious_partners.size() << '\n';
  }
}

/// One parsed TSV report line.
struct ReportRow {
  std::uint32_t id = 0;
  std::string name;
  CitationCount total = 0;
  CitationCount genealogical = 0;
  CitationCount ngc = 0;
  std::optional<double> ratio;
  std::string verdict;
  double lineage_score = 0;
  std::size_t copious_partners = 0;
};

inline std::vector<ReportRow> read_report_tsv(std::istream& in) {
  std::vector<ReportRow> rows;
  std::string line;
  if (!std::getline(in, line) || line != kReportHeader) {
    throw FormatError("report header missing or unexpected");
  }
  std::size_t n = 1;
  while (std::getline(in, line)) {
    ++n;
    std::vector<std::string> cols;
    std::size_t start = 0;
    while (true) {
      const auto end = line.find('\t', start);
      cols.push_back(line.substr(start, end - start));
      if (end == std::string::npos) break;
      start = end + 1;
    }
    if (cols.size() != 9) {
      throw FormatError("report line " + std::to_string(n) + ": expected 9 columns");
    }
    ReportRow r;
    try {
      r.id = static_cast<std::uint32_t>(std::stoul(cols[0]));
      r.name = cols[1];
      r.total = std::stoull(cols[2]);
      r.genealogical = std::stoull(cols[3]);
      r.ngc = std::stoull(cols[4]);
      if (cols[5] != "NA") r.ratio = std::stod(cols[5]);
      r.verdict = cols[6];
      r.lineage_score = std::stod(cols[7]);
      r.copious_partners = std::stoull(cols[8]);
    } catch (const std::logic_error&) {
      throw FormatError("report line " + std::to_string(n) + ": bad number");
    }
    rows.push_back(std::move(r));
  }
  return rows;
}

// JSON forms share key names across the CLI and the HTTP service.
// nlohmann::json objects keep keys sorted, which fixes the canonical order.

inline nlohmann::json to_json(const Threshold& t) {
  return {{"lower", t.lower}, {"upper", t.upper}};
}

inline nlohmann::json to_json(const CommunityReport& r, const Snapshot& s) {
  nlohmann::json partners = nlohmann::json::array();
  for (AuthorId p : r.copious_partners) partners.push_back(p.value);
  nlohmann::json siblings = nlohmann::json::array();
  for (const auto& sc : r.sibling_citers) {
    siblings.push_back({{"id", sc.sibling.value}, {"count", sc.count}});
  }
  return {
      {"id", r.author.value},
      {"name", s.author(r.author).name},
      {"total", r.total},
      {"genealogical", r.genealogical},
      {"ngc", r.ngc},
      {"ratio", r.ratio ? nlohmann::json(*r.ratio) : nlohmann::json(nullptr)},
      {"verdict", std::string(to_string(r.verdict))},
      {"lineage_score", lineage_score(r)},
      {"copious_partners", std::move(partners)},
      {"sibling_citers", std::move(siblings)},
  };
}

inline void write_report_json(std::ostream& out, const Snapshot& s,
                              const std::vector<CommunityReport>& reports, Threshold t) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : reports) arr.push_back(to_json(r, s));
  out << nlohmann::json{{"threshold", to_json(t)}, {"reports", std::move(arr)}}.dump(2) << '\n';
}

}  // namespace genealogy
