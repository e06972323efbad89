// genealogy: batch driver for corpus ingestion, community reports, thresholds,
// synthetic corpora and the query server.
//
// Exit codes: 0 success, 1 runtime failure, 2 usage or input error.

#include <chrono>
#include <csignal>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <httplib.h>

#include "genealogy/genealogy.hpp"
#include "genealogy/service.hpp"

namespace fs = std::filesystem;
using namespace genealogy;

namespace {

constexpr int kOk = 0;
constexpr int kRuntime = 1;
constexpr int kUsage = 2;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void require_file(const std::string& path) {
  if (!fs::is_regular_file(path)) throw InputError("input file not found: " + path);
}

struct IngestArgs {
  std::string authors, articles, citations, pairs, out;
  std::string convention = "cited-row";
  std::uint32_t max_advisors = 2;
};

int run_ingest(const IngestArgs& a) {
  require_file(a.authors);
  CorpusPaths paths{a.authors, {}, {}, {}};
  if (!a.articles.empty()) {
    require_file(a.articles);
    paths.articles = a.articles;
  }
  if (!a.citations.empty()) {
    require_file(a.citations);
    paths.citations = a.citations;
  }
  if (!a.pairs.empty()) {
    require_file(a.pairs);
    paths.author_pairs = a.pairs;
  }
  BuildOptions opt;
  opt.max_advisors = a.max_advisors;
  opt.pair_convention =
      a.convention == "citing-row" ? MatrixConvention::citing_row : MatrixConvention::cited_row;

  const auto corpus = parse_corpus(paths);
  const auto snap = ingest(corpus, opt);
  snapshot_save(*snap, a.out);

  const auto s = summarize(snap->graph());
  std::cout << "authors=" << s.authors << " articles=" << s.articles
            << " parent_of=" << s.parent_of << " cited_by=" << s.cited_by
            << " authored_by=" << s.authored_by << " author_pairs=" << s.author_pairs << '\n';
  for (const auto c : {ResolutionCase::UniqueName, ResolutionCase::MultipleName,
                       ResolutionCase::TwoAdvisor, ResolutionCase::MultipleNameTwoAdvisor}) {
    const auto it = s.cases.find(c);
    std::cout << to_string(c) << '=' << (it == s.cases.end() ? 0 : it->second) << '\n';
  }
  std::cout << "snapshot written to " << a.out << '\n';
  return kOk;
}

struct ReportArgs {
  std::string snapshot, out;
  std::optional<double> lower, upper;
  bool no_siblings = false;
  bool include_self = false;
  std::string format = "tsv";
};

CommunityOptions community_options(bool no_siblings, bool include_self) {
  CommunityOptions opt;
  opt.members.siblings = !no_siblings;
  opt.include_self_in_total = include_self;
  return opt;
}

Threshold resolve_threshold(const Snapshot& snap, const CommunityOptions& opt,
                            std::optional<double> lower, std::optional<double> upper) {
  const Threshold computed =
      (lower && upper) ? Threshold{}
                       : compute_threshold(std::span<const std::optional<double>>(
                             corpus_ratios(snap, opt)));
  return Threshold::make(lower.value_or(computed.lower), upper.value_or(computed.upper));
}

int run_report(const ReportArgs& a) {
  require_file(a.snapshot);
  const auto start = std::chrono::steady_clock::now();
  const auto snap = snapshot_load(a.snapshot);
  const auto opt = community_options(a.no_siblings, a.include_self);
  const auto t = resolve_threshold(*snap, opt, a.lower, a.upper);
  const auto reports = detect_communities(*snap, snap->matrix(), t, opt);

  std::ofstream file;
  if (a.out != "-") {
    file.open(a.out, std::ios::trunc);
    if (!file) throw IoError("cannot write '" + a.out + "'");
  }
  std::ostream& out = a.out == "-" ? std::cout : file;
  if (a.format == "json") {
    write_report_json(out, *snap, reports, t);
  } else {
    write_report_tsv(out, *snap, reports);
  }
  const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                           std::chrono::steady_clock::now() - start)
                           .count();
  std::size_t flagged = 0;
  for (const auto& r : reports) flagged += r.verdict == Verdict::LineageDependent;
  auto& log = a.out == "-" ? std::cerr : std::cout;
  log << "threshold lower=" << format_double(t.lower) << " upper=" << format_double(t.upper)
      << '\n';
  log << "lineage_dependent=" << flagged << '\n';
  log << "N=" << snap->author_count() << " elapsed_ms=" << elapsed << '\n';
  return kOk;
}

int run_threshold(const std::string& snapshot, bool no_siblings, bool include_self) {
  require_file(snapshot);
  const auto snap = snapshot_load(snapshot);
  const auto opt = community_options(no_siblings, include_self);
  const auto ratios = corpus_ratios(*snap, opt);
  const auto t = compute_threshold(std::span<const std::optional<double>>(ratios));
  std::size_t defined = 0;
  for (const auto& r : ratios) defined += r.has_value();
  std::cout << "defined_ratios=" << defined << " lower=" << format_double(t.lower)
            << " upper=" << format_double(t.upper) << '\n';
  return kOk;
}

int run_export(const std::string& snapshot, const std::string& out) {
  require_file(snapshot);
  const auto g = snapshot_load_graph(snapshot);
  export_corpus(g, out);
  std::cout << "corpus written to " << out << '\n';
  return kOk;
}

int run_gen(const SyntheticParams& p, const std::string& out) {
  const auto s = generate_synthetic(p);
  write_synthetic(s, out);
  std::size_t members = 0;
  for (const auto& c : s.cartels) members += c.size();
  std::cout << "authors=" << s.corpus.authors.size() << " articles=" << s.corpus.articles.size()
            << " citations=" << s.corpus.citations.size() << " cartels=" << s.cartels.size()
            << " cartel_members=" << members << '\n';
  return kOk;
}

httplib::Server* g_server = nullptr;

extern "C" void on_signal(int) {
  if (g_server) g_server->stop();
}

struct ServeArgs {
  std::string snapshot;
  std::string listen = "127.0.0.1:8080";
  std::optional<double> lower, upper;
  std::vector<std::string> cors;
  bool no_siblings = false;
  bool include_self = false;
};

int run_serve(const ServeArgs& a) {
  require_file(a.snapshot);
  const auto colon = a.listen.rfind(':');
  if (colon == std::string::npos) throw InputError("--listen must be host:port");
  const std::string host = a.listen.substr(0, colon);
  int port = 0;
  try {
    port = std::stoi(a.listen.substr(colon + 1));
  } catch (const std::exception&) {
    throw InputError("--listen port is not a number");
  }

  ServiceConfig cfg;
  cfg.snapshot_path = a.snapshot;
  cfg.cors_allowlist = a.cors;
  cfg.options = community_options(a.no_siblings, a.include_self);
  const auto snap = snapshot_load(a.snapshot);
  if (a.lower || a.upper) cfg.threshold_override = resolve_threshold(*snap, cfg.options, a.lower, a.upper);
  ApiService api(cfg);
  api.load(snap);

  httplib::Server svr;
  install_routes(svr, api);
  if (!svr.bind_to_port(host, port)) {
    std::cerr << "error: cannot listen on " << a.listen << '\n';
    return kRuntime;
  }
  g_server = &svr;
  std::signal(SIGINT, on_signal);
  std::signal(SIGTERM, on_signal);
  std::cout << "serving " << snap->author_count() << " authors on " << a.listen << std::endl;
  svr.listen_after_bind();
  g_server = nullptr;
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Academic genealogy citation analytics"};
  app.require_subcommand(1);

  IngestArgs ingest_args;
  auto* ingest_cmd = app.add_subcommand("ingest", "Build a snapshot from corpus files");
  ingest_cmd->add_option("--authors", ingest_args.authors, "authors file")->required();
  ingest_cmd->add_option("--articles", ingest_args.articles, "articles file");
  ingest_cmd->add_option("--citations", ingest_args.citations, "citations file");
  ingest_cmd->add_option("--author-pairs", ingest_args.pairs, "author pair count file");
  ingest_cmd->add_option("--pair-convention", ingest_args.convention,
                         "row meaning in the author pair file")
      ->check(CLI::IsMember({"cited-row", "citing-row"}));
  ingest_cmd->add_option("--max-advisors", ingest_args.max_advisors)->check(CLI::Range(1u, 64u));
  ingest_cmd->add_option("--out", ingest_args.out, "snapshot path")->required();

  ReportArgs report_args;
  auto* report_cmd = app.add_subcommand("report", "Write per-author community reports");
  report_cmd->add_option("--snapshot", report_args.snapshot)->required();
  report_cmd->add_option("--threshold-lower", report_args.lower)->check(CLI::Range(0.0, 1.0));
  report_cmd->add_option("--threshold-upper", report_args.upper)->check(CLI::Range(0.0, 1.0));
  report_cmd->add_flag("--no-siblings", report_args.no_siblings,
                       "exclude siblings from genealogical citations");
  report_cmd->add_flag("--include-self", report_args.include_self,
                       "count self-citations in the total");
  report_cmd->add_option("--format", report_args.format)->check(CLI::IsMember({"tsv", "json"}));
  report_cmd->add_option("--out", report_args.out, "output path, '-' for stdout")->required();

  std::string threshold_snapshot;
  bool threshold_no_siblings = false, threshold_include_self = false;
  auto* threshold_cmd = app.add_subcommand("threshold", "Compute the corpus threshold band");
  threshold_cmd->add_option("--snapshot", threshold_snapshot)->required();
  threshold_cmd->add_flag("--no-siblings", threshold_no_siblings);
  threshold_cmd->add_flag("--include-self", threshold_include_self);

  std::string export_snapshot, export_out;
  auto* export_cmd = app.add_subcommand("export", "Write a snapshot back out as corpus files");
  export_cmd->add_option("--snapshot", export_snapshot)->required();
  export_cmd->add_option("--out", export_out, "output directory")->required();

  SyntheticParams gen;
  std::string gen_out;
  auto* gen_cmd = app.add_subcommand("gen-synthetic", "Generate a corpus with planted cartels");
  gen_cmd->add_option("--authors", gen.authors)->required()->check(CLI::PositiveNumber);
  gen_cmd->add_option("--cartels", gen.cartels)->check(CLI::NonNegativeNumber);
  gen_cmd->add_option("--seed", gen.seed);
  gen_cmd->add_option("--cartel-citations", gen.cartel_citations,
                      "extra in-cartel citations per member article");
  gen_cmd->add_option("--out", gen_out, "output directory")->required();

  ServeArgs serve_args;
  auto* serve_cmd = app.add_subcommand("serve", "Run the HTTP query service");
  serve_cmd->add_option("--snapshot", serve_args.snapshot)->required();
  serve_cmd->add_option("--listen", serve_args.listen, "host:port");
  serve_cmd->add_option("--threshold-lower", serve_args.lower)->check(CLI::Range(0.0, 1.0));
  serve_cmd->add_option("--threshold-upper", serve_args.upper)->check(CLI::Range(0.0, 1.0));
  serve_cmd->add_option("--cors", serve_args.cors, "allowed browser origins");
  serve_cmd->add_flag("--no-siblings", serve_args.no_siblings);
  serve_cmd->add_flag("--include-self", serve_args.include_self);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (*ingest_cmd) return run_ingest(ingest_args);
    if (*report_cmd) return run_report(report_args);
    if (*threshold_cmd) {
      return run_threshold(threshold_snapshot, threshold_no_siblings, threshold_include_self);
    }
    if (*export_cmd) return run_export(export_snapshot, export_out);
    if (*gen_cmd) return run_gen(gen, gen_out);
    if (*serve_cmd) return run_serve(serve_args);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    // Ingestion reference errors are input problems too.
    const bool input = dynamic_cast<const DanglingReferenceError*>(&e) ||
                       dynamic_cast<const AmbiguousAuthorError*>(&e) ||
                       dynamic_cast<const CycleError*>(&e) ||
                       dynamic_cast<const DuplicateIdError*>(&e);
    std::cerr << "error: " << e.what() << '\n';
    return input ? kUsage : kRuntime;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kRuntime;
  }
  return kUsage;
}
