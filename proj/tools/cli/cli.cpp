#include "yangian_cli/cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <string>

#include "CLI11.hpp"
#include "yangian/report.hpp"

namespace yangian::cli {

namespace {

constexpr int kMaxTableLevel = 12;

struct VerifyConfig {
  int m = 1;
  int order = 4;
  std::string suite = "all";
  int jobs = 0;
  std::string cache;
  std::string out;
  std::string format = "json";
  std::uint64_t seed = 1;
  bool stable = false;
};

struct TableConfig {
  int m = 1;
  int maxSuper = 2;
  std::string cache;
};

struct PbwConfig {
  int m = 1;
  int dmax = 2;
  bool dropCentral = false;
};

std::string defaultCache() {
  const char* dir = std::getenv("YANGIAN_CACHE_DIR");
  if (!dir || !*dir) return {};
  return (std::filesystem::path(dir) / "relations.cache").string();
}

int verify(const VerifyConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.suite != "all" && !findSuite(cfg.suite)) {
    err << "unknown suite '" << cfg.suite << "'; valid ids: " << suiteIdList() << "\n";
    return kUsage;
  }
  if (const SuiteInfo* info = findSuite(cfg.suite); info && (cfg.m < info->minM || cfg.m > info->maxM)) {
    err << "suite " << cfg.suite << " runs for m in " << info->minM << ".." << info->maxM << "\n";
    return kUsage;
  }
  RunOptions options;
  options.jobs = cfg.jobs;
  options.cachePath = cfg.cache.empty() ? defaultCache() : cfg.cache;
  options.seed = cfg.seed;
  Report report;
  try {
    report = runSuite(cfg.suite, cfg.m, cfg.order, options);
  } catch (const std::invalid_argument& e) {
    err << e.what() << "\n";
    return kUsage;
  } catch (const std::runtime_error& e) {
    err << e.what() << "\n";
    return kUsage;
  }
  const ReportStyle style{cfg.format == "text" ? ReportFormat::Text : ReportFormat::Json, cfg.stable};
  const std::string text = formatReport(report, style);
  if (cfg.out.empty()) {
    out << text;
  } else {
    std::ofstream file(cfg.out, std::ios::binary);
    file << text;
    if (!file) {
      err << "cannot write report to '" << cfg.out << "'\n";
      return kUsage;
    }
  }
  return report.allPass() ? kPass : kFail;
}

int table(const TableConfig& cfg, std::ostream& out, std::ostream& err) {
  const std::string path = cfg.cache.empty() ? defaultCache() : cfg.cache;
  if (path.empty()) {
    err << "table: no cache path (use --cache or YANGIAN_CACHE_DIR)\n";
    return kUsage;
  }
  try {
    Algebra alg(cfg.m);
    alg.loadCache(path);
    alg.prepare(cfg.maxSuper);
    alg.saveCache(path);
    std::size_t count = 0;
    alg.forEachEntry([&](const TableKey& key, const Poly&) { count += key.r + key.s <= cfg.maxSuper; });
    out << "m=" << cfg.m << " max-super=" << cfg.maxSuper << " entries=" << count << " path=" << path << "\n";
  } catch (const std::exception& e) {
    err << "table: " << e.what() << "\n";
    return kUsage;
  }
  return kPass;
}

int pbw(const PbwConfig& cfg, std::ostream& out, std::ostream& err) {
  const int bound = cfg.m == 1 ? 4 : 3;
  if (cfg.dmax > bound) {
    err << "pbw: --dmax for m=" << cfg.m << " is at most " << bound << "\n";
    return kUsage;
  }
  PbwOptions options;
  options.dropCentral = cfg.dropCentral;
  bool all = true;
  out << "(degree, normal words, series)\n";
  for (const auto& row : pbwTable(cfg.m, cfg.dmax, options)) {
    out << "(" << row.degree << ", " << row.count << ", " << row.series << ")" << (row.match ? "" : "  mismatch")
        << "\n";
    all = all && row.match;
  }
  return all ? kPass : kFail;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact verification engine for the extended Yangian X(osp(1|2m))", "yangian"};
  app.require_subcommand(1);

  VerifyConfig vcfg;
  auto* verifyCmd = app.add_subcommand("verify", "Run relation suites and write a report");
  verifyCmd->add_option("--m", vcfg.m, "Rank m")->check(CLI::Range(1, kMaxRank));
  verifyCmd->add_option("--order", vcfg.order, "Truncation order D")->check(CLI::Range(kMinOrder, kMaxOrder));
  verifyCmd->add_option("--suite", vcfg.suite, "Suite id or all");
  verifyCmd->add_option("--jobs", vcfg.jobs, "Worker threads, 0 for all cores")->check(CLI::NonNegativeNumber);
  verifyCmd->add_option("--cache", vcfg.cache, "Relation table cache file");
  verifyCmd->add_option("--out", vcfg.out, "Report file, stdout by default");
  verifyCmd->add_option("--format", vcfg.format, "json or text")->check(CLI::IsMember({"json", "text"}));
  verifyCmd->add_option("--seed", vcfg.seed, "Seed of the randomized checks");
  verifyCmd->add_flag("--stable-output", vcfg.stable, "Omit timing fields");

  TableConfig tcfg;
  auto* tableCmd = app.add_subcommand("table", "Generate and persist the relation table");
  tableCmd->add_option("--m", tcfg.m, "Rank m")->check(CLI::Range(1, kMaxRank));
  tableCmd->add_option("--max-super", tcfg.maxSuper, "Largest r + s")->check(CLI::Range(2, kMaxTableLevel));
  tableCmd->add_option("--cache", tcfg.cache, "Cache file");

  PbwConfig pcfg;
  auto* pbwCmd = app.add_subcommand("pbw", "Compare normal-word counts with the generating function");
  pbwCmd->add_option("--m", pcfg.m, "Rank m")->check(CLI::Range(1, 2));
  pbwCmd->add_option("--dmax", pcfg.dmax, "Largest degree")->check(CLI::NonNegativeNumber);
  pbwCmd->add_flag("--drop-central", pcfg.dropCentral, "Test fixture: leave out the central letters")
      ->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kPass : kUsage;
  }
  if (*verifyCmd) return verify(vcfg, out, err);
  if (*tableCmd) return table(tcfg, out, err);
  return pbw(pcfg, out, err);
}

}  // namespace yangian::cli
