#include <algorithm>
#include <atomic>
#include <chrono>
#include <stdexcept>
#include <thread>

#include "suite_impl.hpp"

namespace yangian {

using detail::CheckDef;
using detail::CheckList;
using detail::Ctx;
using detail::Workspace;

std::size_t Report::passed() const {
  return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const auto& c) { return c.pass; }));
}

std::size_t Report::failed() const { return checks.size() - passed(); }

namespace {

using Builder = CheckList (*)(const Workspace&);

struct SuiteDef {
  SuiteInfo info;
  Builder build;
};

const std::vector<SuiteDef>& definitions() {
  static const std::vector<SuiteDef> defs = {
      {{"thm-odp", 1, 1, false, "defining relations of the Gaussian generators, m = 1"}, detail::thmOdpChecks},
      {{"cor-odpy", 1, 1, false, "relations of the Yangian generators k, e, f"}, detail::corOdpyChecks},
      {{"cor-serre", 1, 1, false, "Serre-type relations, m = 1"}, detail::corSerreChecks},
      {{"lem-sigauss", 1, 1, false, "sigma on k, e, f"}, detail::lemSigaussChecks},
      {{"prop-copr", 1, 1, false, "coproduct of e and f and of the table"}, detail::propCoprChecks},
      {{"ospl4", 2, 2, false, "rank-two identities"}, detail::ospl4Checks},
      {{"thm-dp", 2, 3, false, "defining relations of the Gaussian generators, m >= 2"}, detail::thmDpChecks},
      {{"cor-modpy", 2, 3, false, "relations of the Yangian generators, m >= 2"}, detail::corModpyChecks},
      {{"gauss-core", 1, 3, false, "Gauss decomposition, central series, tau"}, detail::gaussCoreChecks},
      {{"derived-ladders", 2, 3, false, "formulas for the remaining Gaussian generators"}, detail::derivedLadderChecks},
      {{"rtt-sanity", 1, 3, false, "antisymmetry, Jacobi, rewriting strategies, mu-invariance"}, detail::rttSanityChecks},
      {{"emb-osp", 1, 2, false, "embedding of osp(1|2m)"}, detail::embeddingChecks},
      {{"pbw", 1, 2, false, "normal-word counts and independence"}, detail::pbwChecks},
      {{"morphisms", 1, 3, false, "sigma, tau and mu on letters and the table"}, detail::morphismChecks},
      {{"negative-control", 1, 1, true, "mutated fixtures that must fail"}, nullptr},
  };
  return defs;
}

const SuiteDef* findDef(const std::string& id) {
  for (const auto& d : definitions())
    if (d.info.id == id) return &d;
  return nullptr;
}

void validate(int m, int order) {
  if (m < 1 || m > kMaxRank) throw std::invalid_argument("m must be in 1.." + std::to_string(kMaxRank));
  if (order < kMinOrder || order > kMaxOrder)
    throw std::invalid_argument("order must be in " + std::to_string(kMinOrder) + ".." + std::to_string(kMaxOrder));
}

double millisSince(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

CheckResult runOne(const CheckDef& def, const Workspace& ws, const RunOptions& options) {
  CheckResult out;
  out.id = def.id;
  out.indices = def.indices;
  const auto start = std::chrono::steady_clock::now();
  Ctx ctx(def.ws ? *def.ws : ws, def.perturb ? def.perturb : options.perturb);
  try {
    def.body(ctx);
    out.pass = !ctx.failed() && ctx.terms() == 0 && ctx.coefficients() > 0;
    out.detail = ctx.detail();
    if (!out.pass && out.detail.empty()) out.detail = "no coefficients tested";
  } catch (const std::exception& e) {
    out.pass = false;
    out.detail = std::string("error: ") + e.what();
  }
  out.residualTerms = ctx.terms();
  out.coefficients = ctx.coefficients();
  out.constants = ctx.constants();
  out.millis = millisSince(start);
  return out;
}

std::vector<CheckResult> runPool(const CheckList& list, const Workspace& ws, const RunOptions& options) {
  std::vector<std::size_t> selected;
  if (options.only) {
    if (*options.only >= list.size()) throw std::invalid_argument("check position out of range");
    selected.push_back(*options.only);
  } else {
    for (std::size_t i = 0; i < list.size(); ++i) selected.push_back(i);
  }
  std::vector<CheckResult> results(selected.size());
  int jobs = options.jobs > 0 ? options.jobs : static_cast<int>(std::thread::hardware_concurrency());
  jobs = std::clamp(jobs, 1, std::max<int>(1, static_cast<int>(selected.size())));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next++; k < selected.size(); k = next++) results[k] = runOne(list[selected[k]], ws, options);
  };
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  return results;
}

void loadCache(Algebra& alg, const RunOptions& options) {
  if (!options.cachePath.empty()) alg.loadCache(options.cachePath);
}

void saveCache(const Algebra& alg, const RunOptions& options) {
  if (!options.cachePath.empty()) alg.saveCache(options.cachePath);
}

// Checks over an algebra with one table entry negated, plus one check with a
// perturbed constant. Both run at order 3 or more.
struct NegativeFixture {
  Algebra broken;
  Workspace brokenWs;
  Algebra intact;
  Workspace intactWs;
  NegativeFixture(int m, int order, std::uint64_t seed)
      : broken(m, AlgebraOptions{true, TableKey{1, 1, 1, 2, 1, 1}}),
        brokenWs(broken, std::max(order, 3), seed),
        intact(m),
        intactWs(intact, std::max(order, 3), seed) {}
};

CheckList negativeChecks(const NegativeFixture& fx) {
  CheckList out;
  auto pick = [](CheckList list, const std::string& id, const std::string& indices) {
    for (auto& d : list)
      if (d.id == id && (indices.empty() || d.indices == indices)) return d;
    throw std::logic_error("negative control: no check " + id);
  };
  const auto& bw = fx.brokenWs;
  for (auto d : {pick(detail::rttSanityChecks(bw), "antisymmetry", "i=1,j=1,k=1,l=2"),
                 pick(detail::thmOdpChecks(bw), "oeifj", ""),
                 pick(detail::thmOdpChecks(bw), "ohiej", ""),
                 pick(detail::morphismChecks(bw), "sigma-table", "i=1,j=1,k=1,l=2")}) {
    d.id = "flipped-entry/" + d.id;
    d.ws = &bw;
    out.push_back(std::move(d));
  }
  CheckDef perturbed = pick(detail::thmOdpChecks(fx.intactWs), "oeifj", "");
  perturbed.id = "perturbed-constant/" + perturbed.id;
  perturbed.perturb = 0;
  perturbed.ws = &fx.intactWs;
  out.push_back(std::move(perturbed));
  return out;
}

}  // namespace

const std::vector<SuiteInfo>& suiteCatalog() {
  static const std::vector<SuiteInfo> infos = [] {
    std::vector<SuiteInfo> out;
    for (const auto& d : definitions()) out.push_back(d.info);
    return out;
  }();
  return infos;
}

const SuiteInfo* findSuite(const std::string& id) {
  const SuiteDef* d = findDef(id);
  return d ? &d->info : nullptr;
}

std::string suiteIdList() {
  std::string out = "all";
  for (const auto& d : definitions()) out += ", " + d.info.id;
  return out;
}

Report runSuite(const std::string& id, int m, int order, const RunOptions& options) {
  if (id == "all") return runAll(m, order, options);
  const SuiteDef* def = findDef(id);
  if (!def) throw std::invalid_argument("unknown suite '" + id + "'; valid ids: " + suiteIdList());
  validate(m, order);
  if (m < def->info.minM || m > def->info.maxM) {
    throw std::invalid_argument("suite " + id + " needs m in " + std::to_string(def->info.minM) + ".." +
                                std::to_string(def->info.maxM));
  }
  const auto start = std::chrono::steady_clock::now();
  Algebra alg(m);
  loadCache(alg, options);
  Workspace ws(alg, order, options.seed);
  Report report;
  report.suite = id;
  report.m = m;
  report.order = order;
  if (def->info.negative) {
    NegativeFixture fx(m, order, options.seed);
    report.checks = runPool(negativeChecks(fx), ws, options);
  } else {
    report.checks = runPool(def->build(ws), ws, options);
  }
  saveCache(alg, options);
  report.millis = millisSince(start);
  return report;
}

Report runAll(int m, int order, const RunOptions& options) {
  validate(m, order);
  const auto start = std::chrono::steady_clock::now();
  Algebra alg(m);
  loadCache(alg, options);
  Workspace ws(alg, order, options.seed);
  CheckList all;
  for (const auto& d : definitions()) {
    if (d.info.negative || m < d.info.minM || m > d.info.maxM) continue;
    for (auto& c : d.build(ws)) {
      c.id = d.info.id + "/" + c.id;
      all.push_back(std::move(c));
    }
  }
  Report report;
  report.suite = "all";
  report.m = m;
  report.order = order;
  report.checks = runPool(all, ws, options);
  saveCache(alg, options);
  report.millis = millisSince(start);
  return report;
}

}  // namespace yangian
