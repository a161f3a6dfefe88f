// One line per acceptance criterion; exit status 0 iff all pass.
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "yangian/suites.hpp"
#include "yangian_cli/cli.hpp"

using namespace yangian;

namespace {

struct Outcome {
  bool pass = true;
  std::string note;
  void require(bool ok, const std::string& what) {
    if (ok) return;
    pass = false;
    if (!note.empty()) note += "; ";
    note += what;
  }
};

// Runs a suite and requires every check to pass and every listed id to be present.
void suite(Outcome& o, const std::string& id, int m, int order, const std::set<std::string>& required,
           std::size_t* checks = nullptr) {
  Report r = runSuite(id, m, order);
  std::set<std::string> seen;
  for (const auto& c : r.checks) {
    seen.insert(c.id);
    o.require(c.pass, id + "/" + c.id + " [" + c.indices + "] " + c.detail);
  }
  for (const auto& want : required) o.require(seen.count(want) > 0, id + " lacks " + want);
  o.require(r.allPass(), id + " m=" + std::to_string(m) + " D=" + std::to_string(order) + " failed");
  if (checks) *checks += r.checks.size();
}

int cliExit(std::vector<std::string> args) {
  args.insert(args.begin(), "yangian");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  return cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
}

Outcome criterion1() {
  Outcome o;
  suite(o, "thm-odp", 1, 5,
        {"ohihj", "oeifj", "ohiej", "ohifj", "ohtej", "ohtfj", "oeiei", "ofifi", "oeieoo", "ofifoo", "ef", "htz",
         "euho", "eueoo", "eoomeoo", "hehe"});
  return o;
}

Outcome criterion2() {
  Outcome o;
  suite(o, "cor-odpy", 1, 5, {"kukv", "kuev", "kufv", "eeff"});
  suite(o, "cor-serre", 1, 5, {"akufv", "woeiei", "wofifi", "serreacfr", "aserreacfrf", "serreacfrf"});
  return o;
}

Outcome criterion3() {
  Outcome o;
  suite(o, "ospl4", 2, 3, {"commu", "idetr", "reid", "paret"});
  suite(o, "thm-dp", 2, 3,
        {"hihj", "eifj", "hiej", "hifj", "mohtej", "mohtfj", "eiei", "fifi", "moeiei", "mofifi", "eiej", "fifj",
         "moeieoo", "mofifoo", "eSerre", "fSerre"});
  Report r = runSuite("thm-dp", 2, 3);
  bool cubic = false;
  for (const auto& c : r.checks) cubic = cubic || (c.id == "eSerre" && c.indices == "i=2,j=1,k=3" && c.pass);
  o.require(cubic, "Serre relation at k=3 for (m, m-1) missing or failing");
  suite(o, "cor-modpy", 2, 3,
        {"kikj", "xpixmj", "kixpj", "xpixpj", "mkufv", "mkuev", "mmoeiei", "mmofifoo", "mmoeieoo", "Serrexipm"});
  return o;
}

Outcome criterion4() {
  Outcome o;
  suite(o, "gauss-core", 1, 5, {"FHE", "quasideterminant", "ilm", "cuhh", "cu", "ttra", "central"});
  suite(o, "gauss-core", 2, 3, {"FHE", "quasideterminant", "ilm", "cuhh", "cu", "ttra", "central"});
  return o;
}

Outcome criterion5() {
  Outcome o;
  const std::vector<std::size_t> m1 = {1, 6, 25, 86, 260};
  auto rows = pbwTable(1, 4);
  for (const auto& row : rows) {
    o.require(row.match, "m=1 d=" + std::to_string(row.degree) + " count " + std::to_string(row.count) +
                             " vs series " + row.series);
    o.require(row.count == m1[row.degree], "m=1 d=" + std::to_string(row.degree) + " differs from frozen value");
  }
  const std::vector<std::size_t> m2 = {1, 15, 131, 860};
  for (const auto& row : pbwTable(2, 3)) {
    o.require(row.match && row.count == m2[row.degree], "m=2 d=" + std::to_string(row.degree));
  }
  const std::vector<std::size_t> ranks = {1, 6, 25};
  for (const auto& row : gaussianIndependence(2)) {
    o.require(row.monomials == ranks[row.degree] && row.rank == row.monomials,
              "independence d=" + std::to_string(row.degree) + ": rank " + std::to_string(row.rank) + " of " +
                  std::to_string(row.monomials));
  }
  suite(o, "pbw", 1, 4, {"count", "independence"});
  suite(o, "pbw", 2, 3, {"count"});
  return o;
}

Outcome criterion6() {
  Outcome o;
  suite(o, "morphisms", 1, 5, {"sigma^4", "tau^4", "sigma-table", "tau-table", "mu-invariance"});
  Report r = runSuite("morphisms", 1, 5);
  int mu = 0;
  for (const auto& c : r.checks) mu += c.id == "mu-invariance";
  o.require(mu == 3, "expected three sampled phi");
  suite(o, "lem-sigauss", 1, 5, {"sigauss"});
  return o;
}

Outcome criterion7() {
  Outcome o;
  suite(o, "prop-copr", 1, 5, {"copr", "delta-table", "delta-central"});
  return o;
}

Outcome criterion8() {
  Outcome o;
  suite(o, "rtt-sanity", 1, 5, {"antisymmetry", "jacobi", "strategy"});
  suite(o, "rtt-sanity", 2, 3, {"antisymmetry", "jacobi", "strategy"});
  o.require(cliExit({"verify", "--m", "1", "--order", "4", "--suite", "negative-control"}) == 1,
            "negative-control suite did not exit 1");
  o.require(cliExit({"pbw", "--m", "1", "--dmax", "2", "--drop-central"}) == 1, "mutated pbw fixture did not exit 1");
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"thm-odp relations and auxiliary identities, m=1, D=5", criterion1},
      {"cor-odpy and cor-serre relations, m=1, D=5", criterion2},
      {"ospl4, thm-dp and cor-modpy relations, m=2, D=3", criterion3},
      {"gauss-core identities, m=1 and m=2", criterion4},
      {"PBW counts and Gaussian independence", criterion5},
      {"sigma, tau and mu morphisms", criterion6},
      {"coproduct on the table and on e, f", criterion7},
      {"engine properties and negative controls", criterion8},
  };
  bool all = true;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[k].second();
    } catch (const std::exception& e) {
      o.require(false, std::string("error: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    all = all && o.pass;
    std::printf("criterion %zu: %s  %s (%.1fs)%s%s\n", k + 1, o.pass ? "PASS" : "FAIL", criteria[k].first.c_str(),
                secs, o.note.empty() ? "" : "  ", o.note.c_str());
  }
  return all ? 0 : 1;
}
