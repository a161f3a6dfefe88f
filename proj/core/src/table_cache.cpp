#include <algorithm>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "algebra_impl.hpp"

namespace yangian {

namespace {

struct CacheLine {
  int m;
  TableKey key;
  std::string text;  // full line
};

using KeyTuple = std::tuple<int, int, int, int, int, int, int>;

KeyTuple tupleOf(const CacheLine& c) {
  return {c.m, c.key.i, c.key.j, c.key.k, c.key.l, c.key.r, c.key.s};
}

bool parseHead(const std::string& line, int& m, TableKey& key, std::string& polyText) {
  int consumed = 0;
  if (std::sscanf(line.c_str(), "%d;%d,%d,%d,%d;%d,%d;%n", &m, &key.i, &key.j, &key.k, &key.l, &key.r, &key.s,
                  &consumed) != 7) {
    return false;
  }
  polyText = line.substr(static_cast<std::size_t>(consumed));
  return true;
}

std::string lineFor(int m, const TableKey& k, const std::string& poly) {
  std::ostringstream os;
  os << m << ';' << k.i << ',' << k.j << ',' << k.k << ',' << k.l << ';' << k.r << ',' << k.s << ';' << poly;
  return os.str();
}

std::vector<CacheLine> readLines(const std::string& path, bool& exists) {
  std::vector<CacheLine> out;
  std::ifstream in(path);
  exists = static_cast<bool>(in);
  if (!in) return out;
  std::string line;
  if (!std::getline(in, line)) return out;
  if (line != kCacheHeader) throw std::runtime_error("cache file '" + path + "' has an unknown format version");
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    CacheLine c;
    std::string polyText;
    if (!parseHead(line, c.m, c.key, polyText)) throw std::runtime_error("malformed cache line: " + line);
    c.text = line;
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace

std::size_t Algebra::loadCache(const std::string& path) {
  if (impl_->opts.flipSign) return 0;  // mutated fixtures never share a cache
  bool exists = false;
  auto lines = readLines(path, exists);
  const int N = impl_->N;
  // family -> (a, b) -> poly
  std::map<int, std::map<std::pair<int, int>, Poly>> byFamily;
  for (const auto& c : lines) {
    if (c.m != m()) continue;
    const auto& k = c.key;
    if (k.i < 1 || k.i > N || k.j < 1 || k.j > N || k.k < 1 || k.k > N || k.l < 1 || k.l > N || k.r < 1 || k.s < 1 ||
        k.r + k.s > Impl::kMaxLevel) {
      throw std::runtime_error("cache entry out of range: " + c.text);
    }
    int mm;
    TableKey key;
    std::string polyText;
    parseHead(c.text, mm, key, polyText);
    byFamily[impl_->familyIndex(k.i, k.j, k.k, k.l)][{k.r, k.s}] = parsePoly(impl_->codec, polyText);
  }
  std::lock_guard<std::recursive_mutex> lock(impl_->grow);
  std::size_t adopted = 0;
  for (auto& [fi, entries] : byFamily) {
    auto& fam = *impl_->families[fi];
    int level = fam.level.load();
    for (int L = level + 1; L <= Impl::kMaxLevel; ++L) {
      std::vector<Poly> row;
      bool complete = true;
      for (int a = 1; a < L; ++a) {
        auto it = entries.find({a, L - a});
        if (it == entries.end()) {
          complete = false;
          break;
        }
        row.push_back(it->second);
      }
      if (!complete) break;
      adopted += row.size();
      impl_->installLevel(fi, L, std::move(row));
    }
  }
  return adopted;
}

void Algebra::saveCache(const std::string& path) const {
  if (impl_->opts.flipSign) throw std::logic_error("refusing to persist a mutated table");
  bool exists = false;
  std::vector<CacheLine> lines;
  for (auto& c : readLines(path, exists)) {
    if (c.m != m()) lines.push_back(std::move(c));
  }
  forEachEntry([&](const TableKey& k, const Poly& p) {
    lines.push_back(CacheLine{m(), k, lineFor(m(), k, formatPoly(impl_->codec, p))});
  });
  std::sort(lines.begin(), lines.end(), [](const CacheLine& a, const CacheLine& b) { return tupleOf(a) < tupleOf(b); });
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write cache file '" + path + "'");
    out << kCacheHeader << '\n';
    for (const auto& c : lines) out << c.text << '\n';
    if (!out) throw std::runtime_error("cannot write cache file '" + path + "'");
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0) {
    std::remove(tmp.c_str());
    throw std::runtime_error("cannot replace cache file '" + path + "'");
  }
}

}  // namespace yangian
