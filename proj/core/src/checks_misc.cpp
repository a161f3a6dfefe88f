#include <map>
#include <random>
#include <sstream>

#include "suite_impl.hpp"

namespace yangian::detail {

namespace {

const Rational kHalf(1, 2);

void add(CheckList& out, std::string id, std::string indices, std::function<void(Ctx&)> body) {
  out.push_back(CheckDef{std::move(id), std::move(indices), std::move(body), std::nullopt, nullptr});
}

void zeroMatrix(Ctx& c, const PMatrix& a) {
  for (int i = 1; i <= a.size(); ++i)
    for (int j = 1; j <= a.size(); ++j) c.zero(a(i, j));
}

std::vector<int> range(int from, int to) {
  std::vector<int> out;
  for (int i = from; i <= to; ++i) out.push_back(i);
  return out;
}

// Series whose coefficients generate the Yangian: k_i, e_i, f_i, e_mm', f_m'm.
std::vector<std::pair<std::string, const PS*>> yGenerators(const Workspace& ws) {
  std::vector<std::pair<std::string, const PS*>> out;
  for (int i = 1; i <= ws.m; ++i) {
    out.push_back({"k" + std::to_string(i), &ws.k[i - 1]});
    out.push_back({"e" + std::to_string(i), &ws.e(i, i + 1)});
    out.push_back({"f" + std::to_string(i), &ws.f(i + 1, i)});
  }
  out.push_back({"emm'", &ws.e(ws.m, ws.m + 2)});
  out.push_back({"fm'm", &ws.f(ws.m + 2, ws.m)});
  return out;
}

std::vector<Rational> samplePhi(std::mt19937_64& rng, int order) {
  std::uniform_int_distribution<int> num(-3, 3), den(1, 3);
  std::vector<Rational> phi;
  for (int a = 1; a <= order; ++a) phi.push_back(Rational(num(rng), den(rng)));
  return phi;
}

void addMuChecks(CheckList& out, const Workspace& ws, const std::string& id, std::uint64_t salt) {
  std::mt19937_64 rng(ws.seed ^ salt);
  for (int sample = 1; sample <= 3; ++sample) {
    std::vector<Rational> phi = samplePhi(rng, ws.order);
    std::ostringstream name;
    name << "phi=(";
    for (std::size_t a = 0; a < phi.size(); ++a) name << (a ? "," : "") << phi[a].str();
    name << ")";
    add(out, id, name.str(), [phi](Ctx& c) {
      Morphism mu = muPhiMorphism(c.ws.alg, phi);
      for (const auto& [label, s] : yGenerators(c.ws)) c.zero(mu.apply(*s) - *s);
    });
  }
}

std::vector<LetterId> allowedLetters(const Algebra& alg, int r) {
  std::vector<LetterId> out;
  const auto& idx = alg.index();
  for (int i = 1; i <= idx.N(); ++i)
    for (int j = 1; j <= idx.N(); ++j)
      if (idx.allowed(i, j)) out.push_back(alg.codec().t(i, j, r));
  return out;
}

}  // namespace

CheckList gaussCoreChecks(const Workspace& ws) {
  CheckList out;
  const int m = ws.m;
  const int n = ws.alg.index().N();
  add(out, "FHE", "", [](Ctx& c) {
    const auto& g = c.ws.g;
    const int n = c.ws.T.size();
    PMatrix H(n, c.D);
    for (int i = 1; i <= n; ++i) H.at(i, i) = g.h(i);
    zeroMatrix(c, [&] {
      PMatrix r = matMul(c.ws.ring, matMul(c.ws.ring, g.F, H), g.E);
      PMatrix d(n, c.D);
      for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) d.at(i, j) = c.ws.T(i, j) - r(i, j);
      return d;
    }());
  });
  for (int i = 1; i <= std::min(n, 3); ++i) {
    add(out, "quasideterminant", idx({{"i", i}}), [i](Ctx& c) {
      const auto& T = c.ws.T;
      const auto& ring = c.ws.ring;
      c.zero(quasideterminant(ring, submatrix(T, range(1, i), range(1, i)), i, i) - c.ws.h(i));
      if (i + 1 > T.size()) return;
      std::vector<int> cols = range(1, i - 1), rows = range(1, i - 1);
      cols.push_back(i + 1);
      rows.push_back(i + 1);
      PS eq = c.mul(c.ws.g.hinv(i), quasideterminant(ring, submatrix(T, range(1, i), cols), i, i));
      c.zero(eq - c.ws.e(i, i + 1));
      PS fq = c.mul(quasideterminant(ring, submatrix(T, rows, range(1, i)), i, i), c.ws.g.hinv(i));
      c.zero(fq - c.ws.f(i + 1, i));
    });
  }
  for (int i = 1; i <= m; ++i) {
    add(out, "ilm", idx({{"i", i}}), [i](Ctx& c) {
      const auto& w = c.ws;
      const Rational s = c.k(Rational(2 * (w.m - i) + 1, 2));
      c.zero(c.mul(w.h(i), c.sh(w.h(w.prime(i)), s)) -
             c.k(1) * c.mul(w.h(i + 1), c.sh(w.h(w.prime(i + 1)), c.k(Rational(2 * (w.m - i) + 1, 2)))));
    });
  }
  add(out, "cuhh", "", [](Ctx& c) {
    const auto& w = c.ws;
    c.zero(w.c - c.k(1) * c.mul(w.h(1), c.sh(w.h(w.prime(1)), c.k(Rational(2 * w.m + 1, 2)))));
  });
  add(out, "cu", "", [](Ctx& c) { c.zero(c.ws.c - cSeriesProduct(c.ws.ring, c.ws.g)); });
  for (int order = 0; order < 2; ++order) {
    add(out, "ttra", order ? "product=TtT" : "product=TTt", [order](Ctx& c) {
      PMatrix p = ttraProduct(c.ws.ring, c.ws.alg.index(), c.ws.T, order == 1);
      const int n = p.size();
      for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) c.zero(i == j ? p(i, j) - c.ws.c : p(i, j));
    });
  }
  add(out, "taue", "h", [](Ctx& c) {
    for (int k = 1; k <= c.ws.T.size(); ++k) c.zero(c.ws.tau().apply(c.ws.h(k)) - c.ws.h(k));
  });
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      add(out, "taue", idx({{"i", i}, {"j", j}}), [i, j](Ctx& c) {
        const auto& id = c.ws.alg.index();
        const int se = signOf(id.bar(i) * id.bar(j) + id.bar(j));
        const int sf = signOf(id.bar(i) * id.bar(j) + id.bar(i));
        c.zero(c.ws.tau().apply(c.ws.e(i, j)) - c.k(se) * c.ws.f(j, i));
        c.zero(c.ws.tau().apply(c.ws.f(j, i)) - c.k(sf) * c.ws.e(i, j));
      });
    }
  }
  for (int i = 1; i <= n; ++i) {
    for (int j = i; j <= n; ++j) {
      add(out, "h-commute", idx({{"i", i}, {"j", j}}), [i, j](Ctx& c) {
        c.zero(c.br(c.U(c.ws.h(i)), c.V(c.ws.h(j))));
      });
    }
  }
  add(out, "central", "", [](Ctx& c) {
    const Algebra& alg = c.ws.alg;
    auto raw = rawCentralLetters(alg, c.D);
    for (int r = 1; r <= c.D; ++r) {
      for (int s = 1; r + s <= c.D + 1; ++s) {
        for (LetterId x : allowedLetters(alg, s)) {
          Poly t = Poly::letter(alg.codec(), x);
          c.zero(alg.normalize(superCommutator(raw[r - 1], t)),
                 "c" + std::to_string(r) + " with " + alg.codec().format(x));
        }
      }
    }
  });
  if (m == 1) {
    add(out, "z", "", [](Ctx& c) {
      const auto& w = c.ws;
      c.zero(c.mul(w.z, c.sh(w.z, c.k(kHalf))) - c.k(1) * c.sh(w.c, c.k(-1)));
    });
  }
  return out;
}

CheckList rttSanityChecks(const Workspace& ws) {
  CheckList out;
  const int level = std::min(ws.order, 5);
  ws.alg.prepare(level);
  std::map<std::array<int, 4>, std::vector<std::pair<int, int>>> fam;
  ws.alg.forEachEntry([&](const TableKey& key, const Poly&) {
    if (key.r + key.s <= level) fam[{key.i, key.j, key.k, key.l}].push_back({key.r, key.s});
  });
  for (const auto& [f, pairs] : fam) {
    add(out, "antisymmetry", idx({{"i", f[0]}, {"j", f[1]}, {"k", f[2]}, {"l", f[3]}}), [f, pairs](Ctx& c) {
      const Algebra& alg = c.ws.alg;
      const auto& id = alg.index();
      const int sign = signOf(id.parity(f[0], f[1]) * id.parity(f[2], f[3]));
      for (auto [r, s] : pairs) {
        Poly a = alg.commutatorTable(f[0], f[1], f[2], f[3], r, s);
        Poly b = alg.commutatorTable(f[2], f[3], f[0], f[1], s, r);
        c.zero(a + Rational(sign) * b, "r=" + std::to_string(r) + ",s=" + std::to_string(s));
      }
    });
  }
  add(out, "jacobi", "samples=60", [](Ctx& c) {
    const Algebra& alg = c.ws.alg;
    std::mt19937_64 rng(c.ws.seed * 0x9e3779b97f4a7c15ULL + 1);
    const int maxTotal = c.ws.m == 1 ? 6 : 5;
    for (int sample = 0; sample < 60; ++sample) {
      std::uniform_int_distribution<int> total(3, maxTotal);
      int t = total(rng);
      std::uniform_int_distribution<int> first(1, t - 2);
      int r1 = first(rng);
      std::uniform_int_distribution<int> second(1, t - r1 - 1);
      int r2 = second(rng);
      int r3 = t - r1 - r2;
      auto pick = [&](int r) {
        auto letters = allowedLetters(alg, r);
        std::uniform_int_distribution<std::size_t> which(0, letters.size() - 1);
        return Poly::letter(alg.codec(), letters[which(rng)]);
      };
      Poly a = pick(r1), b = pick(r2), d = pick(r3);
      const int sign = signOf(homogeneousParity(a) * homogeneousParity(b));
      Poly res = alg.bracket(a, alg.bracket(b, d)) - alg.bracket(alg.bracket(a, b), d) -
                 Rational(sign) * alg.bracket(b, alg.bracket(a, d));
      c.zero(res, "sample " + std::to_string(sample));
    }
  });
  add(out, "strategy", "samples=100", [](Ctx& c) {
    const Algebra& alg = c.ws.alg;
    const int n = alg.index().N();
    std::mt19937_64 rng(c.ws.seed * 0xbf58476d1ce4e5b9ULL + 7);
    std::uniform_int_distribution<int> index(1, n), coef(-4, 4), terms(1, 3), degree(1, 4);
    for (int sample = 0; sample < 100; ++sample) {
      Poly p;
      const int nt = terms(rng);
      for (int t = 0; t < nt; ++t) {
        int left = degree(rng);
        Word w;
        while (left > 0) {
          std::uniform_int_distribution<int> rr(1, left);
          int r = rr(rng);
          w.push(index(rng) == 1 && r <= 2 ? alg.codec().c(r) : alg.codec().t(index(rng), index(rng), r));
          left -= r;
        }
        int q = coef(rng);
        p += Poly::word(alg.m(), w, Rational(q == 0 ? 1 : q));
      }
      Poly a = alg.normalize(p, Strategy::LeftmostFirst);
      Poly b = alg.normalize(p, Strategy::RightmostFirst);
      Poly d = alg.normalize(p, Strategy::Fast);
      c.zero(a - b, "sample " + std::to_string(sample) + " left/right");
      c.zero(a - d, "sample " + std::to_string(sample) + " left/fast");
    }
  });
  addMuChecks(out, ws, "mu-invariance", 0x2545f4914f6cdd1dULL);
  return out;
}

namespace {

using Matrix = std::vector<std::vector<Rational>>;

Matrix zeroMat(int n) { return Matrix(n, std::vector<Rational>(n)); }

// F_ij = E_ij - E_{j'i'} (-1)^{bar i bar j + bar i} theta_i theta_j.
Matrix oracleF(const IndexData& id, int i, int j) {
  const int n = id.N();
  Matrix a = zeroMat(n);
  a[i - 1][j - 1] += Rational(1);
  const int s = signOf(id.bar(i) * id.bar(j) + id.bar(i)) * id.theta(i) * id.theta(j);
  a[id.prime(j) - 1][id.prime(i) - 1] -= Rational(s);
  return a;
}

Matrix matProd(const Matrix& a, const Matrix& b) {
  const int n = static_cast<int>(a.size());
  Matrix out = zeroMat(n);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      if (a[i][k].isZero()) continue;
      for (int j = 0; j < n; ++j)
        if (!b[k][j].isZero()) out[i][j] += a[i][k] * b[k][j];
    }
  return out;
}

Matrix superBracket(const Matrix& a, const Matrix& b, int pa, int pb) {
  Matrix ab = matProd(a, b), ba = matProd(b, a);
  const Rational s(signOf(pa * pb));
  for (std::size_t i = 0; i < ab.size(); ++i)
    for (std::size_t j = 0; j < ab.size(); ++j) ab[i][j] -= s * ba[i][j];
  return ab;
}

}  // namespace

CheckList embeddingChecks(const Workspace& ws) {
  CheckList out;
  const int n = ws.alg.index().N();
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      add(out, "emb", idx({{"i", i}, {"j", j}}), [i, j](Ctx& c) {
        const Algebra& alg = c.ws.alg;
        const auto& id = alg.index();
        const int n = id.N();
        // Image of F_ab in degree one.
        auto image = [&](int a, int b) {
          const int s = signOf(id.bar(b) + id.bar(a) * id.bar(b)) * id.theta(a) * id.theta(b);
          Poly p = alg.tNormal(a, b, 1) - Rational(s) * alg.tNormal(id.prime(b), id.prime(a), 1);
          return Rational(signOf(id.bar(a)), 2) * p;
        };
        const Matrix fij = oracleF(id, i, j);
        const int pij = id.parity(i, j);
        for (int k = 1; k <= n; ++k) {
          for (int l = 1; l <= n; ++l) {
            Matrix mk = superBracket(fij, oracleF(id, k, l), pij, id.parity(k, l));
            // The bracket lies in osp, where M = 1/2 sum M_ab F_ab.
            Matrix back = zeroMat(n);
            Poly rhs;
            for (int a = 1; a <= n; ++a) {
              for (int b = 1; b <= n; ++b) {
                const Rational& w = mk[a - 1][b - 1];
                if (w.isZero()) continue;
                Matrix fab = oracleF(id, a, b);
                for (int x = 0; x < n; ++x)
                  for (int y = 0; y < n; ++y) back[x][y] += kHalf * w * fab[x][y];
                rhs += kHalf * w * image(a, b);
              }
            }
            const std::string where = "k=" + std::to_string(k) + ",l=" + std::to_string(l);
            if (back != mk) c.fail("oracle bracket outside the span of F at " + where);
            c.zero(alg.bracket(image(i, j), image(k, l)) - rhs, where);
          }
        }
      });
    }
  }
  return out;
}

}  // namespace yangian::detail

namespace yangian {

std::vector<PbwRow> pbwTable(int m, int dmax, const PbwOptions& options) {
  if (m < 1 || m > kMaxRank) throw std::invalid_argument("pbw: m out of range");
  if (dmax < 0) throw std::invalid_argument("pbw: negative degree");
  Algebra alg(m);
  std::vector<PbwRow> rows;
  for (int d = 0; d <= dmax; ++d) {
    auto words = alg.enumerateNormalWords(d);
    std::size_t count = 0;
    for (const auto& w : words) {
      bool central = false;
      for (LetterId x : w) central = central || letterIsCentral(x);
      if (!(options.dropCentral && central)) ++count;
    }
    PbwRow row;
    row.degree = d;
    row.count = count;
    row.series = pbwSeriesCount(m, d).get_str();
    row.match = row.series == std::to_string(count);
    rows.push_back(row);
  }
  return rows;
}

namespace {

class RankAccumulator {
 public:
  // Returns true when the row is independent of the rows added so far.
  bool add(const Poly& p) {
    std::map<Word, Rational, WordLess> row;
    for (const auto& t : p.terms()) row.emplace(t.word, t.coef);
    for (const auto& [pivot, basis] : rows_) {
      auto it = row.find(pivot);
      if (it == row.end()) continue;
      Rational factor = it->second;
      for (const auto& [w, q] : basis) {
        auto [jt, inserted] = row.try_emplace(w, Rational(0));
        jt->second -= factor * q;
        if (jt->second.isZero()) row.erase(jt);
      }
    }
    if (row.empty()) return false;
    // Largest word as pivot, row scaled to 1 there.
    auto last = std::prev(row.end());
    Word pivot = last->first;
    Rational inv = Rational(1) / last->second;
    for (auto& [w, q] : row) q *= inv;
    // Keep the basis reduced at the new pivot.
    for (auto& [opivot, basis] : rows_) {
      auto it = basis.find(pivot);
      if (it == basis.end()) continue;
      Rational factor = it->second;
      for (const auto& [w, q] : row) {
        auto [jt, inserted] = basis.try_emplace(w, Rational(0));
        jt->second -= factor * q;
        if (jt->second.isZero()) basis.erase(jt);
      }
    }
    rows_.emplace_back(pivot, std::move(row));
    return true;
  }

 private:
  std::vector<std::pair<Word, std::map<Word, Rational, WordLess>>> rows_;
};

struct Generator {
  const PSeries* series;
  int r;
  bool odd;
};

}  // namespace

std::vector<IndependenceRow> gaussianIndependence(int dmax) {
  if (dmax < 0 || dmax > 3) throw std::invalid_argument("gaussianIndependence: dmax must be in 0..3");
  Algebra alg(1);
  const int order = std::max(dmax, 1);
  detail::Workspace ws(alg, order, 1);
  const std::vector<std::pair<const PSeries*, bool>> families = {
      {&ws.h(1), false}, {&ws.h(2), false}, {&ws.e(1, 2), true},
      {&ws.f(2, 1), true}, {&ws.e(1, 3), false}, {&ws.f(3, 1), false}};
  std::vector<Generator> gens;
  for (const auto& [s, odd] : families)
    for (int r = 1; r <= dmax; ++r) gens.push_back(Generator{s, r, odd});

  RankAccumulator rank;
  std::vector<IndependenceRow> rows;
  for (int d = 0; d <= dmax; ++d) {
    IndependenceRow row;
    row.degree = d;
    row.series = pbwSeriesCount(1, d).get_str();
    // Ordered monomials of degree exactly d: non-decreasing generator positions,
    // odd generators at most once.
    std::vector<std::size_t> chosen;
    std::function<void(std::size_t, int)> walk = [&](std::size_t from, int left) {
      if (left == 0) {
        Poly p(Rational(1));
        for (std::size_t g : chosen) p = alg.mul(p, (*gens[g].series)[gens[g].r]);
        ++row.monomials;
        if (rank.add(p)) ++row.rank;
        return;
      }
      for (std::size_t g = from; g < gens.size(); ++g) {
        if (gens[g].r > left) continue;
        chosen.push_back(g);
        walk(gens[g].odd ? g + 1 : g, left - gens[g].r);
        chosen.pop_back();
      }
    };
    walk(0, d);
    rows.push_back(row);
  }
  return rows;
}

}  // namespace yangian

namespace yangian::detail {

CheckList pbwChecks(const Workspace& ws) {
  CheckList out;
  const int dmax = ws.m == 1 ? 4 : 3;
  for (int d = 0; d <= dmax; ++d) {
    add(out, "count", idx({{"d", d}}), [d](Ctx& c) {
      auto words = c.ws.alg.enumerateNormalWords(d);
      const std::string series = pbwSeriesCount(c.ws.m, d).get_str();
      c.zero(Poly(Rational(0)), "count");
      if (series != std::to_string(words.size())) {
        c.fail("normal words " + std::to_string(words.size()) + " vs series " + series);
      }
    });
  }
  if (ws.m == 1) {
    add(out, "independence", "dmax=2", [](Ctx& c) {
      for (const auto& row : gaussianIndependence(2)) {
        c.zero(Poly(Rational(0)), "degree " + std::to_string(row.degree));
        if (row.rank != row.monomials || std::to_string(row.monomials) != row.series) {
          c.fail("degree " + std::to_string(row.degree) + ": monomials " + std::to_string(row.monomials) +
                 ", rank " + std::to_string(row.rank) + ", series " + row.series);
        }
      }
    });
  }
  return out;
}

CheckList morphismChecks(const Workspace& ws) {
  CheckList out;
  for (const char* which : {"sigma", "tau"}) {
    const bool isSigma = which[0] == 's';
    add(out, std::string(which) + "^4", "letters", [isSigma](Ctx& c) {
      const Algebra& alg = c.ws.alg;
      const Morphism& phi = isSigma ? c.ws.sigma() : c.ws.tau();
      const int n = alg.index().N();
      for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
          for (int r = 1; r <= c.D; ++r) {
            Poly x = alg.t(i, j, r);
            Poly p = x;
            for (int step = 0; step < 4; ++step) p = phi.applyFree(p);
            c.zero(p - x, alg.codec().format(alg.codec().t(i, j, r)));
          }
        }
      }
      for (int r = 1; r <= std::min(c.D, 3); ++r) {
        Poly p = alg.c(r);
        for (int step = 0; step < 4; ++step) p = phi.apply(p);
        c.zero(p - alg.c(r), "c[" + std::to_string(r) + "]");
      }
    });
  }
  add(out, "tau^2", "letters", [](Ctx& c) {
    const Algebra& alg = c.ws.alg;
    const auto& id = alg.index();
    const Morphism& tau = c.ws.tau();
    for (int i = 1; i <= id.N(); ++i) {
      for (int j = 1; j <= id.N(); ++j) {
        const int s = signOf(id.bar(i) * id.bar(j) + id.bar(j)) * signOf(id.bar(j) * id.bar(i) + id.bar(i));
        for (int r = 1; r <= c.D; ++r) {
          c.zero(tau.applyFree(tau.applyFree(alg.t(i, j, r))) - c.k(s) * alg.t(i, j, r));
        }
      }
    }
  });
  for (auto& def : tableMorphismChecks(ws, ws.order)) out.push_back(std::move(def));
  addMuChecks(out, ws, "mu-invariance", 0x94d049bb133111ebULL);
  return out;
}

}  // namespace yangian::detail
