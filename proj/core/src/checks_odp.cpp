#include <map>

#include "suite_impl.hpp"

namespace yangian::detail {

namespace {

const Rational kHalf(1, 2);
const Rational kThird(1, 3);

// Generator series at m = 1.
struct Gens {
  const PS& h1;
  const PS& h2;
  const PS& h3;
  const PS& e;
  const PS& f;
  const PS& eoo;  // e_13
  const PS& foo;  // f_31
  const PS& k;
};

Gens gens(const Workspace& ws) {
  return Gens{ws.h(1), ws.h(2), ws.h(3), ws.e(1, 2), ws.f(2, 1), ws.e(1, 3), ws.f(3, 1), ws.k[0]};
}

// (x(u) x(v) - x(v) x(u)) / (u - v) and (x(u) - x(v))^2 / (u - v)^2.
BS swapQuotient(Ctx& c, const PS& x) { return c.mul(c.dq(x), c.V(x)) - c.mul(c.V(x), c.dq(x)); }
BS squareQuotient(Ctx& c, const PS& x) { return c.mul(c.dq(x), c.dq(x)); }

void add(CheckList& out, std::string id, std::string indices, std::function<void(Ctx&)> body) {
  out.push_back(CheckDef{std::move(id), std::move(indices), std::move(body), std::nullopt, nullptr});
}

// Relation families shared by table-driven checks: (i,j,k,l) -> (r,s) pairs.
using FamilyMap = std::map<std::array<int, 4>, std::vector<std::pair<int, int>>>;

FamilyMap tableFamilies(const Algebra& alg, int level) {
  alg.prepare(level);
  FamilyMap fam;
  alg.forEachEntry([&](const TableKey& key, const Poly&) {
    if (key.r + key.s > level) return;
    fam[{key.i, key.j, key.k, key.l}].push_back({key.r, key.s});
  });
  return fam;
}

std::string familyName(const std::array<int, 4>& f) {
  return idx({{"i", f[0]}, {"j", f[1]}, {"k", f[2]}, {"l", f[3]}});
}

}  // namespace

CheckList thmOdpChecks(const Workspace&) {
  CheckList out;
  for (int i = 1; i <= 2; ++i) {
    for (int j = 1; j <= 2; ++j) {
      add(out, "ohihj", idx({{"i", i}, {"j", j}}), [i, j](Ctx& c) {
        c.zero(c.br(c.U(c.ws.h(i)), c.V(c.ws.h(j))));
      });
    }
  }
  add(out, "oeifj", "", [](Ctx& c) {
    auto g = gens(c.ws);
    c.zero(c.br(c.U(g.e), c.V(g.f)) - c.k(1) * c.dq(g.k));
  });
  add(out, "ohiej", "", [](Ctx& c) {
    auto g = gens(c.ws);
    c.zero(c.br(c.U(g.h1), c.V(g.e)) - c.k(1) * c.mul(c.U(g.h1), c.dq(g.e)));
  });
  add(out, "ohifj", "", [](Ctx& c) {
    auto g = gens(c.ws);
    c.zero(c.br(c.U(g.h1), c.V(g.f)) - c.k(-1) * c.mul(c.dq(g.f), c.U(g.h1)));
  });
  add(out, "ohtej", "", [](Ctx& c) {
    auto g = gens(c.ws);
    BS inner = c.k(1) * c.dq(g.e) - c.k(1) * c.dq(g.e, c.k(-kHalf), 0);
    c.zero(c.br(c.U(g.h2), c.V(g.e)) - c.mul(c.U(g.h2), inner));
  });
  add(out, "ohtfj", "", [](Ctx& c) {
    auto g = gens(c.ws);
    BS inner = c.k(-1) * c.dq(g.f) + c.k(1) * c.dq(g.f, c.k(-kHalf), 0);
    c.zero(c.br(c.U(g.h2), c.V(g.f)) - c.mul(inner, c.U(g.h2)));
  });
  add(out, "oeiei", "", [](Ctx& c) {
    auto g = gens(c.ws);
    BS rhs = c.k(1) * c.dq(c.sq(g.e) + c.k(1) * g.eoo) + c.k(kHalf) * swapQuotient(c, g.e) -
             c.k(kHalf) * squareQuotient(c, g.e);
    c.zero(c.br(c.U(g.e), c.V(g.e)) - rhs);
  });
  add(out, "ofifi", "", [](Ctx& c) {
    auto g = gens(c.ws);
    BS rhs = c.k(1) * c.dq(c.sq(g.f) - c.k(1) * g.foo) - c.k(kHalf) * swapQuotient(c, g.f) -
             c.k(kHalf) * squareQuotient(c, g.f);
    c.zero(c.br(c.U(g.f), c.V(g.f)) - rhs);
  });
  add(out, "oeieoo", "", [](Ctx& c) {
    auto g = gens(c.ws);
    const Rational a = c.k(kHalf);
    BS rhs = c.k(-1) * c.mul(c.dq(g.e), c.U(g.eoo) - c.V(g.eoo)) -
             c.k(1) * c.mul(c.dq(g.e, a, 0), c.U(c.sq(g.e))) - c.k(1) * c.mul(c.dq(g.eoo, c.k(kHalf), 0), c.U(g.e));
    c.zero(c.br(c.U(g.e), c.V(g.eoo)) - rhs);
  });
  add(out, "ofifoo", "", [](Ctx& c) {
    auto g = gens(c.ws);
    const Rational a = c.k(kHalf);
    BS rhs = c.k(1) * c.mul(c.dq(g.foo), c.U(g.f) - c.V(g.f)) -
             c.k(1) * c.mul(c.U(c.sq(g.f)), c.dq(g.f, a, 0)) + c.k(1) * c.mul(c.U(g.f), c.dq(g.foo, c.k(kHalf), 0));
    c.zero(c.br(c.U(g.f), c.V(g.foo)) - rhs);
  });

  // Identities used along the way.
  add(out, "ef", "e", [](Ctx& c) {
    auto g = gens(c.ws);
    c.zero(c.ws.e(2, 3) + c.k(1) * c.sh(g.e, c.k(-kHalf)));
  });
  add(out, "ef", "f", [](Ctx& c) {
    auto g = gens(c.ws);
    c.zero(c.ws.f(3, 2) - c.k(1) * c.sh(g.f, c.k(-kHalf)));
  });
  add(out, "hhhc", "ilm", [](Ctx& c) {
    auto g = gens(c.ws);
    c.zero(c.mul(g.h1, c.sh(g.h3, c.k(kHalf))) - c.k(1) * c.mul(g.h2, c.sh(g.h2, c.k(kHalf))));
  });
  add(out, "hhhc", "c", [](Ctx& c) {
    auto g = gens(c.ws);
    c.zero(c.mul(g.h1, c.sh(g.h3, c.k(Rational(3, 2)))) - c.k(1) * c.ws.c);
  });
  add(out, "htz", "", [](Ctx& c) {
    auto g = gens(c.ws);
    PS rhs = product(c.ws.ring, c.ws.z, c.sh(g.h1, c.k(-kHalf)), c.inv(c.sh(g.h1, c.k(-1))));
    c.zero(g.h2 - c.k(1) * rhs);
  });
  add(out, "evho", "", [](Ctx& c) {
    auto g = gens(c.ws);
    c.zero(c.mul(c.V(g.e), c.U(g.h1)) - c.mul(c.U(g.h1), c.V(g.e) - c.k(1) * c.dq(g.e)));
  });
  add(out, "euho", "", [](Ctx& c) {
    auto g = gens(c.ws);
    c.zero(c.mul(c.sh(g.e, c.k(1)), g.h1) - c.k(1) * c.mul(g.h1, g.e));
  });
  add(out, "evhoinv", "", [](Ctx& c) {
    auto g = gens(c.ws);
    const PS& hinv = c.ws.g.hinv(1);
    c.zero(c.mul(c.V(g.e), c.U(hinv)) - c.mul(c.U(hinv), c.V(g.e) + c.k(1) * c.dq(g.e, c.k(1), 0)));
  });
  add(out, "hehe", "", [](Ctx& c) {
    auto g = gens(c.ws);
    const Rational a = c.k(1);
    const Rational b = c.k(1);
    PS lhs = product(c.ws.ring, c.sh(g.h1, a), c.sh(g.e, b), g.h1, g.eoo);
    PS rhs = product(c.ws.ring, c.sh(g.h1, c.k(1)), c.sh(g.eoo, c.k(1)), g.h1, g.e);
    c.zero(lhs - c.k(1) * rhs);
  });
  add(out, "eueoo", "", [](Ctx& c) {
    auto g = gens(c.ws);
    c.zero(c.br(g.e, g.eoo) + c.k(2) * c.mul(c.sq(g.e), g.e));
  });
  add(out, "eoomeoo", "", [](Ctx& c) {
    auto g = gens(c.ws);
    c.zero(c.sh(g.eoo, c.k(kHalf)) - c.k(1) * g.eoo + c.k(1) * c.mul(c.sh(g.e, c.k(kHalf)), g.e) -
           c.k(2) * c.sq(g.e));
  });
  return out;
}

CheckList corOdpyChecks(const Workspace&) {
  CheckList out;
  add(out, "kukv", "", [](Ctx& c) {
    auto g = gens(c.ws);
    c.zero(c.br(c.U(g.k), c.V(g.k)));
  });
  add(out, "kuev", "", [](Ctx& c) {
    auto g = gens(c.ws);
    BS inner = c.k(-kThird) * c.dq(g.e, c.k(-kHalf), 0) - c.k(2 * kThird) * c.dq(g.e, c.k(1), 0);
    c.zero(c.br(c.U(g.k), c.V(g.e)) - c.mul(c.U(g.k), inner));
  });
  add(out, "kufv", "", [](Ctx& c) {
    auto g = gens(c.ws);
    BS inner = c.k(kThird) * c.dq(g.f, c.k(-kHalf), 0) + c.k(2 * kThird) * c.dq(g.f, c.k(1), 0);
    c.zero(c.br(c.U(g.k), c.V(g.f)) - c.mul(inner, c.U(g.k)));
  });
  add(out, "eeff", "e", [](Ctx& c) {
    auto g = gens(c.ws);
    c.zero(g.eoo + c.k(1) * c.sq(g.e) + c.k(1) * bracketLeft(c.ws.ring, g.e[1], g.e));
  });
  add(out, "eeff", "f", [](Ctx& c) {
    auto g = gens(c.ws);
    c.zero(g.foo - c.k(1) * c.sq(g.f) - c.k(1) * bracketLeft(c.ws.ring, g.f[1], g.f));
  });
  return out;
}

CheckList corSerreChecks(const Workspace&) {
  CheckList out;
  add(out, "akufv", "", [](Ctx& c) {
    auto g = gens(c.ws);
    BS inner = c.k(kThird) * c.dq(g.f, c.k(kHalf), 0) + c.k(2 * kThird) * c.dq(g.f, c.k(-1), 0);
    c.zero(c.br(c.U(g.k), c.V(g.f)) - c.mul(c.U(g.k), inner));
  });
  add(out, "woeiei", "", [](Ctx& c) {
    auto g = gens(c.ws);
    BS rhs = c.k(-1) * c.brLeft(g.e[1], c.dq(g.e)) + c.k(kHalf) * swapQuotient(c, g.e) -
             c.k(kHalf) * squareQuotient(c, g.e);
    c.zero(c.br(c.U(g.e), c.V(g.e)) - rhs);
  });
  add(out, "wofifi", "", [](Ctx& c) {
    auto g = gens(c.ws);
    BS rhs = c.k(-1) * c.brLeft(g.f[1], c.dq(g.f)) - c.k(kHalf) * swapQuotient(c, g.f) -
             c.k(kHalf) * squareQuotient(c, g.f);
    c.zero(c.br(c.U(g.f), c.V(g.f)) - rhs);
  });
  add(out, "serreacfr", "", [](Ctx& c) {
    auto g = gens(c.ws);
    const Poly& e1 = g.e[1];
    PS rhs = c.k(1) * c.mul(g.e, bracketRight(c.ws.ring, g.e, e1)) +
             c.k(1) * bracketLeft(c.ws.ring, c.mul(e1, e1), g.e);
    c.zero(c.mul(c.sq(g.e), g.e) - rhs);
  });
  add(out, "aserreacfrf", "", [](Ctx& c) {
    auto g = gens(c.ws);
    const Poly& f1 = g.f[1];
    PS rhs = c.k(-1) * c.mul(g.f, bracketRight(c.ws.ring, g.f, f1)) +
             c.k(1) * bracketLeft(c.ws.ring, c.mul(f1, f1), g.f);
    c.zero(c.mul(c.sq(g.f), g.f) - rhs);
  });
  add(out, "serreacfrf", "", [](Ctx& c) {
    auto g = gens(c.ws);
    const Poly& f1 = g.f[1];
    PS rhs = c.k(1) * c.mul(bracketRight(c.ws.ring, g.f, f1), g.f) -
             c.k(1) * bracketLeft(c.ws.ring, c.mul(f1, f1), g.f);
    c.zero(c.mul(c.sq(g.f), g.f) - rhs);
  });
  return out;
}

CheckList lemSigaussChecks(const Workspace&) {
  CheckList out;
  add(out, "sigauss", "k", [](Ctx& c) {
    auto g = gens(c.ws);
    c.zero(c.ws.sigma().apply(g.k) - c.k(1) * reflect(g.k));
  });
  add(out, "sigauss", "e", [](Ctx& c) {
    auto g = gens(c.ws);
    c.zero(c.ws.sigma().apply(g.e) - c.k(1) * reflect(g.f));
  });
  add(out, "sigauss", "f", [](Ctx& c) {
    auto g = gens(c.ws);
    c.zero(c.ws.sigma().apply(g.f) + c.k(1) * reflect(g.e));
  });
  return out;
}

namespace {

TSeries onesT(int order) { return constantSeries(TensorPoly(Rational(1)), order); }
PS onesP(int order) { return constantSeries(Poly(Rational(1)), order); }

TSeries geometric(const TensorRing& tr, const TSeries& x, int terms, bool xFirst, const TSeries& y) {
  // sum_{r=0..terms} (-1)^r x^r, multiplied onto y from the requested side.
  TSeries sum = onesT(x.order());
  TSeries pow = onesT(x.order());
  for (int r = 1; r <= terms; ++r) {
    pow = mul(tr, pow, x);
    sum = sum + Rational(r % 2 ? -1 : 1) * pow;
  }
  return xFirst ? mul(tr, sum, y) : mul(tr, y, sum);
}

}  // namespace

CheckList propCoprChecks(const Workspace& ws) {
  CheckList out;
  add(out, "copr", "e", [](Ctx& c) {
    const int d = std::min(c.D, 3);
    auto g = gens(c.ws);
    const TensorRing& tr = c.ws.delta().ring();
    PS e = g.e.truncated(d), f = g.f.truncated(d), eoo = g.eoo.truncated(d), foo = g.foo.truncated(d),
       k = g.k.truncated(d);
    PS fp = c.sh(f, c.k(1));
    TSeries x = tensorSeries(e, fp) + tensorSeries(eoo, c.sh(foo, c.k(1)) - c.k(2) * c.sq(c.sh(f, c.k(1))));
    TSeries y = tensorSeries(e, onesP(d)) +
                tensorSeries(eoo, c.k(kThird) * c.sh(f, c.k(-kHalf)) + c.k(2 * kThird) * c.sh(f, c.k(1)));
    TSeries tail = mul(tr, y, tensorSeries(onesP(d), k));
    TSeries rhs = tensorSeries(onesP(d), e) + geometric(tr, x, (d + 1) / 2, true, tail);
    c.zero(c.ws.delta().apply(e) - rhs);
  });
  add(out, "copr", "f", [](Ctx& c) {
    const int d = std::min(c.D, 3);
    auto g = gens(c.ws);
    const TensorRing& tr = c.ws.delta().ring();
    PS e = g.e.truncated(d), f = g.f.truncated(d), eoo = g.eoo.truncated(d), foo = g.foo.truncated(d),
       k = g.k.truncated(d);
    PS ep = c.sh(e, c.k(1));
    TSeries w = tensorSeries(ep, f) + tensorSeries(c.sh(eoo, c.k(1)) + c.k(2) * c.sq(c.sh(e, c.k(1))), foo);
    TSeries head = tensorSeries(onesP(d), f) -
                   tensorSeries(c.k(kThird) * c.sh(e, c.k(-kHalf)) + c.k(2 * kThird) * c.sh(e, c.k(1)), foo);
    head = mul(tr, tensorSeries(k, onesP(d)), head);
    TSeries rhs = tensorSeries(f, onesP(d)) + geometric(tr, w, (d + 1) / 2, false, head);
    c.zero(c.ws.delta().apply(f) - rhs);
  });
  const int level = std::min(ws.order, 4);
  for (const auto& [fam, pairs] : tableFamilies(ws.alg, level)) {
    add(out, "delta-table", familyName(fam), [fam, pairs](Ctx& c) {
      const Algebra& alg = c.ws.alg;
      for (auto [r, s] : pairs) {
        Poly lhs = superCommutator(alg.t(fam[0], fam[1], r), alg.t(fam[2], fam[3], s));
        const Poly& rhs = alg.commutatorTable(fam[0], fam[1], fam[2], fam[3], r, s);
        c.zero(c.ws.delta().apply(lhs) - c.ws.delta().apply(rhs),
               "r=" + std::to_string(r) + ",s=" + std::to_string(s));
      }
    });
  }
  add(out, "delta-central", "", [](Ctx& c) {
    const int d = std::min(c.D, 3);
    auto raw = rawCentralLetters(c.ws.alg, d);
    for (int r = 1; r <= d; ++r) {
      TensorPoly expect;
      for (int a = 0; a <= r; ++a) {
        Poly l = a == 0 ? Poly(Rational(1)) : c.ws.alg.c(a);
        Poly rr = a == r ? Poly(Rational(1)) : c.ws.alg.c(r - a);
        expect = expect + TensorPoly::tensor(l, rr);
      }
      c.zero(c.ws.delta().apply(raw[r - 1]) - expect, "r=" + std::to_string(r));
    }
  });
  return out;
}

// Shared with the morphism suite.
CheckList tableMorphismChecks(const Workspace& ws, int level) {
  CheckList out;
  for (const auto& [fam, pairs] : tableFamilies(ws.alg, level)) {
    for (const char* which : {"sigma", "tau"}) {
      const bool isSigma = which[0] == 's';
      add(out, std::string(which) + "-table", familyName(fam), [fam, pairs, isSigma](Ctx& c) {
        const Algebra& alg = c.ws.alg;
        const Morphism& phi = isSigma ? c.ws.sigma() : c.ws.tau();
        for (auto [r, s] : pairs) {
          Poly lhs = superCommutator(alg.t(fam[0], fam[1], r), alg.t(fam[2], fam[3], s));
          const Poly& rhs = alg.commutatorTable(fam[0], fam[1], fam[2], fam[3], r, s);
          c.zero(phi.apply(lhs) - phi.apply(rhs), "r=" + std::to_string(r) + ",s=" + std::to_string(s));
        }
      });
    }
  }
  return out;
}

}  // namespace yangian::detail
