#include "suite_impl.hpp"

namespace yangian::detail {

namespace {

const Rational kHalf(1, 2);
const Rational kThird(1, 3);
const Rational kThreeHalves(3, 2);

void add(CheckList& out, std::string id, std::string indices, std::function<void(Ctx&)> body) {
  out.push_back(CheckDef{std::move(id), std::move(indices), std::move(body), std::nullopt, nullptr});
}

const PS& ei(const Workspace& ws, int i) { return ws.e(i, i + 1); }
const PS& fi(const Workspace& ws, int i) { return ws.f(i + 1, i); }
const PS& emm(const Workspace& ws) { return ws.e(ws.m, ws.m + 2); }
const PS& fmm(const Workspace& ws) { return ws.f(ws.m + 2, ws.m); }

PS bl(const Ctx& c, const Poly& p, const PS& s) { return bracketLeft(c.ws.ring, p, s); }
PS brr(const Ctx& c, const PS& s, const Poly& p) { return bracketRight(c.ws.ring, s, p); }

BS swapQuotient(Ctx& c, const PS& x) { return c.mul(c.dq(x), c.V(x)) - c.mul(c.V(x), c.dq(x)); }
BS squareQuotient(Ctx& c, const PS& x) { return c.mul(c.dq(x), c.dq(x)); }

}  // namespace

CheckList ospl4Checks(const Workspace&) {
  CheckList out;
  add(out, "commu", "", [](Ctx& c) {
    const auto& w = c.ws;
    PS rhs = c.k(1) * c.mul(w.e(1, 2), w.e(2, 4)) - c.k(1) * w.e(1, 4) - c.k(1) * w.e(2, 5);
    c.zero(bl(c, w.e(1, 2)[1], w.e(2, 4)) - rhs);
  });
  add(out, "idetr", "", [](Ctx& c) {
    const auto& w = c.ws;
    PS rhs = c.k(1) * c.sh(w.e(1, 4), c.k(-kThreeHalves)) -
             c.k(1) * c.mul(w.e(2, 3), c.sh(w.e(1, 3), c.k(-kThreeHalves))) -
             c.k(1) * c.mul(w.e(2, 4), c.sh(w.e(1, 2), c.k(-kThreeHalves)));
    c.zero(w.e(2, 5) - rhs);
  });
  add(out, "reid", "1", [](Ctx& c) {
    const auto& w = c.ws;
    PS rhs = c.k(1) * c.mul(w.e(1, 2), w.e(2, 4)) - c.k(1) * w.e(1, 4) -
             c.k(1) * c.sh(w.e(1, 4), c.k(-kThreeHalves)) +
             c.k(1) * c.mul(w.e(2, 3), c.sh(w.e(1, 3), c.k(-kThreeHalves))) +
             c.k(1) * c.mul(w.e(2, 4), c.sh(w.e(1, 2), c.k(-kThreeHalves)));
    c.zero(bl(c, w.e(1, 2)[1], w.e(2, 4)) - rhs);
  });
  add(out, "reid", "2", [](Ctx& c) {
    const auto& w = c.ws;
    BS rhs = c.k(-1) * c.mul(c.dq(w.e(1, 2)), c.V(w.e(2, 4))) + c.k(1) * c.dq(w.e(1, 4)) +
             c.k(1) * c.dq(w.e(1, 4), 0, c.k(-kThreeHalves)) -
             c.k(1) * c.mul(c.V(w.e(2, 3)), c.dq(w.e(1, 3), 0, c.k(-kThreeHalves))) -
             c.k(1) * c.mul(c.V(w.e(2, 4)), c.dq(w.e(1, 2), 0, c.k(-kThreeHalves)));
    c.zero(c.br(c.U(w.e(1, 2)), c.V(w.e(2, 4))) - rhs);
  });
  add(out, "paret", "", [](Ctx& c) {
    const auto& w = c.ws;
    c.zero(bl(c, w.e(2, 4)[1], w.e(1, 2)) - c.k(2) * w.e(1, 4));
  });
  return out;
}

CheckList thmDpChecks(const Workspace& ws) {
  CheckList out;
  const int m = ws.m;
  for (int i = 1; i <= m + 1; ++i) {
    for (int j = 1; j <= m + 1; ++j) {
      add(out, "hihj", idx({{"i", i}, {"j", j}}), [i, j](Ctx& c) {
        c.zero(c.br(c.U(c.ws.h(i)), c.V(c.ws.h(j))));
      });
    }
  }
  for (int i = 1; i <= m; ++i) {
    for (int j = 1; j <= m; ++j) {
      add(out, "eifj", idx({{"i", i}, {"j", j}}), [i, j](Ctx& c) {
        BS res = c.br(c.U(ei(c.ws, i)), c.V(fi(c.ws, j)));
        if (i == j) res = res - c.k(signOf(c.ws.alg.index().bar(i + 1))) * c.dq(c.ws.k[i - 1]);
        c.zero(res);
      });
    }
  }
  for (int i = 1; i <= m + 1; ++i) {
    for (int j = 1; j <= m; ++j) {
      if (i == m + 1 && j == m) continue;
      add(out, "hiej", idx({{"i", i}, {"j", j}}), [i, j](Ctx& c) {
        const Rational a = c.k(-c.ws.roots.epsAlpha(i, j));
        c.zero(c.br(c.U(c.ws.h(i)), c.V(ei(c.ws, j))) - a * c.mul(c.U(c.ws.h(i)), c.dq(ei(c.ws, j))));
      });
      add(out, "hifj", idx({{"i", i}, {"j", j}}), [i, j](Ctx& c) {
        const Rational a = c.k(c.ws.roots.epsAlpha(i, j));
        c.zero(c.br(c.U(c.ws.h(i)), c.V(fi(c.ws, j))) - a * c.mul(c.dq(fi(c.ws, j)), c.U(c.ws.h(i))));
      });
    }
  }
  add(out, "mohtej", "", [](Ctx& c) {
    const int m = c.ws.m;
    const PS& e = ei(c.ws, m);
    BS inner = c.k(1) * c.dq(e) - c.k(1) * c.dq(e, c.k(-kHalf), 0);
    c.zero(c.br(c.U(c.ws.h(m + 1)), c.V(e)) - c.mul(c.U(c.ws.h(m + 1)), inner));
  });
  add(out, "mohtfj", "", [](Ctx& c) {
    const int m = c.ws.m;
    const PS& f = fi(c.ws, m);
    BS inner = c.k(-1) * c.dq(f) + c.k(1) * c.dq(f, c.k(-kHalf), 0);
    c.zero(c.br(c.U(c.ws.h(m + 1)), c.V(f)) - c.mul(inner, c.U(c.ws.h(m + 1))));
  });
  for (int i = 1; i < m; ++i) {
    add(out, "eiei", idx({{"i", i}}), [i](Ctx& c) {
      const PS& e = ei(c.ws, i);
      c.zero(c.br(c.U(e), c.V(e)) - c.k(-1) * c.mul(c.dq(e), c.U(e) - c.V(e)));
    });
    add(out, "fifi", idx({{"i", i}}), [i](Ctx& c) {
      const PS& f = fi(c.ws, i);
      c.zero(c.br(c.U(f), c.V(f)) - c.k(1) * c.mul(c.dq(f), c.U(f) - c.V(f)));
    });
  }
  add(out, "moeiei", "", [](Ctx& c) {
    const PS& e = ei(c.ws, c.ws.m);
    BS rhs = c.k(1) * c.dq(c.sq(e) + c.k(1) * emm(c.ws)) + c.k(kHalf) * swapQuotient(c, e) -
             c.k(kHalf) * squareQuotient(c, e);
    c.zero(c.br(c.U(e), c.V(e)) - rhs);
  });
  add(out, "mofifi", "", [](Ctx& c) {
    const PS& f = fi(c.ws, c.ws.m);
    BS rhs = c.k(1) * c.dq(c.sq(f) - c.k(1) * fmm(c.ws)) - c.k(kHalf) * swapQuotient(c, f) -
             c.k(kHalf) * squareQuotient(c, f);
    c.zero(c.br(c.U(f), c.V(f)) - rhs);
  });
  for (int i = 1; i <= m; ++i) {
    for (int j = i + 1; j <= m; ++j) {
      add(out, "eiej", idx({{"i", i}, {"j", j}}), [i, j](Ctx& c) {
        const PS& a = ei(c.ws, i);
        const PS& b = ei(c.ws, j);
        BS lhs = c.br(c.U(strictTail(a)), c.V(b)).monomialMultiply(1, 0) -
                 c.br(c.U(a), c.V(strictTail(b))).monomialMultiply(0, 1);
        c.zero(lhs + c.k(c.ws.roots.alphaForm(i, j)) * c.mul(c.U(a), c.V(b)));
      });
      add(out, "fifj", idx({{"i", i}, {"j", j}}), [i, j](Ctx& c) {
        const PS& a = fi(c.ws, i);
        const PS& b = fi(c.ws, j);
        BS lhs = c.br(c.U(strictTail(a)), c.V(b)).monomialMultiply(1, 0) -
                 c.br(c.U(a), c.V(strictTail(b))).monomialMultiply(0, 1);
        c.zero(lhs - c.k(c.ws.roots.alphaForm(i, j)) * c.mul(c.V(b), c.U(a)));
      });
    }
  }
  add(out, "moeieoo", "", [](Ctx& c) {
    const PS& e = ei(c.ws, c.ws.m);
    const PS& eo = emm(c.ws);
    const Rational a = c.k(kHalf);
    BS rhs = c.k(-1) * c.mul(c.dq(e), c.U(eo) - c.V(eo)) - c.k(1) * c.mul(c.dq(e, a, 0), c.U(c.sq(e))) -
             c.k(1) * c.mul(c.dq(eo, c.k(kHalf), 0), c.U(e));
    c.zero(c.br(c.U(e), c.V(eo)) - rhs);
  });
  add(out, "mofifoo", "", [](Ctx& c) {
    const PS& f = fi(c.ws, c.ws.m);
    const PS& fo = fmm(c.ws);
    const Rational a = c.k(kHalf);
    BS rhs = c.k(1) * c.mul(c.dq(fo), c.U(f) - c.V(f)) - c.k(1) * c.mul(c.U(c.sq(f)), c.dq(f, a, 0)) +
             c.k(1) * c.mul(c.U(f), c.dq(fo, c.k(kHalf), 0));
    c.zero(c.br(c.U(f), c.V(fo)) - rhs);
  });
  if (m >= 2) {
    add(out, "emne", "", [](Ctx& c) {
      const int m = c.ws.m;
      const PS& a = ei(c.ws, m - 1);
      const PS& em = ei(c.ws, m);
      const PS& eo = emm(c.ws);
      PS as = c.sh(a, c.k(-kThreeHalves));
      PS rhs = c.k(1) * c.mul(a, eo) + c.k(1) * c.mul(eo, as) + c.k(1) * c.mul(em, bl(c, em[1], as)) -
               c.k(kHalf) * bl(c, eo[1], a + c.sh(a, c.k(-kThreeHalves)));
      c.zero(bl(c, a[1], eo) - rhs);
    });
    add(out, "fmne", "", [](Ctx& c) {
      const int m = c.ws.m;
      const PS& b = fi(c.ws, m - 1);
      const PS& fm = fi(c.ws, m);
      const PS& fo = fmm(c.ws);
      PS bs = c.sh(b, c.k(-kThreeHalves));
      PS rhs = c.k(-1) * c.mul(fo, b) - c.k(1) * c.mul(bs, fo) - c.k(1) * c.mul(bl(c, fm[1], bs), fm) -
               c.k(kHalf) * bl(c, fo[1], b + c.sh(b, c.k(-kThreeHalves)));
      c.zero(bl(c, b[1], fo) - rhs);
    });
  }
  for (int i = 1; i <= m; ++i) {
    for (int j = 1; j <= m; ++j) {
      if (i == j) continue;
      const int k = ws.roots.serreOrder(i, j);
      add(out, "eSerre", idx({{"i", i}, {"j", j}, {"k", k}}),
          [i, j, k](Ctx& c) { serreResidues(c, ei(c.ws, i), ei(c.ws, j), k); });
      add(out, "fSerre", idx({{"i", i}, {"j", j}, {"k", k}}),
          [i, j, k](Ctx& c) { serreResidues(c, fi(c.ws, i), fi(c.ws, j), k); });
    }
  }
  return out;
}

CheckList corModpyChecks(const Workspace& ws) {
  CheckList out;
  const int m = ws.m;
  auto kap = [](const Ctx& c, int i) -> const PS& { return c.ws.xi.kappa[i - 1]; };
  auto xi = [](const Ctx& c, int sign, int i) -> const PS& {
    return sign > 0 ? c.ws.xi.xiPlus[i - 1] : c.ws.xi.xiMinus[i - 1];
  };
  auto xiLong = [](const Ctx& c, int sign) -> const PS& { return sign > 0 ? c.ws.xi.xiPlusLong : c.ws.xi.xiMinusLong; };
  const char* pm[] = {"-", "+"};

  for (int i = 1; i <= m; ++i) {
    for (int j = 1; j <= m; ++j) {
      add(out, "kikj", idx({{"i", i}, {"j", j}}), [=](Ctx& c) { c.zero(c.br(c.U(kap(c, i)), c.V(kap(c, j)))); });
    }
  }
  for (int i = 1; i <= m; ++i) {
    for (int j = 1; j <= m; ++j) {
      add(out, "xpixmj", idx({{"i", i}, {"j", j}}), [=](Ctx& c) {
        BS res = c.br(c.U(xi(c, 1, i)), c.V(xi(c, -1, j)));
        if (i == j) res = res + c.k(1) * c.dq(kap(c, i));
        c.zero(res);
      });
    }
  }
  for (int sign : {1, -1}) {
    const std::string s = pm[sign > 0];
    for (int i = 1; i <= m; ++i) {
      for (int j = 1; j <= m; ++j) {
        if (i == m && j == m) continue;
        add(out, "kixpj", idx({{"i", i}, {"j", j}}) + ",sign=" + s, [=](Ctx& c) {
          const Rational a = c.k(Rational(-sign, 2) * c.ws.roots.alphaForm(i, j));
          const PS& x = xi(c, sign, j);
          BS rhs = a * (c.mul(c.U(kap(c, i)), c.dq(x)) + c.mul(c.dq(x), c.U(kap(c, i))));
          c.zero(c.br(c.U(kap(c, i)), c.V(x)) - rhs);
        });
        if (j < i) continue;
        add(out, "xpixpj", idx({{"i", i}, {"j", j}}) + ",sign=" + s, [=](Ctx& c) {
          const Rational a = c.k(Rational(-sign, 2) * c.ws.roots.alphaForm(i, j));
          const PS& x = xi(c, sign, i);
          const PS& y = xi(c, sign, j);
          BS diff = c.U(y) - c.V(y);
          BS rhs = a * (c.mul(c.dq(x), diff) + c.mul(diff, c.dq(x)));
          c.zero(c.br(c.U(x), c.V(y)) + c.br(c.U(y), c.V(x)) - rhs);
        });
      }
    }
  }
  add(out, "mkufv", "", [](Ctx& c) {
    const int m = c.ws.m;
    const PS& x = c.ws.xi.xiPlus[m - 1];
    const PS& kp = c.ws.xi.kappa[m - 1];
    BS inner = c.k(kThird) * c.dq(x, c.k(-kHalf), 0) + c.k(2 * kThird) * c.dq(x, c.k(1), 0);
    c.zero(c.br(c.U(kp), c.V(x)) - c.mul(inner, c.U(kp)));
  });
  add(out, "mkuev", "", [](Ctx& c) {
    const int m = c.ws.m;
    const PS& x = c.ws.xi.xiMinus[m - 1];
    const PS& kp = c.ws.xi.kappa[m - 1];
    BS inner = c.k(-kThird) * c.dq(x, c.k(-kHalf), 0) - c.k(2 * kThird) * c.dq(x, c.k(1), 0);
    c.zero(c.br(c.U(kp), c.V(x)) - c.mul(c.U(kp), inner));
  });
  for (int sign : {1, -1}) {
    add(out, "mmoeiei", std::string("sign=") + pm[sign > 0], [=](Ctx& c) {
      const PS& x = xi(c, sign, c.ws.m);
      BS rhs = c.k(1) * c.dq(c.sq(x) - c.k(1) * xiLong(c, sign)) + c.k(Rational(-sign, 2)) * swapQuotient(c, x) -
               c.k(kHalf) * squareQuotient(c, x);
      c.zero(c.br(c.U(x), c.V(x)) - rhs);
    });
  }
  add(out, "mmofifoo", "", [](Ctx& c) {
    const PS& x = c.ws.xi.xiPlus[c.ws.m - 1];
    const PS& l = c.ws.xi.xiPlusLong;
    const Rational a = c.k(kHalf);
    BS rhs = c.k(1) * c.mul(c.dq(l), c.U(x) - c.V(x)) - c.k(1) * c.mul(c.U(c.sq(x)), c.dq(x, a, 0)) +
             c.k(1) * c.mul(c.U(x), c.dq(l, c.k(kHalf), 0));
    c.zero(c.br(c.U(x), c.V(l)) - rhs);
  });
  add(out, "mmoeieoo", "", [](Ctx& c) {
    const PS& x = c.ws.xi.xiMinus[c.ws.m - 1];
    const PS& l = c.ws.xi.xiMinusLong;
    const Rational a = c.k(kHalf);
    BS rhs = c.k(-1) * c.mul(c.dq(x), c.U(l) - c.V(l)) + c.k(1) * c.mul(c.dq(x, a, 0), c.U(c.sq(x))) -
             c.k(1) * c.mul(c.dq(l, c.k(kHalf), 0), c.U(x));
    c.zero(c.br(c.U(x), c.V(l)) - rhs);
  });
  if (m >= 2) {
    add(out, "xifmne", "", [](Ctx& c) {
      const int m = c.ws.m;
      const PS& a = c.ws.xi.xiPlus[m - 2];
      const PS& xm = c.ws.xi.xiPlus[m - 1];
      const PS& l = c.ws.xi.xiPlusLong;
      const Poly& x0 = xm[1];
      PS ah = c.sh(a, c.k(kHalf));
      PS a1 = c.sh(a, c.k(-1));
      PS rhs = c.k(-1) * c.mul(l, ah) - c.k(1) * bl(c, c.mul(x0, x0), c.sh(a, c.k(kHalf)) + c.sh(a, c.k(-1))) -
               c.k(1) * c.mul(bl(c, x0, a1), xm) - c.k(1) * c.mul(a1, l);
      c.zero(bl(c, a[1], l) - rhs);
    });
    add(out, "xiemne", "", [](Ctx& c) {
      const int m = c.ws.m;
      const PS& a = c.ws.xi.xiMinus[m - 2];
      const PS& xm = c.ws.xi.xiMinus[m - 1];
      const PS& l = c.ws.xi.xiMinusLong;
      const Poly& x0 = xm[1];
      PS ah = c.sh(a, c.k(kHalf));
      PS a1 = c.sh(a, c.k(-1));
      PS rhs = c.k(1) * c.mul(ah, l) - c.k(1) * bl(c, c.mul(x0, x0), c.sh(a, c.k(kHalf)) + c.sh(a, c.k(-1))) -
               c.k(1) * c.mul(xm, bl(c, x0, a1)) + c.k(1) * c.mul(l, a1);
      c.zero(bl(c, a[1], l) - rhs);
    });
  }
  for (int sign : {1, -1}) {
    for (int i = 1; i <= m; ++i) {
      for (int j = 1; j <= m; ++j) {
        if (i == j) continue;
        const int k = ws.roots.serreOrder(i, j);
        add(out, "Serrexipm", idx({{"i", i}, {"j", j}, {"k", k}}) + ",sign=" + pm[sign > 0],
            [=](Ctx& c) { serreResidues(c, xi(c, sign, i), xi(c, sign, j), k); });
      }
    }
  }
  return out;
}

CheckList derivedLadderChecks(const Workspace& ws) {
  CheckList out;
  const int m = ws.m;
  for (int j = 1; j <= m; ++j) {
    for (int i = 1; i < j; ++i) {
      add(out, "tijto", idx({{"i", i}, {"j", j}}), [i, j](Ctx& c) {
        const Poly& t1 = c.ws.alg.tNormal(j, j + 1, 1);
        c.zero(brr(c, c.ws.T(i, j), t1) + c.k(1) * c.ws.T(i, j + 1));
      });
    }
    for (int i = 1; i <= j; ++i) {
      add(out, "tjjp", idx({{"i", i}, {"j", j}}), [i, j](Ctx& c) {
        const Poly& t1 = c.ws.alg.tNormal(j, j + 1, 1);
        c.zero(bl(c, t1, c.ws.T(i, c.ws.prime(j + 1))) + c.k(1) * c.ws.T(i, c.ws.prime(j)));
      });
    }
    for (int i = 1; i < j; ++i) {
      add(out, "eijoop", idx({{"i", i}, {"j", j}}) + ",form=1", [i, j](Ctx& c) {
        c.zero(brr(c, c.ws.e(i, j), c.ws.e(j, j + 1)[1]) + c.k(1) * c.ws.e(i, j + 1));
      });
      add(out, "eijoop", idx({{"i", i}, {"j", j}}) + ",form=2", [i, j](Ctx& c) {
        c.zero(bl(c, c.ws.e(j, j + 1)[1], c.ws.e(i, c.ws.prime(j + 1))) + c.k(1) * c.ws.e(i, c.ws.prime(j)));
      });
    }
  }
  for (int i = 1; i <= m; ++i) {
    add(out, "eiipp", idx({{"i", i}}), [i](Ctx& c) {
      const auto& w = c.ws;
      const PS& a = w.e(i, w.prime(i + 1));
      c.zero(bl(c, w.e(i, i + 1)[1], a) + c.k(1) * w.e(i, w.prime(i)) + c.k(1) * c.mul(w.e(i, i + 1), a));
    });
  }
  return out;
}

}  // namespace yangian::detail
