#pragma once

#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "yangian/gauss.hpp"
#include "yangian/morphisms.hpp"
#include "yangian/roots.hpp"
#include "yangian/suites.hpp"

namespace yangian::detail {

using PS = PSeries;
using BS = PBiSeries;

// Everything a check reads, built once per (algebra, order).
class Workspace {
 public:
  Workspace(const Algebra& alg, int order, std::uint64_t seed);

  const Algebra& alg;
  NormalRing ring;
  int m;
  int order;
  std::uint64_t seed;
  RootData roots;
  PMatrix T;  // normal form
  GaussData g;
  std::vector<PS> k;  // k[i-1] = h_i^{-1} h_{i+1}
  PS c;               // central letters
  PS z;
  XiData xi;

  const PS& h(int i) const { return g.h(i); }
  const PS& e(int i, int j) const { return g.e(i, j); }
  const PS& f(int j, int i) const { return g.f(j, i); }
  int prime(int i) const { return alg.index().prime(i); }

  const Morphism& sigma() const;
  const Morphism& tau() const;
  const Coproduct& delta() const;

 private:
  mutable std::once_flag sigmaOnce_, tauOnce_, deltaOnce_;
  mutable std::unique_ptr<Morphism> sigma_, tau_;
  mutable std::unique_ptr<Coproduct> delta_;
};

// Evaluation context of one check: series primitives, the perturbation hook
// and residue bookkeeping.
class Ctx {
 public:
  Ctx(const Workspace& ws, std::optional<int> perturb) : ws(ws), D(ws.order), perturb_(perturb) {}

  const Workspace& ws;
  const int D;

  // Every explicit constant of a relation goes through here.
  Rational k(const Rational& value);
  int constants() const { return count_; }

  // One-variable series as functions of u or v.
  BS U(const PS& s) const { return fromU(s); }
  BS V(const PS& s) const { return fromV(s); }
  // (g(u + a) - g(v + b)) / (u + a - v - b).
  BS dq(const PS& g, const Rational& a = 0, const Rational& b = 0) const { return diffQuotient(g, a, b, D + 1); }
  BS mul(const BS& a, const BS& b) const { return biMul(ws.ring, a, b, D + 1); }
  BS br(const BS& a, const BS& b) const { return biCommutator(ws.ring, a, b, D + 1); }
  BS anti(const BS& a, const BS& b) const { return mul(a, b) + mul(b, a); }
  // [p, s(u, v)] coefficientwise.
  BS brLeft(const Poly& p, const BS& s) const;

  PS mul(const PS& a, const PS& b) const { return yangian::mul(ws.ring, a, b); }
  PS br(const PS& a, const PS& b) const { return superCommutator(ws.ring, a, b); }
  PS sq(const PS& a) const { return mul(a, a); }
  PS inv(const PS& a) const { return invert(ws.ring, a); }
  PS sh(const PS& a, const Rational& c) const { return shift(a, c); }
  Poly mul(const Poly& a, const Poly& b) const { return ws.alg.mul(a, b); }
  Poly br(const Poly& a, const Poly& b) const { return ws.alg.bracket(a, b); }

  // Residues that must vanish.
  void zero(const BS& r);
  void zero(const PS& r);
  void zero(const Poly& r, const std::string& where = "");
  void zero(const TSeries& r);
  void zero(const TensorPoly& r, const std::string& where = "");
  // Records a failure that is not a residue (for example a count mismatch).
  void fail(const std::string& message);

  std::size_t terms() const { return terms_; }
  std::size_t coefficients() const { return coefficients_; }
  bool failed() const { return failed_; }
  const std::string& detail() const { return detail_; }

 private:
  void record(std::size_t terms, const std::string& where, const std::string& value);

  std::optional<int> perturb_;
  int count_ = 0;
  std::size_t terms_ = 0;
  std::size_t coefficients_ = 0;
  bool failed_ = false;
  std::string detail_;
};

struct CheckDef {
  std::string id;
  std::string indices;
  std::function<void(Ctx&)> body;
  // Negative control: constant to perturb and a workspace over a broken algebra.
  std::optional<int> perturb;
  const Workspace* ws = nullptr;
};

using CheckList = std::vector<CheckDef>;

// Check families per suite.
CheckList thmOdpChecks(const Workspace& ws);
CheckList corOdpyChecks(const Workspace& ws);
CheckList corSerreChecks(const Workspace& ws);
CheckList lemSigaussChecks(const Workspace& ws);
CheckList propCoprChecks(const Workspace& ws);
CheckList ospl4Checks(const Workspace& ws);
CheckList thmDpChecks(const Workspace& ws);
CheckList corModpyChecks(const Workspace& ws);
CheckList derivedLadderChecks(const Workspace& ws);
CheckList gaussCoreChecks(const Workspace& ws);
CheckList rttSanityChecks(const Workspace& ws);
CheckList embeddingChecks(const Workspace& ws);
CheckList pbwChecks(const Workspace& ws);
CheckList morphismChecks(const Workspace& ws);
// sigma and tau applied to every table family with r + s <= level.
CheckList tableMorphismChecks(const Workspace& ws, int level);

// Symmetrized nested brackets sum_sigma [x_{r_sigma(1)}, [..., [x_{r_sigma(k)}, y]]]
// for every sorted tuple r with |r| + s <= D + k; one residue per tuple.
void serreResidues(Ctx& c, const PS& x, const PS& y, int k);

std::string idx(std::initializer_list<std::pair<const char*, int>> items);

}  // namespace yangian::detail
