#include "coadm/limits.hpp"

#include <algorithm>

namespace coadm {

Op CtSystem::transition(int from, int to) const {
  if (from > to) throw Error("CtSystem::transition: wrong direction");
  Op t = Op::identity(levels[from]->space);
  for (int n = from; n < to; ++n) t = transitions[n].compose(t);
  return t;
}

CtSystem CtSystem::window(int d) const {
  if (d > depth()) throw Error("CtSystem::window: not enough levels");
  CtSystem w;
  w.levels.assign(levels.begin(), levels.begin() + d);
  w.transitions.assign(transitions.begin(), transitions.begin() + (d - 1));
  w.name = name + "[1.." + std::to_string(d) + "]";
  return w;
}

NfSystem NfSystem::window(int d) const {
  if (d > depth()) throw Error("NfSystem::window: not enough levels");
  NfSystem w;
  w.levels.assign(levels.begin(), levels.begin() + d);
  w.transitions.assign(transitions.begin(), transitions.begin() + (d - 1));
  w.name = name + "[1.." + std::to_string(d) + "]";
  return w;
}

CtReport check_ct(const CtSystem& s, long precision, long tol_exp, long margin_exp) {
  CtReport r;
  r.pass = true;
  for (const auto& c : s.levels) {
    r.levels.push_back(check_coalgebra(*c, tol_exp));
    r.pass = r.pass && r.levels.back().pass;
  }
  for (size_t n = 0; n + 1 < s.levels.size(); ++n) {
    TransitionReport t;
    t.morphism = check_coalgebra_morphism(*s.levels[n], *s.levels[n + 1], s.transitions[n],
                                          tol_exp);
    t.injective = kernel(s.transitions[n], precision).empty();
    t.margin = s.transitions[n].compactness_margin(margin_exp);
    t.pass = t.morphism.pass && t.injective && t.margin.compact_at_truncation;
    r.pass = r.pass && t.pass;
    r.transitions.push_back(std::move(t));
  }
  return r;
}

NfReport check_nf(const NfSystem& s, long tol_exp, long margin_exp) {
  NfReport r;
  r.pass = true;
  for (const auto& a : s.levels) {
    r.levels.push_back(check_algebra(a, tol_exp));
    r.pass = r.pass && r.levels.back().pass;
  }
  for (size_t n = 0; n + 1 < s.levels.size(); ++n) {
    TransitionReport t;
    t.morphism =
        check_algebra_morphism(s.levels[n + 1], s.levels[n], s.transitions[n], tol_exp);
    t.injective = true;
    t.margin = s.transitions[n].compactness_margin(margin_exp);
    t.pass = t.morphism.pass && t.margin.compact_at_truncation;
    r.pass = r.pass && t.pass;
    r.transitions.push_back(std::move(t));
  }
  return r;
}

NfSystem dualize_ct(const CtSystem& s) {
  NfSystem d;
  d.name = s.name + "'";
  for (const auto& c : s.levels) d.levels.push_back(dual_algebra(*c));
  for (size_t n = 0; n + 1 < s.levels.size(); ++n) {
    Op t = s.transitions[n].transpose();
    // relabel (C_{n+1})' -> (C_n)' columns into the dual algebra spaces
    const auto& dom = d.levels[n + 1].space;
    const auto& cod = d.levels[n].space;
    Op t2 = Op::from_columns(dom, cod, [&](int i) { return Vec(cod, t.column(i).coeffs()); });
    d.transitions.push_back(t2.with_uniform_tail(t.tail()));
  }
  return d;
}

CtSystem dualize_nf(const NfSystem& s) {
  CtSystem d;
  d.name = s.name + "^o";
  for (const auto& a : s.levels)
    d.levels.push_back(std::make_shared<Coalgebra>(dual_coalgebra(a)));
  for (size_t n = 0; n + 1 < s.levels.size(); ++n) {
    Op t = s.transitions[n].transpose();  // (A_n)' -> (A_{n+1})'
    const auto& dom = d.levels[n]->space;
    const auto& cod = d.levels[n + 1]->space;
    Op t2 = Op::from_columns(dom, cod, [&](int i) { return Vec(cod, t.column(i).coeffs()); });
    d.transitions.push_back(t2.with_uniform_tail(t.tail()));
  }
  return d;
}

SystemComparison compare_ct(const CtSystem& a, const CtSystem& b, long tol_exp) {
  SystemComparison r;
  if (a.depth() != b.depth()) {
    r.pass = false;
    DefectReport d;
    d.law = "levelwise-comparison";
    d.status = CheckStatus::Fail;
    d.witness = "depth mismatch";
    r.defects.push_back(std::move(d));
    return r;
  }
  r.pass = true;
  for (int n = 0; n < a.depth(); ++n) {
    const auto& ca = *a.levels[n];
    const auto& cb = *b.levels[n];
    // read b's operators in a's spaces: geometry must agree
    Op cmb = Op::from_columns(ca.space, ca.square(),
                              [&](int i) { return Vec(ca.square(), cb.comult.column(i).coeffs()); });
    Op epsb = Op::from_columns(ca.space, ca.counit.codomain(), [&](int i) {
      return Vec(ca.counit.codomain(), cb.counit.column(i).coeffs());
    });
    r.defects.push_back(defect_report("level-" + std::to_string(n + 1) + "-comult",
                                      ca.comult - cmb, tol_exp));
    r.defects.push_back(defect_report("level-" + std::to_string(n + 1) + "-counit",
                                      ca.counit - epsb, tol_exp));
    if (n + 1 < a.depth()) {
      const auto& ta = a.transitions[n];
      Op tb = Op::from_columns(ta.domain(), ta.codomain(), [&](int i) {
        return Vec(ta.codomain(), b.transitions[n].column(i).coeffs());
      });
      r.defects.push_back(defect_report("transition-" + std::to_string(n + 1), ta - tb, tol_exp));
    }
  }
  for (const auto& d : r.defects) r.pass = r.pass && d.pass();
  return r;
}

InterleavingReport ct_equivalence(const CtSystem& s, const CtSystem& t, const Interleaving& il,
                                  long tol_exp) {
  if (il.sigma.size() != il.u.size() || il.tau.size() != il.v.size())
    throw Error("ct_equivalence: maps and reindexing sizes differ");
  InterleavingReport r;
  r.pass = true;

  for (size_t n = 0; n < il.u.size(); ++n) {
    r.u_morphisms.push_back(
        check_coalgebra_morphism(*s.levels[n], *t.levels[il.sigma[n]], il.u[n], tol_exp));
    r.pass = r.pass && r.u_morphisms.back().pass;
  }
  for (size_t n = 0; n < il.v.size(); ++n) {
    r.v_morphisms.push_back(
        check_coalgebra_morphism(*t.levels[n], *s.levels[il.tau[n]], il.v[n], tol_exp));
    r.pass = r.pass && r.v_morphisms.back().pass;
  }

  auto t_transition = [&](int from, int to) {
    Op x = Op::identity(t.levels[from]->space);
    for (int k = from; k < to; ++k) x = t.transitions[k].compose(x);
    return x;
  };

  auto square = [&](const std::string& name, const Op& lhs, const Op& rhs) {
    DefectReport d = defect_report(name, lhs - rhs, tol_exp);
    if (!d.pass())
      throw NotAnInterleaving("square " + name + " does not commute: residual " +
                              rational_str(d.residual) + (d.witness.empty() ? "" : ", " + d.witness));
    r.squares.push_back(std::move(d));
  };

  // naturality: u_{n+1}∘phi^S_n = Phi^T∘u_n
  for (size_t n = 0; n + 1 < il.u.size(); ++n)
    square("u-naturality-" + std::to_string(n + 1),
           il.u[n + 1].compose(s.transitions[n]),
           t_transition(il.sigma[n], il.sigma[n + 1]).compose(il.u[n]));
  for (size_t n = 0; n + 1 < il.v.size(); ++n)
    square("v-naturality-" + std::to_string(n + 1),
           il.v[n + 1].compose(t.transitions[n]),
           s.transition(il.tau[n], il.tau[n + 1]).compose(il.v[n]));
  // roundtrips factor through the transitions
  for (size_t n = 0; n < il.u.size(); ++n) {
    int m = il.sigma[n];
    if (m < static_cast<int>(il.v.size())) {
      int back = il.tau[m];
      if (back < static_cast<int>(n))
        throw NotAnInterleaving("tau(sigma(n)) < n at n=" + std::to_string(n));
      square("roundtrip-s-" + std::to_string(n + 1), il.v[m].compose(il.u[n]),
             s.transition(static_cast<int>(n), back));
    }
  }
  for (size_t n = 0; n < il.v.size(); ++n) {
    int m = il.tau[n];
    if (m < static_cast<int>(il.u.size())) {
      int fwd = il.sigma[m];
      if (fwd < static_cast<int>(n)) throw NotAnInterleaving("sigma(tau(n)) < n");
      square("roundtrip-t-" + std::to_string(n + 1), il.u[m].compose(il.v[n]),
             t_transition(static_cast<int>(n), fwd));
    }
  }
  return r;
}

CtSystem ct_tensor(const CtSystem& a, const CtSystem& b) {
  if (a.depth() != b.depth()) throw Error("ct_tensor: depth mismatch");
  CtSystem r;
  r.name = a.name + "(x)" + b.name;
  for (int n = 0; n < a.depth(); ++n) {
    const auto& ca = *a.levels[n];
    const auto& cb = *b.levels[n];
    auto space = Space::tensor(ca.space, cb.space);
    auto sq = Space::tensor(space, space);
    Op mid = Op::tensor(Op::tensor(Op::identity(ca.space), Op::flip(ca.space, cb.space)),
                        Op::identity(cb.space));
    Op cm = mid.compose(Op::tensor(ca.comult, cb.comult));
    Op cm2 = Op::from_columns(space, sq, [&](int i) { return Vec(sq, cm.column(i).coeffs()); });
    cm2 = cm2.with_uniform_tail(cm.tail());
    auto line = Space::line(ca.prime());
    Op eps = Op::from_columns(space, line, [&](int ij) {
      auto [i, j] = space->unflat(ij);
      return Vec::unit(line, 0).scaled(ca.counit.column(i).coeff(0) *
                                       cb.counit.column(j).coeff(0));
    });
    r.levels.push_back(
        std::make_shared<Coalgebra>(Coalgebra{space, cm2, eps, ca.name + "(x)" + cb.name}));
    if (n + 1 < a.depth()) {
      Op tr = Op::tensor(a.transitions[n], b.transitions[n]);
      const auto& dom = r.levels[n]->space;
      Op tr2 = Op::from_columns(dom, Space::tensor(a.levels[n + 1]->space, b.levels[n + 1]->space),
                                [&](int i) { return tr.column(i); });
      r.transitions.push_back(tr2.with_uniform_tail(tr.tail()));
    }
  }
  return r;
}

CtSystem mahler_ct(long p, int rank, std::vector<long> a) {
  CtSystem s;
  s.name = "mahler_ct(" + std::to_string(rank) + ")";
  for (size_t n = 0; n < a.size(); ++n) {
    std::vector<long> w;
    for (int k = 0; k < rank; ++k) w.push_back(-k * a[n]);
    s.levels.push_back(std::make_shared<Coalgebra>(mahler_coalgebra(p, rank, w)));
  }
  for (size_t n = 0; n + 1 < a.size(); ++n) {
    const auto& dom = s.levels[n]->space;
    const auto& cod = s.levels[n + 1]->space;
    Op t = Op::from_columns(dom, cod, [&](int i) { return Vec::unit(cod, i); });
    // the true inclusion keeps all higher binomials; the discarded columns
    // have ratios p^(-k(a_{n+1}-a_n)) for k >= rank
    long delta = a[n + 1] - a[n];
    if (delta <= 0) throw Error("mahler_ct: weights must strictly increase");
    Rational tail(1, pow_p(p, rank * delta));
    s.transitions.push_back(t.with_uniform_tail(tail));
  }
  return s;
}

CtSystem mahler_ct(long p, int rank, int depth) {
  std::vector<long> a;
  for (int n = 1; n <= depth; ++n) a.push_back(n);
  return mahler_ct(p, rank, a);
}

CtSystem constant_ct(const Coalgebra& c, int depth) {
  CtSystem s;
  s.name = "constant_ct(" + c.name + ")";
  auto cp = std::make_shared<Coalgebra>(c);
  for (int n = 0; n < depth; ++n) s.levels.push_back(cp);
  for (int n = 0; n + 1 < depth; ++n)
    s.transitions.push_back(Op::identity(c.space).with_uniform_tail(Rational(1)));
  return s;
}

}  // namespace coadm
